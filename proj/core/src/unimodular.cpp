#include "syzkit/unimodular.hpp"

#include <cstdlib>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

long long gcd_ll(long long a, long long b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_primitive(const IVec2& v) {
  return gcd_ll(v.x, v.y) == 1;
}

IVec2 perp_ccw(const IVec2& v) {
  return {-v.y, v.x};
}

IVec2 negate(const IVec2& v) {
  return {-v.x, -v.y};
}

long long cross(const IVec2& a, const IVec2& b) {
  return a.x * b.y - a.y * b.x;
}

UnimodularMap UnimodularMap::identity() {
  return UnimodularMap{};
}

UnimodularMap UnimodularMap::linear(long long a, long long b, long long c, long long d) {
  UnimodularMap m;
  m.a = a;
  m.b = b;
  m.c = c;
  m.d = d;
  if (m.det() != 1) fail(ErrorKind::Invariant, "linear part must have determinant 1");
  return m;
}

bool UnimodularMap::is_identity() const {
  return a == 1 && b == 0 && c == 0 && d == 1 && tx == 0 && ty == 0;
}

bool UnimodularMap::linear_part_equals(const UnimodularMap& other) const {
  return a == other.a && b == other.b && c == other.c && d == other.d;
}

IVec2 UnimodularMap::apply(const IVec2& v) const {
  return {a * v.x + b * v.y, c * v.x + d * v.y};
}

void UnimodularMap::apply_point(const Rat& x, const Rat& y, Rat& ox, Rat& oy) const {
  ox = Rat(a) * x + Rat(b) * y + tx;
  oy = Rat(c) * x + Rat(d) * y + ty;
}

UnimodularMap UnimodularMap::inverse() const {
  UnimodularMap m;
  m.a = d;
  m.b = -b;
  m.c = -c;
  m.d = a;
  m.tx = -(Rat(m.a) * tx + Rat(m.b) * ty);
  m.ty = -(Rat(m.c) * tx + Rat(m.d) * ty);
  return m;
}

UnimodularMap UnimodularMap::transposed() const {
  UnimodularMap m;
  m.a = a;
  m.b = c;
  m.c = b;
  m.d = d;
  return m;
}

UnimodularMap UnimodularMap::power(long long n) const {
  if (n < 0) return inverse().power(-n);
  UnimodularMap acc = identity();
  UnimodularMap base = *this;
  while (n > 0) {
    if (n & 1ll) acc = compose(acc, base);
    base = compose(base, base);
    n >>= 1;
  }
  return acc;
}

std::string UnimodularMap::str() const {
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  if (tx != 0 || ty != 0) os << "+(" << rat_str(tx) << "," << rat_str(ty) << ")";
  return os.str();
}

UnimodularMap compose(const UnimodularMap& f, const UnimodularMap& g) {
  UnimodularMap m;
  m.a = f.a * g.a + f.b * g.c;
  m.b = f.a * g.b + f.b * g.d;
  m.c = f.c * g.a + f.d * g.c;
  m.d = f.c * g.b + f.d * g.d;
  m.tx = Rat(f.a) * g.tx + Rat(f.b) * g.ty + f.tx;
  m.ty = Rat(f.c) * g.tx + Rat(f.d) * g.ty + f.ty;
  return m;
}

UnimodularMap focus_focus_monodromy(const IVec2& v, long long multiplicity) {
  if (!is_primitive(v)) fail(ErrorKind::Invariant, "vanishing cycle must be primitive");
  if (multiplicity < 1) fail(ErrorKind::Domain, "multiplicity must be positive");
  const IVec2 w = perp_ccw(v);
  UnimodularMap m;
  m.a = 1 + multiplicity * v.x * w.x;
  m.b = multiplicity * v.x * w.y;
  m.c = multiplicity * v.y * w.x;
  m.d = 1 + multiplicity * v.y * w.y;
  return m;
}

UnimodularMap normal_degree_to_monodromy(long long degree) {
  UnimodularMap m;
  m.b = degree;
  return m;
}

std::optional<UnimodularMap> find_conjugator(const UnimodularMap& a,
                                             const UnimodularMap& b,
                                             long long bound) {
  for (long long p = -bound; p <= bound; ++p)
    for (long long q = -bound; q <= bound; ++q)
      for (long long r = -bound; r <= bound; ++r)
        for (long long s = -bound; s <= bound; ++s) {
          if (p * s - q * r != 1) continue;
          UnimodularMap c;
          c.a = p;
          c.b = q;
          c.c = r;
          c.d = s;
          if (compose(compose(c, a), c.inverse()).linear_part_equals(b)) return c;
        }
  return std::nullopt;
}

}  // namespace syz
