#include "syzkit/laurent.hpp"

#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

namespace {

void check_same_space(const LaurentElement& a, const LaurentElement& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorKind::Invariant, "laurent elements live in different variable counts");
}

long long int_det(const std::vector<std::vector<long long>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  long long acc = 0;
  long long sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<long long>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<long long> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    acc += sign * m[0][j] * int_det(minor);
    sign = -sign;
  }
  return acc;
}

}  // namespace

LaurentElement LaurentElement::constant(std::size_t nvars, const EnergyScalar& c) {
  return monomial(std::vector<long long>(nvars, 0), c);
}

LaurentElement LaurentElement::monomial(std::vector<long long> exponents, const EnergyScalar& c) {
  LaurentElement f(exponents.size());
  if (!c.is_zero()) f.terms_.emplace(std::move(exponents), c);
  return f;
}

EnergyScalar LaurentElement::coefficient(const std::vector<long long>& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? EnergyScalar() : it->second;
}

EnergyScalar LaurentElement::constant_coefficient() const {
  return coefficient(std::vector<long long>(nvars_, 0));
}

LaurentElement LaurentElement::truncated(const Rat& order) const {
  LaurentElement out(nvars_);
  for (const auto& [e, c] : terms_) {
    const EnergyScalar t = c.truncated(order);
    if (!t.is_zero()) out.terms_[e] = t;
  }
  return out;
}

LaurentElement LaurentElement::substitute_inverse(std::size_t var) const {
  if (var >= nvars_) fail(ErrorKind::Domain, "variable index out of range");
  LaurentElement out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<long long> flipped = e;
    flipped[var] = -flipped[var];
    out.terms_[std::move(flipped)] = c;
  }
  return out;
}

LaurentElement LaurentElement::apply_exponent_map(
    const std::vector<std::vector<long long>>& a) const {
  if (a.size() != nvars_)
    fail(ErrorKind::Domain, "exponent map has the wrong number of rows");
  for (const auto& row : a)
    if (row.size() != nvars_) fail(ErrorKind::Domain, "exponent map has a ragged row");
  const long long det = int_det(a);
  if (det != 1 && det != -1) fail(ErrorKind::Domain, "exponent map must be unimodular");
  LaurentElement out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<long long> mapped(nvars_, 0);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (std::size_t j = 0; j < nvars_; ++j) mapped[i] += a[i][j] * e[j];
    out.insert_term(mapped, c);
  }
  return out;
}

std::optional<LaurentElement> LaurentElement::try_divide_monomial(
    const std::vector<long long>& exponents, const Rat& q_shift) const {
  if (exponents.size() != nvars_) fail(ErrorKind::Domain, "divisor exponent length mismatch");
  LaurentElement out(nvars_);
  for (const auto& [e, c] : terms_) {
    std::vector<long long> shifted(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) shifted[i] = e[i] - exponents[i];
    EnergyScalar moved;
    for (const auto& [a, coef] : c.terms()) {
      if (a - q_shift < 0) return std::nullopt;
      moved += EnergyScalar::monomial(coef, a - q_shift);
    }
    out.terms_[std::move(shifted)] = moved;
  }
  return out;
}

LaurentElement LaurentElement::inverse_truncated(const Rat& order) const {
  if (!constant_coefficient().is_one())
    fail(ErrorKind::Truncation, "series inverse needs a unit constant term");
  LaurentElement g = *this;
  g -= LaurentElement::constant(nvars_, EnergyScalar::one());
  for (const auto& [e, c] : g.terms_)
    if (c.min_exponent() <= 0)
      fail(ErrorKind::Truncation, "series inverse needs positive energy order off the unit");
  LaurentElement acc = LaurentElement::constant(nvars_, EnergyScalar::one());
  LaurentElement term = acc;
  const LaurentElement neg = -g;
  while (true) {
    term = (term * neg).truncated(order);
    if (term.is_zero()) break;
    acc += term;
  }
  return acc;
}

std::complex<double> ipow(std::complex<double> z, long long k) {
  if (k < 0) {
    z = 1.0 / z;
    k = -k;
  }
  std::complex<double> acc = 1.0;
  while (k > 0) {
    if (k & 1ll) acc *= z;
    z *= z;
    k >>= 1;
  }
  return acc;
}

std::complex<double> LaurentElement::evaluate(const std::vector<std::complex<double>>& point,
                                              double q_value) const {
  if (point.size() != nvars_) fail(ErrorKind::Domain, "evaluation point has wrong arity");
  for (const auto& z : point)
    if (z == std::complex<double>(0.0, 0.0))
      fail(ErrorKind::Domain, "evaluation requires nonzero coordinates");
  if (!(q_value > 0.0) || !(q_value < 1.0))
    fail(ErrorKind::Domain, "energy parameter must lie in (0,1)");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> mono = c.evaluate(q_value);
    for (std::size_t i = 0; i < nvars_; ++i) mono *= ipow(point[i], e[i]);
    acc += mono;
  }
  return acc;
}

std::string LaurentElement::str(const std::vector<std::string>& var_names) const {
  if (var_names.size() != nvars_) fail(ErrorKind::Domain, "variable name list has wrong arity");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool bare_unit = c.is_one();
    const bool sum = c.terms().size() > 1;
    bool wrote_coeff = false;
    if (!bare_unit) {
      os << (sum ? "(" : "") << c.str() << (sum ? ")" : "");
      wrote_coeff = true;
    }
    bool wrote_var = false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote_coeff || wrote_var) os << "*";
      os << var_names[i];
      if (e[i] != 1) os << "^" << e[i];
      wrote_var = true;
    }
    if (!wrote_var && !wrote_coeff) os << "1";
  }
  return os.str();
}

void LaurentElement::insert_term(const std::vector<long long>& e, const EnergyScalar& c) {
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_[e] = c;
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& other) {
  check_same_space(*this, other);
  for (const auto& [e, c] : other.terms_) insert_term(e, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& other) {
  return *this += -other;
}

LaurentElement operator-(const LaurentElement& a) {
  LaurentElement out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
  return out;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  check_same_space(a, b);
  LaurentElement out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<long long> e(a.nvars_);
      for (std::size_t i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  return out;
}

LaurentElement pow(const LaurentElement& f, long long k) {
  if (k < 0) fail(ErrorKind::Domain, "plain power wants a non-negative exponent");
  LaurentElement acc = LaurentElement::constant(f.nvars(), EnergyScalar::one());
  LaurentElement base = f;
  while (k > 0) {
    if (k & 1ll) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

}  // namespace syz
