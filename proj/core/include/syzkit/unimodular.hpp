#pragma once

#include <array>
#include <optional>
#include <string>

#include "syzkit/rational.hpp"

namespace syz {

// Primitive integer directions in the fiber lattice and the chart lattice.
struct IVec2 {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const IVec2&, const IVec2&) = default;
};

long long gcd_ll(long long a, long long b);
bool is_primitive(const IVec2& v);
// Counterclockwise quarter turn: (x, y) -> (-y, x).
IVec2 perp_ccw(const IVec2& v);
IVec2 negate(const IVec2& v);
long long cross(const IVec2& a, const IVec2& b);

// Lattice automorphism together with a rational translation, acting as
// x -> A x + t. Determinant is required to be +1.
struct UnimodularMap {
  // Row-major linear part.
  long long a = 1, b = 0;
  long long c = 0, d = 1;
  Rat tx = 0, ty = 0;

  static UnimodularMap identity();
  static UnimodularMap linear(long long a, long long b, long long c, long long d);

  long long det() const { return a * d - b * c; }
  long long trace() const { return a + d; }
  bool is_identity() const;
  bool linear_part_equals(const UnimodularMap& other) const;

  IVec2 apply(const IVec2& v) const;  // linear part only (directions)
  void apply_point(const Rat& x, const Rat& y, Rat& ox, Rat& oy) const;

  UnimodularMap inverse() const;
  UnimodularMap transposed() const;  // linear part transposed, translation dropped
  UnimodularMap power(long long n) const;

  std::string str() const;

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

// f(g(x)) composition.
UnimodularMap compose(const UnimodularMap& f, const UnimodularMap& g);

// Monodromy of a focus-focus singularity with vanishing cycle v and
// multiplicity k: I + k * v * (v-perp)^T. Fixes v, trace 2, determinant 1.
UnimodularMap focus_focus_monodromy(const IVec2& v, long long multiplicity = 1);

// [[1, d], [0, 1]]: boundary transport for a disc whose compactifying divisor
// has normal degree d.
UnimodularMap normal_degree_to_monodromy(long long degree);

// Exhaustive search for C with det C = 1 and C A C^-1 = B, entries bounded by
// `bound`. Used to certify conjugacy classes in tests and reports.
std::optional<UnimodularMap> find_conjugator(const UnimodularMap& a,
                                             const UnimodularMap& b,
                                             long long bound = 3);

}  // namespace syz
