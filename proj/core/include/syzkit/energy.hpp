#pragma once

// Finite formal sums sum_i c_i q^{a_i} with rational c_i, a_i, where q
// stands for exp(-1). A disc of area a contributes q^a, so areas stay exact
// until numeric evaluation.

#include <map>
#include <string>

#include "syzkit/rational.hpp"

namespace syz {

class EnergyScalar {
 public:
  EnergyScalar() = default;
  explicit EnergyScalar(const Rat& constant);
  static EnergyScalar monomial(const Rat& coefficient, const Rat& exponent);
  static EnergyScalar one() { return EnergyScalar(Rat(1)); }

  const std::map<Rat, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // Smallest exponent carrying a nonzero coefficient; domain error when zero.
  Rat min_exponent() const;
  // Drop every term with exponent >= order (reduction mod q^order).
  EnergyScalar truncated(const Rat& order) const;

  double evaluate(double q_value) const;
  double evaluate() const;  // at q = exp(-1)

  std::string str() const;

  EnergyScalar& operator+=(const EnergyScalar& other);
  EnergyScalar& operator-=(const EnergyScalar& other);
  friend EnergyScalar operator+(EnergyScalar a, const EnergyScalar& b) { return a += b; }
  friend EnergyScalar operator-(EnergyScalar a, const EnergyScalar& b) { return a -= b; }
  friend EnergyScalar operator-(const EnergyScalar& a);
  friend EnergyScalar operator*(const EnergyScalar& a, const EnergyScalar& b);
  bool operator==(const EnergyScalar&) const = default;

 private:
  std::map<Rat, Rat> terms_;  // exponent -> nonzero coefficient
};

}  // namespace syz
