#pragma once

// Laurent polynomials in n torus variables over EnergyScalar coefficients.
// Terms are keyed by integer exponent vectors in lexicographic order, which
// fixes the summation and printing order once and for all.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "syzkit/energy.hpp"

namespace syz {

class LaurentElement {
 public:
  LaurentElement() = default;
  explicit LaurentElement(std::size_t nvars) : nvars_(nvars) {}
  static LaurentElement constant(std::size_t nvars, const EnergyScalar& c);
  static LaurentElement monomial(std::vector<long long> exponents, const EnergyScalar& c);

  std::size_t nvars() const { return nvars_; }
  const std::map<std::vector<long long>, EnergyScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  EnergyScalar coefficient(const std::vector<long long>& exponents) const;
  EnergyScalar constant_coefficient() const;

  // Reduce every coefficient mod q^order and drop emptied terms.
  LaurentElement truncated(const Rat& order) const;

  // z_var -> z_var^{-1}.
  LaurentElement substitute_inverse(std::size_t var) const;

  // Exponent-lattice substitution z^m -> z^{A m); A integer with |det| = 1.
  LaurentElement apply_exponent_map(const std::vector<std::vector<long long>>& a) const;

  // Divide by the monomial q^{q_shift} z^{exponents}; nullopt when a
  // coefficient would pick up a negative q-exponent.
  std::optional<LaurentElement> try_divide_monomial(const std::vector<long long>& exponents,
                                                    const Rat& q_shift) const;

  // Geometric-series inverse mod q^order; requires unit constant term and
  // positive q-order for every other term.
  LaurentElement inverse_truncated(const Rat& order) const;

  std::complex<double> evaluate(const std::vector<std::complex<double>>& point,
                                double q_value) const;

  std::string str(const std::vector<std::string>& var_names) const;

  LaurentElement& operator+=(const LaurentElement& other);
  LaurentElement& operator-=(const LaurentElement& other);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator-(const LaurentElement& a);
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  bool operator==(const LaurentElement&) const = default;

 private:
  void insert_term(const std::vector<long long>& e, const EnergyScalar& c);

  std::size_t nvars_ = 0;
  std::map<std::vector<long long>, EnergyScalar> terms_;
};

LaurentElement pow(const LaurentElement& f, long long k);  // k >= 0

// Integer power of a complex number by square-and-multiply; negative k
// inverts. Deterministic, unlike going through the complex log.
std::complex<double> ipow(std::complex<double> z, long long k);

}  // namespace syz
