#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace syz {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar used for all coordinates, lengths, energies and
// translation parts. Arbitrary precision, always kept in lowest terms.
using Rat = boost::multiprecision::cpp_rational;

// Parse "p", "-p", "p/q". Denominator must be positive after normalization.
Rat rat_parse(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q" reduced.
std::string rat_str(const Rat& value);

double rat_double(const Rat& value);

Rat rat_abs(const Rat& value);

// Integer power, negative exponents allowed for nonzero base.
Rat rat_pow(const Rat& base, long long exponent);

inline int rat_sign(const Rat& value) {
  return value.sign();
}

}  // namespace syz
