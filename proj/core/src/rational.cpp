#include "syzkit/rational.hpp"

#include "syzkit/errors.hpp"

namespace syz {

Rat rat_parse(const std::string& text) {
  if (text.empty()) fail(ErrorKind::Input, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::Input, "zero denominator in '" + text + "'");
    return Rat(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorKind::Input, "malformed rational literal '" + text + "'");
  }
}

std::string rat_str(const Rat& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double rat_double(const Rat& value) {
  return value.convert_to<double>();
}

Rat rat_abs(const Rat& value) {
  return value < 0 ? Rat(-value) : value;
}

Rat rat_pow(const Rat& base, long long exponent) {
  if (exponent == 0) return Rat(1);
  if (base == 0 && exponent < 0) fail(ErrorKind::Domain, "0 has no negative powers");
  Rat b = exponent > 0 ? base : Rat(1) / base;
  unsigned long long n = exponent > 0 ? exponent : -exponent;
  Rat acc(1);
  while (n > 0) {
    if (n & 1ull) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::Topology: return "topology";
    case ErrorKind::Presentation: return "presentation";
    case ErrorKind::Placement: return "placement";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Geometry: return "geometry";
    case ErrorKind::Truncation: return "truncation-required";
    case ErrorKind::Path: return "path";
    case ErrorKind::Invariant: return "invariant";
    case ErrorKind::Input: return "input";
  }
  return "unknown";
}

}  // namespace syz
