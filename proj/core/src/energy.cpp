#include "syzkit/energy.hpp"

#include <cmath>
#include <sstream>

#include "syzkit/errors.hpp"

namespace syz {

EnergyScalar::EnergyScalar(const Rat& constant) {
  if (constant != 0) terms_[Rat(0)] = constant;
}

EnergyScalar EnergyScalar::monomial(const Rat& coefficient, const Rat& exponent) {
  EnergyScalar s;
  if (coefficient != 0) s.terms_[exponent] = coefficient;
  return s;
}

bool EnergyScalar::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rat EnergyScalar::min_exponent() const {
  if (terms_.empty()) fail(ErrorKind::Domain, "zero energy scalar has no minimal exponent");
  return terms_.begin()->first;
}

EnergyScalar EnergyScalar::truncated(const Rat& order) const {
  EnergyScalar out;
  for (const auto& [a, c] : terms_) {
    if (a >= order) break;
    out.terms_[a] = c;
  }
  return out;
}

double EnergyScalar::evaluate(double q_value) const {
  double acc = 0.0;
  for (const auto& [a, c] : terms_) acc += rat_double(c) * std::pow(q_value, rat_double(a));
  return acc;
}

double EnergyScalar::evaluate() const { return evaluate(std::exp(-1.0)); }

std::string EnergyScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    const Rat mag = first ? c : rat_abs(c);
    first = false;
    if (a == 0) {
      os << rat_str(mag);
    } else {
      if (mag != 1) os << rat_str(mag) << "*";
      os << "q";
      if (a != 1) os << "^" << rat_str(a);
    }
  }
  return os.str();
}

EnergyScalar& EnergyScalar::operator+=(const EnergyScalar& other) {
  for (const auto& [a, c] : other.terms_) {
    auto it = terms_.find(a);
    if (it == terms_.end()) {
      terms_[a] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

EnergyScalar& EnergyScalar::operator-=(const EnergyScalar& other) { return *this += -other; }

EnergyScalar operator-(const EnergyScalar& a) {
  EnergyScalar out;
  for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
  return out;
}

EnergyScalar operator*(const EnergyScalar& a, const EnergyScalar& b) {
  EnergyScalar out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      const Rat e = ea + eb;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        if (ca * cb != 0) out.terms_[e] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

}  // namespace syz
