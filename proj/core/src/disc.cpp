#include "syzkit/disc.hpp"

#include "syzkit/errors.hpp"

namespace syz {

long long maslov_index(const DiscClass& beta) {
  if (beta.divisor_intersection < 0)
    fail(ErrorKind::Domain, "divisor intersection must be non-negative");
  return 2 * beta.divisor_intersection;
}

LaurentElement disc_weight(const DiscClass& beta) {
  if (beta.area <= 0) fail(ErrorKind::Domain, "disc class needs positive area");
  return LaurentElement::monomial(beta.boundary_class,
                                  EnergyScalar::monomial(Rat(1), beta.area));
}

LaurentElement superpotential_from_discs(const std::vector<DiscClass>& classes) {
  if (classes.empty()) fail(ErrorKind::Domain, "no disc classes given");
  const std::size_t nvars = classes.front().boundary_class.size();
  LaurentElement w(nvars);
  for (const auto& beta : classes) {
    if (beta.boundary_class.size() != nvars)
      fail(ErrorKind::Invariant, "disc classes mix fiber torus ranks");
    if (beta.area <= 0) fail(ErrorKind::Domain, "disc class needs positive area");
    if (beta.count == 0) continue;
    w += LaurentElement::monomial(
        beta.boundary_class, EnergyScalar::monomial(Rat(beta.count), beta.area));
  }
  return w;
}

}  // namespace syz
