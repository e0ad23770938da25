#pragma once

// The built-in worked examples: every CLI subcommand and most tests start
// from one of these nine named entries. Accessors throw a not-found error
// when an entry does not carry the requested artifact, listing what exists.

#include <string>
#include <vector>

#include "syzkit/affine_base.hpp"
#include "syzkit/disc.hpp"
#include "syzkit/polytope.hpp"
#include "syzkit/quad_diff.hpp"
#include "syzkit/wallcross.hpp"

namespace syz {

std::vector<std::string> list_examples();

AffineBase catalog_base(const std::string& name);       // cp1, elliptic, cp2-cubic, res-e1
BasePair catalog_pair(const std::string& name);         // same four, built over one chart
DoubledBase catalog_double(const std::string& name);    // cp1, k3-double, sextic-double, odp-k3
MomentPolytope catalog_polytope(const std::string& name);  // cp1, toric-cp2
std::vector<DiscClass> catalog_discs(const std::string& name);  // cp1
LeafScenario catalog_leaf_scenario(const std::string& name);    // cp1
WallScenario catalog_wall_scenario(const std::string& name);    // blowup-wall

}  // namespace syz
