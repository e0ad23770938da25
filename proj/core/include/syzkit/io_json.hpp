#pragma once

// JSON serialization for every artifact the CLI can emit and parsers for the
// data documents it can consume. Output is canonical: sorted keys, two-space
// indent, rationals as "p/q" strings, one trailing newline; identical values
// serialize to identical bytes. Parsers reject malformed documents with an
// input error naming the offending field.

#include <string>
#include <vector>

#include "syzkit/affine_base.hpp"
#include "syzkit/catalog.hpp"
#include "syzkit/critical.hpp"
#include "syzkit/errors.hpp"
#include "syzkit/local_model.hpp"
#include "syzkit/periods.hpp"
#include "syzkit/polytope.hpp"
#include "syzkit/quad_diff.hpp"
#include "syzkit/tropical.hpp"
#include "syzkit/wallcross.hpp"

namespace syz {

std::string base_to_json(const AffineBase& b);
std::string pair_to_json(const BasePair& p);
std::string double_to_json(const DoubledBase& d);
std::string polytope_to_json(const MomentPolytope& p);
std::string discs_to_json(const std::vector<DiscClass>& classes);
std::string laurent_to_json(const LaurentElement& x,
                            const std::vector<std::string>& var_names);
std::string wall_scenario_to_json(const WallScenario& s);
std::string leaf_scenario_to_json(const LeafScenario& s);

std::string consistency_to_json(const ConsistencyReport& r);
std::string census_to_json(const SeamCensus& c);
std::string rays_to_json(const std::vector<Ray>& rays);
std::string alignments_to_json(const std::vector<Alignment>& alignments);
std::string critical_to_json(const CriticalSearchResult& r);
std::string trajectory_to_json(const Trajectory& t);
std::string trajectories_to_json(const std::string& name,
                                 const std::vector<Trajectory>& traces);
std::string periods_to_json(const PeriodPair& p);
std::string local_model_to_json(const LocalModelReport& r);
std::string error_to_json(const Error& e);

AffineBase base_from_json(const std::string& text);
BasePair pair_from_json(const std::string& text);
DoubledBase double_from_json(const std::string& text);
MomentPolytope polytope_from_json(const std::string& text);
std::vector<DiscClass> discs_from_json(const std::string& text);
WallScenario wall_scenario_from_json(const std::string& text);
LeafScenario leaf_scenario_from_json(const std::string& text);

}  // namespace syz
