#ifndef NMX_PRESETS_HPP
#define NMX_PRESETS_HPP

#include <string>
#include <vector>

#include "nmx/plan.hpp"

namespace nmx {

// Committed micro plans used by the regression and verification suites.
// Names: seeded-s{1,2,3}, 2src-t{1,2,3}, t-seeded-u{1,2,3},
// t-2src-v{1,2,3}, pa-m2, pa-m8.
ParamPlan micro_preset(const std::string& name);

std::vector<std::string> micro_preset_names();

} // namespace nmx

#endif
