#ifndef NMX_PLAN_JSON_HPP
#define NMX_PLAN_JSON_HPP

#include <string>

#include "nmx/plan.hpp"

namespace nmx {

std::string plan_to_json(const ParamPlan& plan);
// Parses and re-validates; throws StructuralError on malformed input and
// PlanError on wiring violations.
ParamPlan plan_from_json(const std::string& text);

} // namespace nmx

#endif
