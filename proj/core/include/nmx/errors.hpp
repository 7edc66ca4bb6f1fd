#ifndef NMX_ERRORS_HPP
#define NMX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nmx {

// Base for everything the library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed call: mismatched widths, out-of-range index, bad hex, ...
struct StructuralError : Error {
    explicit StructuralError(const std::string& msg) : Error(msg) {}
};

// Infeasible or inconsistent parameter plan. The message names the
// violated constraint and, for wiring failures, producer and consumer.
struct PlanError : Error {
    explicit PlanError(const std::string& msg) : Error(msg) {}
};

// An exact-enumeration request exceeded the plan's budget. Refusing is
// mandatory: the oracle never silently falls back to sampling.
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};

} // namespace nmx

#endif
