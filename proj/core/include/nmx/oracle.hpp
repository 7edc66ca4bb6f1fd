#ifndef NMX_ORACLE_HPP
#define NMX_ORACLE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "nmx/joint_dist.hpp"
#include "nmx/plan.hpp"

namespace nmx {

// Deterministic tamper map; the oracle checks fixed-point-freeness over
// every value it enumerates.
using TamperFn = std::function<BitString(const BitString&)>;

enum class TamperSide { Y, X };

struct TamperSet {
    TamperSide side = TamperSide::Y;
    std::vector<TamperFn> maps;  // t maps, applied independently

    std::size_t t() const { return maps.size(); }
};

struct MinEntropyResult {
    Rat guess;    // exact optimal guessing probability
    double bits;  // -log2(guess), rendered
};

enum class CondTarget { XGivenE, YGivenE };

MinEntropyResult min_entropy_cond(const JointDist& dist, CondTarget target);

struct NmDistanceReport {
    // Exact distance of (L, L^[t], Y, Y^[t], E) from U ⊗ (L^[t], Y, Y^[t], E).
    Rat joint_y;
    // Two-source variants also report the X-side marginal.
    std::optional<Rat> joint_x;
    // Untampered marginal distance of (L, Y, E) from U ⊗ (Y, E); data
    // processing forces base_y <= joint_y.
    Rat base_y;
    std::optional<Rat> base_x;
    std::uint64_t evaluations = 0;
};

// Exact non-malleability distance on a fully enumerated source. Refuses
// with BudgetError when atoms*(t+1) would exceed plan.enum_budget.
NmDistanceReport nm_distance(const JointDist& source, const TamperSet& tampers,
                             const ParamPlan& plan);

// Exact seeded-extractor distance by full (atom, seed) enumeration:
// strong compares (Ext(X,S), S, E) with U ⊗ (S, E), weak drops S.
Rat ext_distance(const JointDist& source, const ExtSpec& spec, bool strong, std::uint64_t budget);

} // namespace nmx

#endif
