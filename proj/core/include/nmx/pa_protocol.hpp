#ifndef NMX_PA_PROTOCOL_HPP
#define NMX_PA_PROTOCOL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nmx/joint_dist.hpp"
#include "nmx/mac.hpp"
#include "nmx/nmext.hpp"
#include "nmx/rng.hpp"

namespace nmx {

// Everything the adversary has seen when it rewrites Bob's
// authentication message.
struct AdversaryView {
    BitString y;
    BitString y_tampered;
    BitString b_prime;
    BitString t_prime;
};

// Deterministic active adversary: a seed tamper map and an
// authentication-message tamper map, both total.
struct AdversaryStrategy {
    std::string name;
    std::function<BitString(const BitString&)> tamper_seed;
    std::function<std::pair<BitString, BitString>(const AdversaryView&)> tamper_auth;
};

// Built-ins: identity, seed-bitflip, replay, tag-forge-random,
// substitute-B. adv_seed feeds the tag forger's randomness.
AdversaryStrategy make_strategy(const std::string& name, std::uint64_t adv_seed = 0);
std::vector<std::string> strategy_names();

struct TranscriptFrame {
    std::string sender;  // "A", "B" or "E"
    std::string label;
    BitString payload;
};

struct SessionResult {
    std::optional<BitString> r_a;  // nullopt = reject
    std::optional<BitString> r_b;
    std::vector<TranscriptFrame> transcript;
    std::uint64_t rng_seed = 0;

    bool accepted() const { return r_a.has_value(); }
    bool q_event() const { return r_a && r_b && *r_a != *r_b; }
    std::string to_json() const;
};

// One protocol session, compiled once per plan.
class PaSession {
public:
    explicit PaSession(const ParamPlan& plan);

    const ParamPlan& plan() const { return plan_; }
    SessionResult run(const BitString& x, const AdversaryStrategy& strategy,
                      std::uint64_t rng_seed) const;

private:
    ParamPlan plan_;
    NmExt nmext_;
    TrevisanExt pa_ext_;
};

SessionResult run_pa(const BitString& x, const AdversaryStrategy& strategy, const ParamPlan& plan,
                     std::uint64_t rng_seed);

struct RobustnessReport {
    std::string strategy;
    std::uint64_t trials = 0;
    std::uint64_t q_count = 0;       // both accept, keys differ
    std::uint64_t reject_count = 0;  // Alice rejected
    std::uint64_t agree_count = 0;   // both accept, keys equal
    std::uint64_t rng_seed = 0;

    double q_rate() const { return trials ? double(q_count) / double(trials) : 0.0; }
    std::string to_json() const;
};

// Monte Carlo over seeded sessions with x drawn from the source's
// X-marginal. Deterministic in (x_source, strategy, plan, trials, seed).
RobustnessReport eval_robustness(const JointDist& x_source, const AdversaryStrategy& strategy,
                                 const ParamPlan& plan, std::uint64_t trials,
                                 std::uint64_t rng_seed);

} // namespace nmx

#endif
