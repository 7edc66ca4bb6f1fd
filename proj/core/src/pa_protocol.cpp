#include "nmx/pa_protocol.hpp"
#include "nmx/errors.hpp"

#include <json.hpp>

namespace nmx {

namespace {

// Order-sensitive 64-bit fold of arbitrary-length bit strings.
std::uint64_t fold_bits(const BitString& b) {
    std::uint64_t acc = 0x243f6a8885a308d3ULL ^ b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
        acc = (acc * 0x100000001b3ULL) ^ static_cast<std::uint64_t>(b.bit(i));
    return acc;
}

} // namespace

AdversaryStrategy make_strategy(const std::string& name, std::uint64_t adv_seed) {
    AdversaryStrategy s;
    s.name = name;
    auto passthrough = [](const AdversaryView& v) { return std::make_pair(v.b_prime, v.t_prime); };
    auto keep_seed = [](const BitString& y) { return y; };

    if (name == "identity") {
        s.tamper_seed = keep_seed;
        s.tamper_auth = passthrough;
    } else if (name == "seed-bitflip") {
        s.tamper_seed = [](const BitString& y) {
            BitString y2 = y;
            y2.set_bit(0, 1 - y2.bit(0));
            return y2;
        };
        s.tamper_auth = passthrough;
    } else if (name == "replay") {
        // Replays a stale message: Bob's slot gets the front of the seed
        // Alice already sent, with the old tag attached.
        s.tamper_seed = keep_seed;
        s.tamper_auth = [](const AdversaryView& v) {
            return std::make_pair(v.y.prefix(v.b_prime.size()), v.t_prime);
        };
    } else if (name == "tag-forge-random") {
        s.tamper_seed = keep_seed;
        s.tamper_auth = [adv_seed](const AdversaryView& v) {
            BitString b = v.b_prime;
            b.set_bit(b.size() - 1, 1 - b.bit(b.size() - 1));
            // forged tag drawn from the adversary's own seeded stream,
            // keyed by everything it has seen
            std::uint64_t ctx = CtrRng::derive(
                adv_seed, fold_bits(v.b_prime) ^ fold_bits(v.t_prime) ^ fold_bits(v.y));
            BitString t = CtrRng(ctx).bits(v.t_prime.size());
            return std::make_pair(b, t);
        };
    } else if (name == "substitute-B") {
        s.tamper_seed = keep_seed;
        s.tamper_auth = [](const AdversaryView& v) {
            BitString b = v.b_prime;
            b.set_bit(0, 1 - b.bit(0));
            return std::make_pair(b, v.t_prime);
        };
    } else {
        throw StructuralError("unknown adversary strategy '" + name + "'");
    }
    return s;
}

std::vector<std::string> strategy_names() {
    return {"identity", "seed-bitflip", "replay", "tag-forge-random", "substitute-B"};
}

std::string SessionResult::to_json() const {
    nlohmann::json j;
    j["accepted"] = accepted();
    j["r_a"] = r_a ? r_a->to_hex() : "bot";
    j["r_b"] = r_b ? r_b->to_hex() : "bot";
    j["rng_seed"] = rng_seed;
    j["transcript"] = nlohmann::json::array();
    for (const auto& f : transcript)
        j["transcript"].push_back({{"sender", f.sender}, {"label", f.label}, {"payload", f.payload.to_hex()}});
    return j.dump(2);
}

PaSession::PaSession(const ParamPlan& plan)
    : plan_(plan), nmext_(plan), pa_ext_(plan.spec(ExtRole::PAExt)) {
    if (plan_.mac_bits == 0)
        throw PlanError("PaSession: plan carries no MAC width (mac_bits = 0)");
}

SessionResult PaSession::run(const BitString& x, const AdversaryStrategy& strategy,
                             std::uint64_t rng_seed) const {
    if (x.size() != plan_.n)
        throw StructuralError("run_pa: |x| = " + std::to_string(x.size()) + " != n");
    const std::size_t m = plan_.mac_bits;

    SessionResult res;
    res.rng_seed = rng_seed;
    CtrRng rng(rng_seed);

    BitString y = rng.bits(plan_.d);
    res.transcript.push_back({"A", "Y", y});
    BitString y_t = strategy.tamper_seed(y);
    res.transcript.push_back({"E", "Y'", y_t});

    BitString s_key = nmext_.compute(x, y).prefix(2 * m);
    BitString s_key_t = (y_t == y) ? s_key : nmext_.compute(x, y_t).prefix(2 * m);

    BitString b_prime = rng.bits(m);
    BitString r_b = pa_ext_.extract(x, b_prime);
    BitString t_prime = mac(MacKey::from_bits(s_key_t), b_prime);
    res.transcript.push_back({"B", "B'", b_prime});
    res.transcript.push_back({"B", "T'", t_prime});
    res.r_b = r_b;

    AdversaryView view{y, y_t, b_prime, t_prime};
    auto [b_msg, t_msg] = strategy.tamper_auth(view);
    if (b_msg.size() != m || t_msg.size() != m)
        throw StructuralError("strategy '" + strategy.name + "' emitted wrong message widths");
    res.transcript.push_back({"E", "B", b_msg});
    res.transcript.push_back({"E", "T", t_msg});

    if (t_msg == mac(MacKey::from_bits(s_key), b_msg)) res.r_a = pa_ext_.extract(x, b_msg);
    return res;
}

SessionResult run_pa(const BitString& x, const AdversaryStrategy& strategy, const ParamPlan& plan,
                     std::uint64_t rng_seed) {
    return PaSession(plan).run(x, strategy, rng_seed);
}

std::string RobustnessReport::to_json() const {
    nlohmann::json j;
    j["strategy"] = strategy;
    j["trials"] = trials;
    j["q_count"] = q_count;
    j["reject_count"] = reject_count;
    j["agree_count"] = agree_count;
    j["q_rate"] = q_rate();
    j["rng_seed"] = rng_seed;
    return j.dump(2);
}

RobustnessReport eval_robustness(const JointDist& x_source, const AdversaryStrategy& strategy,
                                 const ParamPlan& plan, std::uint64_t trials,
                                 std::uint64_t rng_seed) {
    if (trials < 1) throw StructuralError("eval_robustness: trials >= 1 required");
    PaSession session(plan);

    // X-marginal as cumulative weights for inverse sampling.
    std::vector<std::pair<BitString, double>> marginal;
    {
        std::map<std::string, std::pair<BitString, Rat>> acc;
        for (const auto& a : x_source.atoms()) {
            auto [it, fresh] = acc.try_emplace(a.x.to_hex(), a.x, Rat(0));
            it->second.second += a.p;
        }
        for (const auto& [key, xe] : acc) marginal.emplace_back(xe.first, rat_double(xe.second));
    }

    RobustnessReport rep;
    rep.strategy = strategy.name;
    rep.trials = trials;
    rep.rng_seed = rng_seed;
    CtrRng picker(CtrRng::derive(rng_seed, 0x5a5a));
    for (std::uint64_t i = 0; i < trials; ++i) {
        double u = double(picker.next() >> 11) * 0x1.0p-53;
        const BitString* x = &marginal.back().first;
        double cum = 0;
        for (const auto& [bits, w] : marginal) {
            cum += w;
            if (u < cum) {
                x = &bits;
                break;
            }
        }
        SessionResult r = session.run(*x, strategy, CtrRng::derive(rng_seed, i));
        if (r.q_event()) ++rep.q_count;
        else if (!r.accepted()) ++rep.reject_count;
        else ++rep.agree_count;
    }
    return rep;
}

} // namespace nmx
