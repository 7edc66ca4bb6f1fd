#ifndef NMX_NMEXT_HPP
#define NMX_NMEXT_HPP

#include <optional>
#include <vector>

#include "nmx/bitstring.hpp"
#include "nmx/plan.hpp"
#include "nmx/trevisan.hpp"

namespace nmx {

// Advice string G = Y1 ∘ ECC(Y)_I for the seeded variant (the t-variant
// replaces the single symbol by the sampled ones).
struct AdviceString {
    BitString bits;     // length a
    BitString y1;       // d1 bits
    BitString ecc_sym;  // log q (seeded) or t1*log q (t-variant) bits
};

struct FfRoundTrace {
    BitString z_in;
    BitString zs, a, c, b;
    BitString zbar;
    BitString zbars, abar, cbar, bbar;
    BitString o;
    int g = 0;
};

// Every intermediate of one pipeline evaluation.
struct NmExtTrace {
    BitString y1;
    std::uint64_t index = 0;  // I or R as a 1-based position
    BitString advice;
    BitString y2;          // seeded variants only
    BitString t_src;       // T (seeded) — the alternating partner of Y
    BitString z0;
    std::vector<FfRoundTrace> rounds;
    BitString s;
    BitString l;
    // two-source extras
    BitString x1, x2;
};

// Alternating-extraction engine shared by FF and 2FF: the only
// difference between them is which register plays the long source.
class CorrelationEngine {
public:
    explicit CorrelationEngine(const ParamPlan& plan);

    const ParamPlan& plan() const { return plan_; }

    // One flip-flop round, Algorithm steps 1-4.
    BitString flip_flop(const BitString& y, const BitString& long_src, const BitString& z, int g,
                        FfRoundTrace* trace = nullptr) const;

    // Runs |advice| rounds from z0 and applies Ext4: S = Ext4(y, Z_a).
    BitString breaker(const BitString& y, const BitString& long_src, const BitString& z0,
                      const BitString& advice, std::vector<FfRoundTrace>* traces = nullptr) const;

    const TrevisanExt& ext(ExtRole role) const;

private:
    // Value tables for the per-call fixed sources (y for Ext1/Ext4, the
    // long source for Ext3) persist across rounds; the z tables are
    // rebuilt per round.
    struct Tables {
        std::vector<std::uint32_t> y1, y4, long3, z2;
    };
    BitString ff_impl(const BitString& y, const BitString& long_src, const BitString& z, int g,
                      FfRoundTrace* trace, Tables& tables) const;

    ParamPlan plan_;
    std::vector<std::pair<ExtRole, TrevisanExt>> exts_;
};

// Seeded pipeline: advice generator, correlation breaker with advice,
// output extraction. Construct once per plan; evaluation is pure.
class NmExt {
public:
    explicit NmExt(const ParamPlan& plan);

    const ParamPlan& plan() const { return plan_; }
    const CorrelationEngine& engine() const { return engine_; }

    AdviceString advice_gen(const BitString& x, const BitString& y, NmExtTrace* trace = nullptr) const;
    BitString adv_cb(const BitString& y, const BitString& t_src, const AdviceString& g,
                     NmExtTrace* trace = nullptr) const;
    BitString compute(const BitString& x, const BitString& y, NmExtTrace* trace = nullptr) const;

private:
    ParamPlan plan_;
    CorrelationEngine engine_;
};

std::string trace_to_json(const NmExtTrace& trace);

// Free-function faces.
AdviceString advice_gen(const BitString& x, const BitString& y, const ParamPlan& plan);
BitString flip_flop(const BitString& y, const BitString& t_src, const BitString& z, int g,
                    const ParamPlan& plan);
BitString adv_cb(const BitString& y, const BitString& t_src, const AdviceString& g,
                 const ParamPlan& plan);
std::pair<BitString, NmExtTrace> nmext(const BitString& x, const BitString& y, const ParamPlan& plan);

} // namespace nmx

#endif
