#ifndef NMX_TWO_SOURCE_HPP
#define NMX_TWO_SOURCE_HPP

#include "nmx/nmext.hpp"

namespace nmx {

// Advice for the two-source pipeline: G = X1 ∘ Y1 ∘ ECC(X)_R ∘ ECC(Y)_R
// (sampled positions in the t-variant).
struct Advice2 {
    BitString bits;
    BitString x1, y1;
    BitString ecc_x, ecc_y;
    std::uint64_t index = 0;  // R
};

// Two-source pipeline: inner-product advice and initial block, then the
// shared alternating-extraction engine with X as the long source.
class TwoNmExt {
public:
    explicit TwoNmExt(const ParamPlan& plan);

    const ParamPlan& plan() const { return plan_; }
    const CorrelationEngine& engine() const { return engine_; }

    Advice2 advice_gen2(const BitString& x, const BitString& y, NmExtTrace* trace = nullptr) const;
    BitString compute(const BitString& x, const BitString& y, NmExtTrace* trace = nullptr) const;

private:
    ParamPlan plan_;
    CorrelationEngine engine_;
};

Advice2 advice_gen2(const BitString& x, const BitString& y, const ParamPlan& plan);
std::pair<BitString, NmExtTrace> two_nmext(const BitString& x, const BitString& y,
                                           const ParamPlan& plan);

} // namespace nmx

#endif
