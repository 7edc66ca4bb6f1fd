#ifndef NMX_T_TAMPER_HPP
#define NMX_T_TAMPER_HPP

#include "nmx/nmext.hpp"
#include "nmx/two_source.hpp"

namespace nmx {

// t-tampering seeded pipeline: the advice spreads over t1 sampled
// codeword positions, everything else matches the seeded dataflow at the
// t-scaled widths.
class TNmExt {
public:
    explicit TNmExt(const ParamPlan& plan);

    const ParamPlan& plan() const { return plan_; }
    const CorrelationEngine& engine() const { return engine_; }

    AdviceString t_advice_gen(const BitString& x, const BitString& y,
                              NmExtTrace* trace = nullptr) const;
    BitString compute(const BitString& x, const BitString& y, NmExtTrace* trace = nullptr) const;

private:
    ParamPlan plan_;
    CorrelationEngine engine_;
};

class T2NmExt {
public:
    explicit T2NmExt(const ParamPlan& plan);

    const ParamPlan& plan() const { return plan_; }
    const CorrelationEngine& engine() const { return engine_; }

    Advice2 t_advice_gen2(const BitString& x, const BitString& y,
                          NmExtTrace* trace = nullptr) const;
    BitString compute(const BitString& x, const BitString& y, NmExtTrace* trace = nullptr) const;

private:
    ParamPlan plan_;
    CorrelationEngine engine_;
};

AdviceString t_advice_gen(const BitString& x, const BitString& y, const ParamPlan& plan);
std::pair<BitString, NmExtTrace> t_nmext(const BitString& x, const BitString& y,
                                         const ParamPlan& plan);
std::pair<BitString, NmExtTrace> t_2nmext(const BitString& x, const BitString& y,
                                          const ParamPlan& plan);

} // namespace nmx

#endif
