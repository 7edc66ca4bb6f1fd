#include "nmx/two_source.hpp"
#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"
#include "nmx/reed_solomon.hpp"

namespace nmx {

TwoNmExt::TwoNmExt(const ParamPlan& plan) : plan_(plan), engine_(plan) {
    if (plan_.variant != Variant::TwoSource)
        throw PlanError("TwoNmExt requires a two_source plan, got " + to_string(plan_.variant));
}

Advice2 TwoNmExt::advice_gen2(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    if (x.size() != plan_.n || y.size() != plan_.n)
        throw StructuralError("advice_gen2: both inputs must have n = " + std::to_string(plan_.n) +
                              " bits");

    BitString x1 = x.prefix(3 * plan_.k);
    BitString y1 = y.prefix(3 * plan_.k);
    unsigned wv = static_cast<unsigned>(plan_.ip1_width());
    FieldElem r = ip(to_field_vec(x1, wv), to_field_vec(y1, wv));
    std::uint64_t index = static_cast<std::uint64_t>(r.value) + 1;

    Advice2 adv;
    adv.x1 = x1;
    adv.y1 = y1;
    adv.index = index;
    adv.ecc_x = ecc_symbol(x, index, plan_.ecc_width, plan_.v);
    adv.ecc_y = ecc_symbol(y, index, plan_.ecc_width, plan_.v);
    adv.bits = x1.concat(y1).concat(adv.ecc_x).concat(adv.ecc_y);
    if (adv.bits.size() != plan_.a)
        throw PlanError("advice_gen2: |G| = " + std::to_string(adv.bits.size()) + " != a = " +
                        std::to_string(plan_.a));
    if (trace) {
        trace->x1 = x1;
        trace->y1 = y1;
        trace->index = index;
        trace->advice = adv.bits;
    }
    return adv;
}

BitString TwoNmExt::compute(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    Advice2 g = advice_gen2(x, y, trace);

    BitString x2 = x.prefix(3 * plan_.k * plan_.k * plan_.k);
    BitString y2 = y.prefix(3 * plan_.k * plan_.k * plan_.k);
    unsigned wh = static_cast<unsigned>(plan_.ip2_width());
    FieldElem z0e = ip(to_field_vec(x2, wh), to_field_vec(y2, wh));
    BitString z0 = BitString::from_uint(z0e.value, plan_.h);
    if (trace) {
        trace->x2 = x2;
        trace->y2 = y2;
        trace->z0 = z0;
    }

    BitString s = engine_.breaker(y, x, z0, g.bits, trace ? &trace->rounds : nullptr);
    BitString l = engine_.ext(ExtRole::Ext6).extract(x, s);
    if (trace) {
        trace->s = s;
        trace->l = l;
    }
    return l;
}

Advice2 advice_gen2(const BitString& x, const BitString& y, const ParamPlan& plan) {
    return TwoNmExt(plan).advice_gen2(x, y);
}

std::pair<BitString, NmExtTrace> two_nmext(const BitString& x, const BitString& y,
                                           const ParamPlan& plan) {
    NmExtTrace trace;
    TwoNmExt pipeline(plan);
    BitString l = pipeline.compute(x, y, &trace);
    return {l, trace};
}

} // namespace nmx
