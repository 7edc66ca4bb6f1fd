#include "nmx/t_tamper.hpp"
#include "nmx/errors.hpp"
#include "nmx/gf2.hpp"
#include "nmx/reed_solomon.hpp"
#include "nmx/sampler.hpp"

namespace nmx {

namespace {

// Codeword symbols at the sampled positions, concatenated in sample order.
BitString sampled_symbols(const BitString& src, const BitString& samp_seed, const ParamPlan& plan) {
    auto positions = samp(samp_seed, *plan.sampler);
    Codeword cw = rs_encode(to_field_vec(src, plan.ecc_width), plan.v);
    BitString out;
    for (std::size_t pos : positions)
        out = out.concat(BitString::from_uint(cw.symbols[pos - 1].value, plan.ecc_width));
    return out;
}

} // namespace

TNmExt::TNmExt(const ParamPlan& plan) : plan_(plan), engine_(plan) {
    if (plan_.variant != Variant::TSeeded)
        throw PlanError("TNmExt requires a t_seeded plan, got " + to_string(plan_.variant));
}

AdviceString TNmExt::t_advice_gen(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    if (x.size() != plan_.n)
        throw StructuralError("t_advice_gen: |x| = " + std::to_string(x.size()) + " != n");
    if (y.size() != plan_.d)
        throw StructuralError("t_advice_gen: |y| = " + std::to_string(y.size()) + " != d");

    BitString y1 = y.prefix(plan_.d1);
    BitString idx = engine_.ext(ExtRole::Ext0).extract(x, y1);
    BitString syms = sampled_symbols(y, idx, plan_);

    AdviceString adv;
    adv.y1 = y1;
    adv.ecc_sym = syms;
    adv.bits = y1.concat(syms);
    if (adv.bits.size() != plan_.a)
        throw PlanError("t_advice_gen: |G| = " + std::to_string(adv.bits.size()) + " != a = " +
                        std::to_string(plan_.a));
    if (trace) {
        trace->y1 = y1;
        trace->index = idx.to_uint();
        trace->advice = adv.bits;
    }
    return adv;
}

BitString TNmExt::compute(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    AdviceString g = t_advice_gen(x, y, trace);
    BitString y2 = y.prefix(plan_.d2);
    BitString t = engine_.ext(ExtRole::Ext5).extract(x, y2);
    if (trace) {
        trace->y2 = y2;
        trace->t_src = t;
    }
    BitString z0 = t.prefix(plan_.h);
    if (trace) trace->z0 = z0;
    BitString s = engine_.breaker(y, t, z0, g.bits, trace ? &trace->rounds : nullptr);
    BitString l = engine_.ext(ExtRole::Ext6).extract(x, s);
    if (trace) {
        trace->s = s;
        trace->l = l;
    }
    return l;
}

T2NmExt::T2NmExt(const ParamPlan& plan) : plan_(plan), engine_(plan) {
    if (plan_.variant != Variant::TTwoSource)
        throw PlanError("T2NmExt requires a t_two_source plan, got " + to_string(plan_.variant));
}

Advice2 T2NmExt::t_advice_gen2(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    if (x.size() != plan_.n || y.size() != plan_.n)
        throw StructuralError("t_advice_gen2: both inputs must have n = " + std::to_string(plan_.n) +
                              " bits");

    BitString x1 = x.prefix(3 * plan_.k);
    BitString y1 = y.prefix(3 * plan_.k);
    unsigned wv = static_cast<unsigned>(plan_.n1);
    FieldElem r = ip(to_field_vec(x1, wv), to_field_vec(y1, wv));
    BitString r_bits = BitString::from_uint(r.value, plan_.n1);

    Advice2 adv;
    adv.x1 = x1;
    adv.y1 = y1;
    adv.index = r.value;
    adv.ecc_x = sampled_symbols(x, r_bits, plan_);
    adv.ecc_y = sampled_symbols(y, r_bits, plan_);
    adv.bits = x1.concat(y1).concat(adv.ecc_x).concat(adv.ecc_y);
    if (adv.bits.size() != plan_.a)
        throw PlanError("t_advice_gen2: |G| = " + std::to_string(adv.bits.size()) + " != a = " +
                        std::to_string(plan_.a));
    if (trace) {
        trace->x1 = x1;
        trace->y1 = y1;
        trace->index = r.value;
        trace->advice = adv.bits;
    }
    return adv;
}

BitString T2NmExt::compute(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    Advice2 g = t_advice_gen2(x, y, trace);

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

AdviceString t_advice_gen(const BitString& x, const BitString& y, const ParamPlan& plan) {
    return TNmExt(plan).t_advice_gen(x, y);
}

std::pair<BitString, NmExtTrace> t_nmext(const BitString& x, const BitString& y,
                                         const ParamPlan& plan) {
    NmExtTrace trace;
    TNmExt pipeline(plan);
    BitString l = pipeline.compute(x, y, &trace);
    return {l, trace};
}

std::pair<BitString, NmExtTrace> t_2nmext(const BitString& x, const BitString& y,
                                          const ParamPlan& plan) {
    NmExtTrace trace;
    T2NmExt pipeline(plan);
    BitString l = pipeline.compute(x, y, &trace);
    return {l, trace};
}

} // namespace nmx
