#include "nmx/nmext.hpp"
#include "nmx/errors.hpp"
#include "nmx/reed_solomon.hpp"

#include <json.hpp>

namespace nmx {

std::string trace_to_json(const NmExtTrace& trace) {
    nlohmann::json j;
    auto put = [&j](const char* key, const BitString& b) {
        if (!b.empty()) j[key] = b.to_hex();
    };
    put("y1", trace.y1);
    j["index"] = trace.index;
    put("advice", trace.advice);
    put("y2", trace.y2);
    put("t", trace.t_src);
    put("z0", trace.z0);
    put("x1", trace.x1);
    put("x2", trace.x2);
    j["rounds"] = nlohmann::json::array();
    for (const auto& r : trace.rounds) {
        j["rounds"].push_back({{"g", r.g},
                               {"z", r.z_in.to_hex()},
                               {"zs", r.zs.to_hex()},
                               {"a", r.a.to_hex()},
                               {"c", r.c.to_hex()},
                               {"b", r.b.to_hex()},
                               {"zbar", r.zbar.to_hex()},
                               {"zbars", r.zbars.to_hex()},
                               {"abar", r.abar.to_hex()},
                               {"cbar", r.cbar.to_hex()},
                               {"bbar", r.bbar.to_hex()},
                               {"o", r.o.to_hex()}});
    }
    put("s", trace.s);
    put("l", trace.l);
    return j.dump(2);
}

CorrelationEngine::CorrelationEngine(const ParamPlan& plan) : plan_(plan) {
    for (const auto& [role, spec] : plan_.specs) exts_.emplace_back(role, TrevisanExt(spec));
}

const TrevisanExt& CorrelationEngine::ext(ExtRole role) const {
    for (const auto& [r, e] : exts_)
        if (r == role) return e;
    throw PlanError("plan lacks spec for " + to_string(role));
}

BitString CorrelationEngine::ff_impl(const BitString& y, const BitString& long_src,
                                     const BitString& z, int g, FfRoundTrace* tr,
                                     Tables& tables) const {
    const auto& ext1 = ext(ExtRole::Ext1);
    const auto& ext2 = ext(ExtRole::Ext2);
    const auto& ext3 = ext(ExtRole::Ext3);
    if (z.size() != plan_.h)
        throw StructuralError("flip_flop: |Z| = " + std::to_string(z.size()) + " != h = " +
                              std::to_string(plan_.h));

    BitString zs = z.prefix(plan_.s);
    BitString a = ext1.extract_with_cache(y, zs, tables.y1);
    tables.z2.clear();
    BitString c = ext2.extract_with_cache(z, a, tables.z2);
    BitString b = ext1.extract_with_cache(y, c, tables.y1);
    BitString zbar = ext3.extract_with_cache(long_src, g == 0 ? a : b, tables.long3);

    BitString zbars = zbar.prefix(plan_.s);
    BitString abar = ext1.extract_with_cache(y, zbars, tables.y1);
    tables.z2.clear();
    BitString cbar = ext2.extract_with_cache(zbar, abar, tables.z2);
    BitString bbar = ext1.extract_with_cache(y, cbar, tables.y1);
    BitString o = ext3.extract_with_cache(long_src, g == 0 ? bbar : abar, tables.long3);

    if (tr) {
        tr->z_in = z;
        tr->zs = zs; tr->a = a; tr->c = c; tr->b = b;
        tr->zbar = zbar;
        tr->zbars = zbars; tr->abar = abar; tr->cbar = cbar; tr->bbar = bbar;
        tr->o = o;
        tr->g = g;
    }
    return o;
}

BitString CorrelationEngine::flip_flop(const BitString& y, const BitString& long_src,
                                       const BitString& z, int g, FfRoundTrace* tr) const {
    Tables tables;
    return ff_impl(y, long_src, z, g, tr, tables);
}

BitString CorrelationEngine::breaker(const BitString& y, const BitString& long_src,
                                     const BitString& z0, const BitString& advice,
                                     std::vector<FfRoundTrace>* traces) const {
    Tables tables;
    BitString z = z0;
    for (std::size_t i = 0; i < advice.size(); ++i) {
        FfRoundTrace tr;
        z = ff_impl(y, long_src, z, advice.bit(i), traces ? &tr : nullptr, tables);
        if (traces) traces->push_back(std::move(tr));
    }
    return ext(ExtRole::Ext4).extract_with_cache(y, z, tables.y4);
}

NmExt::NmExt(const ParamPlan& plan) : plan_(plan), engine_(plan) {
    if (plan_.variant != Variant::Seeded)
        throw PlanError("NmExt requires a seeded plan, got " + to_string(plan_.variant));
}

AdviceString NmExt::advice_gen(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    if (x.size() != plan_.n)
        throw StructuralError("advice_gen: |x| = " + std::to_string(x.size()) + " != n");
    if (y.size() != plan_.d)
        throw StructuralError("advice_gen: |y| = " + std::to_string(y.size()) + " != d");

    BitString y1 = y.prefix(plan_.d1);
    BitString idx_bits = engine_.ext(ExtRole::Ext0).extract(x, y1);
    std::uint64_t index = idx_bits.to_index1();
    BitString sym = ecc_symbol(y, index, plan_.ecc_width, plan_.v);

    AdviceString adv;
    adv.y1 = y1;
    adv.ecc_sym = sym;
    adv.bits = y1.concat(sym);
    if (adv.bits.size() != plan_.a)
        throw PlanError("advice_gen: |G| = " + std::to_string(adv.bits.size()) + " != a = " +
                        std::to_string(plan_.a));
    if (trace) {
        trace->y1 = y1;
        trace->index = index;
        trace->advice = adv.bits;
    }
    return adv;
}

BitString NmExt::adv_cb(const BitString& y, const BitString& t_src, const AdviceString& g,
                        NmExtTrace* trace) const {
    if (g.bits.size() != plan_.a)
        throw StructuralError("adv_cb: advice length " + std::to_string(g.bits.size()) + " != a");
    BitString z0 = t_src.prefix(plan_.h);
    if (trace) trace->z0 = z0;
    return engine_.breaker(y, t_src, z0, g.bits, trace ? &trace->rounds : nullptr);
}

BitString NmExt::compute(const BitString& x, const BitString& y, NmExtTrace* trace) const {
    AdviceString g = advice_gen(x, y, trace);
    BitString y2 = y.prefix(plan_.d2);
    BitString t = engine_.ext(ExtRole::Ext5).extract(x, y2);
    if (trace) {
        trace->y2 = y2;
        trace->t_src = t;
    }
    BitString s = adv_cb(y, t, g, trace);
    BitString l = engine_.ext(ExtRole::Ext6).extract(x, s);
    if (trace) {
        trace->s = s;
        trace->l = l;
    }
    return l;
}

AdviceString advice_gen(const BitString& x, const BitString& y, const ParamPlan& plan) {
    return NmExt(plan).advice_gen(x, y);
}

BitString flip_flop(const BitString& y, const BitString& t_src, const BitString& z, int g,
                    const ParamPlan& plan) {
    return CorrelationEngine(plan).flip_flop(y, t_src, z, g);
}

BitString adv_cb(const BitString& y, const BitString& t_src, const AdviceString& g,
                 const ParamPlan& plan) {
    return NmExt(plan).adv_cb(y, t_src, g);
}

std::pair<BitString, NmExtTrace> nmext(const BitString& x, const BitString& y, const ParamPlan& plan) {
    NmExtTrace trace;
    NmExt pipeline(plan);
    BitString l = pipeline.compute(x, y, &trace);
    return {l, trace};
}

} // namespace nmx
