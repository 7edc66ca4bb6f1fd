#include "nmx/plan.hpp"
#include "nmx/errors.hpp"

#include <cmath>

namespace nmx {

std::string to_string(Variant v) {
    switch (v) {
        case Variant::Seeded: return "seeded";
        case Variant::TwoSource: return "two_source";
        case Variant::TSeeded: return "t_seeded";
        case Variant::TTwoSource: return "t_two_source";
    }
    return "?";
}

Variant variant_from_string(const std::string& s) {
    if (s == "seeded") return Variant::Seeded;
    if (s == "two_source" || s == "2source" || s == "2src") return Variant::TwoSource;
    if (s == "t_seeded") return Variant::TSeeded;
    if (s == "t_two_source" || s == "t_2src") return Variant::TTwoSource;
    throw StructuralError("unknown variant '" + s + "'");
}

ConstantTable default_constants() {
    return {
        {"c_d", 1.0},   {"c_v", 1.0},  {"c_q", 1.0},  {"c_d1", 1.0}, {"c_epsp", 1.0},
        {"c_d2", 1.0},  {"c_s", 1.0},  {"c_b", 1.0},  {"c_vt", 1.0}, {"c_n1", 1.0},
        {"c_t1", 1.0},  {"delta", 0.05}, {"delta1", 1.0 / 15}, {"delta2", 1.0 / 15},
        {"delta3", 1.0 / 15},
    };
}

const ExtSpec& ParamPlan::spec(ExtRole role) const {
    auto it = specs.find(role);
    if (it == specs.end())
        throw PlanError("plan lacks spec for " + nmx::to_string(role));
    return it->second;
}

std::size_t ParamPlan::ecc_msg_syms() const {
    std::size_t src = (variant == Variant::Seeded || variant == Variant::TSeeded) ? d : n;
    return (src + ecc_width - 1) / ecc_width;
}

std::size_t ParamPlan::ip1_width() const {
    return (variant == Variant::TTwoSource) ? n1 : log_v;
}

std::size_t ParamPlan::ip1_syms() const {
    return 3 * k / ip1_width();
}

namespace {

double get_const(const ConstantTable& c, const std::string& name) {
    auto it = c.find(name);
    if (it == c.end()) {
        auto defs = default_constants();
        return defs.at(name);
    }
    return it->second;
}

std::size_t round_up(std::size_t v, std::size_t mult) {
    return (v + mult - 1) / mult * mult;
}

std::size_t ceil_log2_at_least1(double x) {
    double lg = std::log2(x);
    if (lg < 1.0) return 1;
    return static_cast<std::size_t>(std::ceil(lg));
}

void require(bool cond, const std::string& constraint) {
    if (!cond) throw PlanError("infeasible schedule: " + constraint);
}

bool seeded_like(Variant v) { return v == Variant::Seeded || v == Variant::TSeeded; }

void check_wiring(const ParamPlan& p) {
    auto eq = [](std::size_t got, std::size_t want, const std::string& what) {
        if (got != want)
            throw PlanError("wiring: " + what + " (got " + std::to_string(got) + ", expected " +
                            std::to_string(want) + ")");
    };

    const bool seeded = seeded_like(p.variant);
    const bool t_var = p.variant == Variant::TSeeded || p.variant == Variant::TTwoSource;

    require(p.out_len >= 1, "out_len must be positive");
    require(p.s <= p.h, "s <= h (FF prefixes Z to s bits)");
    require(p.v <= p.q(), "v <= q = 2^w (codeword indexed by field points)");
    require(p.ecc_msg_syms() <= p.v, "ceil(source/w) <= v (message fits the codeword)");

    if (seeded) {
        require(p.d1 <= p.d, "d1 <= d (Y1 = Prefix(Y, d1))");
        require(p.d2 <= p.d, "d2 <= d (Y2 = Prefix(Y, d2))");
        require(p.h <= p.t_len, "h <= |T| (Z0 = Prefix(T, h))");
        const auto& e0 = p.spec(ExtRole::Ext0);
        eq(e0.n_in, p.n, "Ext0 consumes X of n bits");
        eq(e0.d_seed, p.d1, "Ext0 seed is Y1 of d1 bits (producer Prefix, consumer Ext0)");
        eq(e0.m_out, p.variant == Variant::TSeeded ? p.n1 : p.log_v,
           "Ext0 output is the codeword index source");
        const auto& e5 = p.spec(ExtRole::Ext5);
        eq(e5.n_in, p.n, "Ext5 consumes X of n bits");
        eq(e5.d_seed, p.d2, "Ext5 seed is Y2 of d2 bits (producer Prefix, consumer Ext5)");
        eq(e5.m_out, p.t_len, "Ext5 output is T");
        if (p.variant == Variant::TSeeded) {
            require(p.sampler.has_value(), "t_seeded plan carries a sampler spec");
            eq(p.sampler->r, p.n1, "sampler seed is I of n1 bits (producer Ext0, consumer Samp)");
            eq(p.sampler->nu, p.v, "sampler universe is the codeword length v");
            eq(p.sampler->t1, p.t1, "sampler emits t1 positions");
            eq(p.a, p.d1 + p.t1 * p.ecc_width, "a = d1 + t1*log q (advice length)");
        } else {
            eq(p.a, p.d1 + p.ecc_width, "a = d1 + log q (advice length)");
        }
    } else {
        require(3 * p.k <= p.n, "3k <= n (X1 = Prefix(X, 3k))");
        require(3 * p.k * p.k * p.k <= p.n, "3k^3 <= n (X2 = Prefix(X, 3k^3))");
        require(p.ip1_width() >= 1, "IP1 width positive");
        require(3 * p.k % p.ip1_width() == 0,
                "IP1 width divides 3k (X1 parses into whole symbols)");
        require(3 * p.k * p.k * p.k % p.h == 0,
                "h divides 3k^3 (X2 parses into whole symbols for IP2)");
        require(p.ip2_width() <= 24, "IP2 symbol width h <= 24 (field table bound)");
        if (p.variant == Variant::TTwoSource) {
            require(p.sampler.has_value(), "t_two_source plan carries a sampler spec");
            eq(p.sampler->r, p.n1, "sampler seed is R of n1 bits (producer IP1, consumer Samp)");
            eq(p.sampler->nu, p.v, "sampler universe is the codeword length v");
            eq(p.sampler->t1, p.t1, "sampler emits t1 positions");
            eq(p.a, 6 * p.k + 2 * p.t1 * p.ecc_width, "a = 6k + 2*t1*log q (advice length)");
        } else {
            require((std::size_t(1) << p.log_v) == p.v,
                    "v = 2^log_v (IP1 output indexes the codeword)");
            eq(p.a, 6 * p.k + 2 * p.ecc_width, "a = 6k + 2 log q (advice length)");
        }
        if (t_var) {
            // nothing extra beyond sampler checks above
        }
    }

    const std::size_t ff_src = seeded ? p.d : p.n;       // the FF "short" source Y
    const std::size_t ff_long = seeded ? p.t_len : p.n;  // the alternating partner T or X
    const auto& e1 = p.spec(ExtRole::Ext1);
    eq(e1.n_in, ff_src, "Ext1 consumes Y");
    eq(e1.d_seed, p.s, "Ext1 seed is Z_s of s bits (producer Prefix, consumer Ext1)");
    eq(e1.m_out, p.b, "Ext1 emits A/B of b bits");
    const auto& e2 = p.spec(ExtRole::Ext2);
    eq(e2.n_in, p.h, "Ext2 consumes Z of h bits");
    eq(e2.d_seed, p.b, "Ext2 seed is A of b bits (producer Ext1, consumer Ext2)");
    eq(e2.m_out, p.s, "Ext2 emits C of s bits");
    const auto& e3 = p.spec(ExtRole::Ext3);
    eq(e3.n_in, ff_long, "Ext3 consumes the alternating partner source");
    eq(e3.d_seed, p.b, "Ext3 seed is A/B of b bits (producer Ext1, consumer Ext3)");
    eq(e3.m_out, p.h, "Ext3 emits Zbar/O of h bits");
    const auto& e4 = p.spec(ExtRole::Ext4);
    eq(e4.n_in, ff_src, "Ext4 consumes Y");
    eq(e4.d_seed, p.h, "Ext4 seed is Z_a of h bits (producer FF loop, consumer Ext4)");
    eq(e4.m_out, p.s_out, "Ext4 emits S");
    const auto& e6 = p.spec(ExtRole::Ext6);
    eq(e6.n_in, p.n, "Ext6 consumes X");
    eq(e6.d_seed, p.s_out, "Ext6 seed is S (producer Ext4, consumer Ext6)");
    eq(e6.m_out, p.out_len, "Ext6 emits L");

    if (p.mac_bits > 0) {
        require(2 * p.mac_bits <= p.out_len,
                "2m <= |L| (protocol key S = Prefix(nmExt output, 2m))");
        const auto& pe = p.spec(ExtRole::PAExt);
        eq(pe.n_in, p.n, "PAExt consumes X");
        eq(pe.d_seed, p.mac_bits, "PAExt seed is B of m bits");
        eq(pe.m_out, p.z_out, "PAExt emits the z-bit key");
        require(p.mac_bits <= 24, "MAC width m <= 24 (field table bound)");
    }
}

} // namespace

void validate_plan(const ParamPlan& plan) {
    check_wiring(plan);
}

ParamPlan plan_micro(const MicroSpec& ms) {
    ParamPlan p;
    p.variant = ms.variant;
    p.micro = true;
    p.n = ms.n;
    p.d = seeded_like(ms.variant) ? ms.d : ms.n;
    p.k = ms.k;
    p.t = ms.t;
    p.d1 = ms.d1;
    p.d2 = ms.d2;
    p.log_v = ms.log_v;
    p.v = ms.v ? ms.v : (std::size_t(1) << ms.log_v);
    p.ecc_width = ms.ecc_width;
    p.s = ms.s;
    p.b = ms.b;
    p.h = ms.h;
    p.t_len = ms.t_len;
    p.s_out = ms.s_out;
    p.out_len = ms.out_len;
    p.n1 = ms.n1;
    p.t1 = ms.t1;
    p.eps = ms.eps;
    p.eps_prime = ms.eps * ms.eps;
    p.eps_dprime = ms.eps * ms.eps;
    p.lg_inv_eps_prime = -2 * std::log2(ms.eps);
    p.gamma = p.v ? double(p.ecc_msg_syms() - 1) / double(p.v) : 0.0;
    p.mac_bits = ms.mac_bits;
    p.z_out = ms.z_out;
    p.enum_budget = ms.enum_budget;

    const bool seeded = seeded_like(ms.variant);
    if (ms.variant == Variant::TSeeded || ms.variant == Variant::TTwoSource) {
        SamplerSpec ss;
        ss.r = ms.n1;
        ss.nu = p.v;
        ss.t1 = ms.t1;
        p.sampler = ss;
    }

    // Advice length is structural, never overridable.
    if (ms.variant == Variant::Seeded) p.a = p.d1 + p.ecc_width;
    else if (ms.variant == Variant::TSeeded) p.a = p.d1 + p.t1 * p.ecc_width;
    else if (ms.variant == Variant::TwoSource) p.a = 6 * p.k + 2 * p.ecc_width;
    else p.a = 6 * p.k + 2 * p.t1 * p.ecc_width;

    const double e2 = p.eps * p.eps;
    if (seeded) {
        p.specs.emplace(ExtRole::Ext0,
                        make_ext_spec(ExtRole::Ext0, p.n, p.d1,
                                      ms.variant == Variant::TSeeded ? p.n1 : p.log_v,
                                      2 * (ms.variant == Variant::TSeeded ? p.n1 : p.log_v), e2));
        p.specs.emplace(ExtRole::Ext5,
                        make_ext_spec(ExtRole::Ext5, p.n, p.d2, p.t_len, 2 * p.d, p.eps_prime));
    }
    const std::size_t ff_src = seeded ? p.d : p.n;
    const std::size_t ff_long = seeded ? p.t_len : p.n;
    p.specs.emplace(ExtRole::Ext1, make_ext_spec(ExtRole::Ext1, ff_src, p.s, p.b, 2 * p.b, p.eps_prime));
    p.specs.emplace(ExtRole::Ext2, make_ext_spec(ExtRole::Ext2, p.h, p.b, p.s, 2 * p.s, p.eps_prime));
    p.specs.emplace(ExtRole::Ext3, make_ext_spec(ExtRole::Ext3, ff_long, p.b, p.h, 2 * p.h, p.eps_prime));
    p.specs.emplace(ExtRole::Ext4, make_ext_spec(ExtRole::Ext4, ff_src, p.h, p.s_out, p.d / 4, e2));
    p.specs.emplace(ExtRole::Ext6, make_ext_spec(ExtRole::Ext6, p.n, p.s_out, p.out_len, p.k / 2, e2));
    if (ms.mac_bits > 0)
        p.specs.emplace(ExtRole::PAExt,
                        make_ext_spec(ExtRole::PAExt, p.n, ms.mac_bits, ms.z_out, 2 * ms.z_out, p.eps));

    validate_plan(p);
    return p;
}

namespace {

ParamPlan plan_seeded(std::size_t n, double eps, std::size_t k, std::size_t t, bool t_variant,
                      const ConstantTable& cons) {
    ParamPlan p;
    p.variant = t_variant ? Variant::TSeeded : Variant::Seeded;
    p.n = n;
    p.k = k;
    p.t = t;
    p.eps = eps;
    p.constants = cons;

    const double L = std::log2(double(n) / eps);
    require(L > 1, "n/eps must exceed 2");
    const std::size_t dgran = 8 * (t_variant ? t : 1);
    p.d = round_up(static_cast<std::size_t>(std::ceil(get_const(cons, "c_d") * std::pow(L, 7))), dgran);
    require(p.d >= 8, "d >= 8");
    require(k >= 5 * p.d, "k >= 5d (got k=" + std::to_string(k) + ", 5d=" + std::to_string(5 * p.d) + ")");
    require(k <= n, "k <= n");

    if (!t_variant) {
        p.log_v = ceil_log2_at_least1(get_const(cons, "c_v") * double(p.d) / eps);
        p.v = std::size_t(1) << p.log_v;
        std::size_t w_q = ceil_log2_at_least1(get_const(cons, "c_q") / (eps * eps));
        p.ecc_width = static_cast<unsigned>(std::max(w_q, p.log_v));
        require(p.ecc_width <= 24, "log q <= 24 (field table bound)");
        p.d1 = static_cast<std::size_t>(
            std::ceil(get_const(cons, "c_d1") * L * L * std::log2(double(p.log_v))));
        p.a = p.d1 + p.ecc_width;
    } else {
        p.v = static_cast<std::size_t>(get_const(cons, "c_vt") * 5 * double(p.d));
        p.log_v = static_cast<std::size_t>(std::ceil(std::log2(double(p.v))));
        p.ecc_width = static_cast<unsigned>(p.log_v);  // q >= v so RS can index v points
        require(p.ecc_width <= 24, "log q <= 24 (field table bound)");
        const double d1v = std::pow(double(p.v), get_const(cons, "delta1"));
        p.n1 = std::max<std::size_t>(
            static_cast<std::size_t>(std::ceil(get_const(cons, "c_n1") * d1v)),
            2 * static_cast<std::size_t>(std::ceil(std::log2(double(p.v)))));
        p.t1 = static_cast<std::size_t>(
            std::ceil(get_const(cons, "c_t1") * std::pow(double(p.v), get_const(cons, "delta2"))));
        require(p.t1 >= 1, "t1 >= 1");
        const double Lt = std::log2(double(n) * t * t / (eps * eps));
        p.d1 = static_cast<std::size_t>(
            std::ceil(get_const(cons, "c_d1") * Lt * Lt * std::log2(double(p.d))));
        p.a = p.d1 + p.t1 * p.ecc_width;
        SamplerSpec ss;
        ss.r = p.n1;
        ss.nu = p.v;
        ss.t1 = p.t1;
        ss.alpha = get_const(cons, "delta1");
        ss.beta = get_const(cons, "delta2");
        p.sampler = ss;
        require((std::size_t(1) << ss.u()) >= p.v, "2^ceil(n1/2) >= v (sampler covers the universe)");
    }
    require(p.d1 <= p.d, "d1 <= d");

    // eps' with 2^{c*a} sqrt(eps') = eps, tracked in the log domain since
    // the linear-domain value underflows for canonical sizes.
    p.lg_inv_eps_prime = 2 * (get_const(cons, "c_epsp") * double(p.a) + std::log2(1.0 / eps));
    p.eps_prime = std::pow(2.0, -p.lg_inv_eps_prime);
    const double lg_inv_edp =
        t_variant ? 2.0 * double(t + 1) * double(p.d1) + 2 * std::log2(1.0 / eps) : p.lg_inv_eps_prime;
    p.eps_dprime = std::pow(2.0, -lg_inv_edp);

    const double lgd = std::log2(double(p.d));
    p.d2 = static_cast<std::size_t>(
        std::ceil(get_const(cons, "c_d2") * std::pow(std::log2(double(n)) + lg_inv_edp, 2) * lgd));
    require(p.d2 <= p.d, "d2 <= d");
    p.s = static_cast<std::size_t>(
        std::ceil(get_const(cons, "c_s") * std::pow(lgd + p.lg_inv_eps_prime, 2) * lgd));
    p.b = static_cast<std::size_t>(
        std::ceil(get_const(cons, "c_b") * std::pow(lgd + p.lg_inv_eps_prime, 2) * lgd));
    p.h = 10 * (t_variant ? t : 1) * p.s;
    require(p.h <= p.d, "h = 10" + std::string(t_variant ? "ts" : "s") + " <= d");
    p.t_len = p.d;

    const std::size_t div = 8 * (t_variant ? t : 1);
    require(p.d % div == 0, "8t | d");
    p.s_out = p.d / div;
    require(k % (div / 2) == 0, std::to_string(div / 2) + " | k (output length k/" + std::to_string(div / 2) + ")");
    p.out_len = t_variant ? k / (8 * t) : k / 4;
    p.gamma = double(p.ecc_msg_syms() - 1) / double(p.v);

    const double e2 = eps * eps;
    p.specs.emplace(ExtRole::Ext0, make_ext_spec(ExtRole::Ext0, n, p.d1,
                                                 t_variant ? p.n1 : p.log_v,
                                                 2 * (t_variant ? p.n1 : p.log_v),
                                                 t_variant ? e2 / double(t * t) : e2, true));
    p.specs.emplace(ExtRole::Ext1, make_ext_spec(ExtRole::Ext1, p.d, p.s, p.b, 2 * p.b, p.eps_prime, true));
    p.specs.emplace(ExtRole::Ext2, make_ext_spec(ExtRole::Ext2, p.h, p.b, p.s, 2 * p.s, p.eps_prime, true));
    p.specs.emplace(ExtRole::Ext3, make_ext_spec(ExtRole::Ext3, p.d, p.b, p.h, 2 * p.h, p.eps_prime, true));
    p.specs.emplace(ExtRole::Ext4, make_ext_spec(ExtRole::Ext4, p.d, p.h, p.s_out,
                                                 p.d / (4 * (t_variant ? t : 1)), e2, true));
    p.specs.emplace(ExtRole::Ext5, make_ext_spec(ExtRole::Ext5, n, p.d2, p.t_len, 2 * p.d, p.eps_dprime, true));
    p.specs.emplace(ExtRole::Ext6, make_ext_spec(ExtRole::Ext6, n, p.s_out, p.out_len,
                                                 t_variant ? k / (4 * t) : k / 2, e2, true));
    validate_plan(p);
    return p;
}

ParamPlan plan_two_source(std::size_t n, double eps, std::size_t k, std::size_t t, bool t_variant,
                          const ConstantTable& cons) {
    ParamPlan p;
    p.variant = t_variant ? Variant::TTwoSource : Variant::TwoSource;
    p.n = n;
    p.d = n;
    p.k = k;
    p.t = t;
    p.eps = eps;
    p.constants = cons;

    require(k >= 1, "k >= 1");
    require(3 * k <= n, "3k <= n");
    require(3 * k * k * k <= n, "3k^3 <= n");

    if (!t_variant) {
        // Smallest divisor of 3k whose power-of-two universe reaches n/eps.
        const double lg_target = std::log2(get_const(cons, "c_v") * double(n) / eps);
        std::size_t chosen = 0;
        for (std::size_t cand = 1; cand <= 3 * k; ++cand)
            if (3 * k % cand == 0 && double(cand) >= lg_target) { chosen = cand; break; }
        require(chosen != 0, "some divisor of 3k reaches log2(v) >= log2(n/eps)");
        p.log_v = chosen;
        require(p.log_v <= 24, "log_v <= 24 (IP1 field table bound)");
        p.v = std::size_t(1) << p.log_v;
        std::size_t w_q = ceil_log2_at_least1(get_const(cons, "c_q") / (eps * eps));
        std::size_t w_fit = (n + p.v - 1) / p.v;  // smallest w with ceil(n/w) <= v
        p.ecc_width = static_cast<unsigned>(std::max({w_q, p.log_v, w_fit}));
        require(p.ecc_width <= 24, "log q <= 24 (field table bound)");
        p.a = 6 * k + 2 * p.ecc_width;
    } else {
        p.v = static_cast<std::size_t>(get_const(cons, "c_vt") * 5 * double(n));
        const double d1v = std::pow(double(p.v), get_const(cons, "delta1"));
        std::size_t n1_min = std::max<std::size_t>(
            static_cast<std::size_t>(std::ceil(get_const(cons, "c_n1") * d1v)),
            2 * static_cast<std::size_t>(std::ceil(std::log2(double(p.v)))));
        std::size_t chosen = 0;
        for (std::size_t cand = n1_min; cand <= 3 * k; ++cand)
            if (3 * k % cand == 0) { chosen = cand; break; }
        require(chosen != 0, "some divisor of 3k >= max(v^delta1, 2 log v) exists for n1");
        p.n1 = chosen;
        require(p.n1 <= 24, "n1 <= 24 (IP1 field table bound)");
        p.t1 = static_cast<std::size_t>(
            std::ceil(get_const(cons, "c_t1") * std::pow(double(p.v), get_const(cons, "delta2"))));
        std::size_t w_fit = (n + p.v - 1) / p.v;
        p.ecc_width = static_cast<unsigned>(
            std::max<std::size_t>(w_fit, static_cast<std::size_t>(std::ceil(std::log2(double(p.v))))));
        require(p.ecc_width <= 24, "log q <= 24 (field table bound)");
        p.a = 6 * k + 2 * p.t1 * p.ecc_width;
        SamplerSpec ss;
        ss.r = p.n1;
        ss.nu = p.v;
        ss.t1 = p.t1;
        ss.alpha = get_const(cons, "delta1");
        ss.beta = get_const(cons, "delta2");
        p.sampler = ss;
        require((std::size_t(1) << ss.u()) >= p.v, "2^ceil(n1/2) >= v (sampler covers the universe)");
    }

    p.lg_inv_eps_prime = 2 * (get_const(cons, "c_epsp") * double(p.a) + std::log2(1.0 / eps));
    p.eps_prime = std::pow(2.0, -p.lg_inv_eps_prime);
    p.eps_dprime = p.eps_prime;

    const double lgn = std::log2(double(n));
    std::size_t s_formula = static_cast<std::size_t>(
        std::ceil(get_const(cons, "c_s") * std::pow(lgn + p.lg_inv_eps_prime, 2) * lgn));
    // h = 10ts must split X2 into whole symbols; take the largest
    // conforming s at or below the formula value.
    const std::size_t kkk3 = 3 * k * k * k;
    const std::size_t tt = t_variant ? t : 1;
    std::size_t s_adj = 0;
    for (std::size_t cand = std::min(s_formula, kkk3 / (10 * tt)); cand >= 1; --cand)
        if (kkk3 % (10 * tt * cand) == 0) { s_adj = cand; break; }
    require(s_adj != 0, "10" + std::string(t_variant ? "ts" : "s") + " divides 3k^3 for some s <= formula value");
    p.s = s_adj;
    p.b = static_cast<std::size_t>(
        std::ceil(get_const(cons, "c_b") * std::pow(lgn + p.lg_inv_eps_prime, 2) * lgn));
    p.h = 10 * tt * p.s;
    require(p.h <= 24, "IP2 symbol width h <= 24 (field table bound)");

    const std::size_t div = 8 * tt;
    require(n % div == 0, "8t | n");
    p.s_out = n / div;
    p.out_len = n / (4 * tt);
    p.gamma = double(p.ecc_msg_syms() - 1) / double(p.v);

    const double e2 = eps * eps;
    p.specs.emplace(ExtRole::Ext1, make_ext_spec(ExtRole::Ext1, n, p.s, p.b, 2 * p.b, p.eps_prime, true));
    p.specs.emplace(ExtRole::Ext2, make_ext_spec(ExtRole::Ext2, p.h, p.b, p.s, 2 * p.s, p.eps_prime, true));
    p.specs.emplace(ExtRole::Ext3, make_ext_spec(ExtRole::Ext3, n, p.b, p.h, 2 * p.h, p.eps_prime, true));
    p.specs.emplace(ExtRole::Ext4, make_ext_spec(ExtRole::Ext4, n, p.h, p.s_out, n / (4 * tt), e2, true));
    p.specs.emplace(ExtRole::Ext6, make_ext_spec(ExtRole::Ext6, n, p.s_out, p.out_len, n / (2 * tt), e2, true));
    validate_plan(p);
    return p;
}

} // namespace

ParamPlan plan_params(std::size_t n, double eps, std::size_t k, Variant variant, std::size_t t,
                      const ConstantTable& constants) {
    if (n < 1 || k < 1) throw PlanError("n and k must be positive");
    if (!(eps > 0.0 && eps < 1.0)) throw PlanError("eps must lie in (0, 1)");
    if ((variant == Variant::TSeeded || variant == Variant::TTwoSource) && t < 1)
        throw PlanError("t >= 1 required for t-variants");

    switch (variant) {
        case Variant::Seeded: return plan_seeded(n, eps, k, 1, false, constants);
        case Variant::TSeeded: return plan_seeded(n, eps, k, t, true, constants);
        case Variant::TwoSource: return plan_two_source(n, eps, k, 1, false, constants);
        case Variant::TTwoSource: return plan_two_source(n, eps, k, t, true, constants);
    }
    throw PlanError("unreachable");
}

} // namespace nmx
