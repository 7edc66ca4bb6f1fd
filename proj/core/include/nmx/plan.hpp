#ifndef NMX_PLAN_HPP
#define NMX_PLAN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "nmx/sampler.hpp"
#include "nmx/trevisan.hpp"

namespace nmx {

enum class Variant { Seeded, TwoSource, TSeeded, TTwoSource };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

using ConstantTable = std::map<std::string, double>;

// Every hidden constant of the parameter schedules, pinned so plans are
// auditable and reproducible. All default to 1 except the protocol slack
// delta and the sampler exponents.
ConstantTable default_constants();

// A fully concrete instantiation of one extractor-pipeline variant:
// every length any algorithm step reads is derivable from here with no
// free variables.
struct ParamPlan {
    std::string schema = "nmx-plan-v1";
    Variant variant = Variant::Seeded;
    bool micro = false;   // micro plans skip the asymptotic-schedule relations

    // Input/source geometry. For two-source variants d == n.
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t k = 0;
    std::size_t t = 1;

    // Advice generator geometry.
    std::size_t d1 = 0;       // seed prefix feeding Ext0 (seeded variants)
    std::size_t d2 = 0;       // seed prefix feeding Ext5 (seeded variants)
    std::size_t log_v = 0;    // index bits for the codeword position
    std::size_t v = 0;        // codeword length (n_code)
    unsigned ecc_width = 0;   // w; symbol alphabet q = 2^w
    std::size_t a = 0;        // advice bits

    // Correlation-breaker widths.
    std::size_t s = 0;
    std::size_t b = 0;
    std::size_t h = 0;
    std::size_t t_len = 0;    // |T| = Ext5 output (seeded variants)
    std::size_t s_out = 0;    // Ext4 output = Ext6 seed
    std::size_t out_len = 0;  // |L|

    // t-tampering extras.
    std::size_t n1 = 0;       // Ext0 output bits / IP1 symbol width
    std::size_t t1 = 0;       // sampled positions
    std::optional<SamplerSpec> sampler;

    // Error schedule.
    double eps = 0.0;
    double eps_prime = 0.0;
    double eps_dprime = 0.0;
    double gamma = 0.0;             // realized ECC distance complement
    double lg_inv_eps_prime = 0.0;  // exact log-domain value of 1/eps'

    ConstantTable constants = default_constants();
    std::map<ExtRole, ExtSpec> specs;

    // Privacy-amplification surface (0 = plan not meant for PA).
    std::size_t mac_bits = 0;
    std::size_t z_out = 0;

    std::string rng_algo = "splitmix64-ctr-v1";
    std::uint64_t enum_budget = 10'000'000;

    const ExtSpec& spec(ExtRole role) const;
    std::uint32_t q() const { return std::uint32_t(1) << ecc_width; }
    std::size_t ecc_msg_syms() const;
    // IP parsing widths (two-source variants).
    std::size_t ip1_width() const;
    std::size_t ip1_syms() const;
    std::size_t ip2_width() const { return h; }
    std::size_t ip2_syms() const { return 3 * k * k * k / h; }
};

// Explicit micro-scale geometry; the planner only validates wiring.
struct MicroSpec {
    Variant variant = Variant::Seeded;
    std::size_t n = 0, d = 0, k = 0, t = 1;
    std::size_t d1 = 0, d2 = 0;
    std::size_t log_v = 0;
    std::size_t v = 0;          // defaults to 2^log_v
    unsigned ecc_width = 0;
    std::size_t s = 0, b = 0, h = 0;
    std::size_t t_len = 0, s_out = 0, out_len = 0;
    std::size_t n1 = 0, t1 = 0;
    std::size_t mac_bits = 0, z_out = 0;
    double eps = 0.125;
    std::uint64_t enum_budget = 10'000'000;
};

// Canonical planning from the asymptotic schedules; every O(.) constant
// comes from the table. Throws PlanError naming the violated constraint.
ParamPlan plan_params(std::size_t n, double eps, std::size_t k, Variant variant, std::size_t t = 1,
                      const ConstantTable& constants = default_constants());

// Micro-override planning: takes the supplied lengths as-is and checks
// internal wiring consistency only.
ParamPlan plan_micro(const MicroSpec& ms);

// Wiring consistency shared by both modes: every seed is consumed at the
// exact length its producer emits. Throws PlanError naming producer and
// consumer on mismatch.
void validate_plan(const ParamPlan& plan);

} // namespace nmx

#endif
