#include "nmx/plan_json.hpp"
#include "nmx/errors.hpp"

#include <json.hpp>

namespace nmx {

namespace {

using nlohmann::json;

ExtRole role_from_string(const std::string& s) {
    for (auto r : {ExtRole::Ext0, ExtRole::Ext1, ExtRole::Ext2, ExtRole::Ext3, ExtRole::Ext4,
                   ExtRole::Ext5, ExtRole::Ext6, ExtRole::PAExt})
        if (to_string(r) == s) return r;
    throw StructuralError("unknown extractor role '" + s + "'");
}

json spec_to_json(const ExtSpec& e) {
    return json{{"role", to_string(e.role)},
                {"n_in", e.n_in},
                {"d_seed", e.d_seed},
                {"m_out", e.m_out},
                {"k_req", e.k_req},
                {"eps", e.eps},
                {"field_bits", e.field_bits},
                {"design_l", e.design_l},
                {"design_p", e.design_p},
                {"d_total", e.d_total},
                {"injective", e.injective}};
}

ExtSpec spec_from_json(const json& j) {
    ExtSpec e;
    e.role = role_from_string(j.at("role").get<std::string>());
    e.n_in = j.at("n_in").get<std::size_t>();
    e.d_seed = j.at("d_seed").get<std::size_t>();
    e.m_out = j.at("m_out").get<std::size_t>();
    e.k_req = j.at("k_req").get<std::size_t>();
    e.eps = j.at("eps").get<double>();
    e.field_bits = j.at("field_bits").get<unsigned>();
    e.design_l = j.at("design_l").get<std::size_t>();
    e.design_p = j.at("design_p").get<std::size_t>();
    e.d_total = j.at("d_total").get<std::size_t>();
    e.injective = j.at("injective").get<bool>();
    return e;
}

} // namespace

std::string plan_to_json(const ParamPlan& p) {
    json j;
    j["schema"] = p.schema;
    j["variant"] = to_string(p.variant);
    j["micro"] = p.micro;
    j["n"] = p.n;
    j["d"] = p.d;
    j["k"] = p.k;
    j["t"] = p.t;
    j["d1"] = p.d1;
    j["d2"] = p.d2;
    j["log_v"] = p.log_v;
    j["v"] = p.v;
    j["ecc_width"] = p.ecc_width;
    j["ecc_modulus"] = Gf2Field::modulus_for(p.ecc_width);
    j["a"] = p.a;
    j["s"] = p.s;
    j["b"] = p.b;
    j["h"] = p.h;
    j["t_len"] = p.t_len;
    j["s_out"] = p.s_out;
    j["out_len"] = p.out_len;
    j["n1"] = p.n1;
    j["t1"] = p.t1;
    if (p.sampler) {
        j["sampler"] = json{{"r", p.sampler->r},       {"nu", p.sampler->nu},
                            {"t1", p.sampler->t1},     {"u", p.sampler->u()},
                            {"alpha", p.sampler->alpha}, {"beta", p.sampler->beta},
                            {"delta", p.sampler->delta}};
    }
    j["eps"] = p.eps;
    j["eps_prime"] = p.eps_prime;
    j["eps_dprime"] = p.eps_dprime;
    j["gamma"] = p.gamma;
    j["lg_inv_eps_prime"] = p.lg_inv_eps_prime;
    j["constants"] = p.constants;
    json specs = json::object();
    for (const auto& [role, spec] : p.specs) specs[to_string(role)] = spec_to_json(spec);
    j["specs"] = specs;
    j["mac_bits"] = p.mac_bits;
    j["z_out"] = p.z_out;
    j["rng_algo"] = p.rng_algo;
    j["enum_budget"] = p.enum_budget;
    return j.dump(2);
}

ParamPlan plan_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw StructuralError(std::string("plan JSON parse error: ") + e.what());
    }
    ParamPlan p;
    try {
        p.schema = j.at("schema").get<std::string>();
        if (p.schema != "nmx-plan-v1")
            throw StructuralError("unsupported plan schema '" + p.schema + "'");
        p.variant = variant_from_string(j.at("variant").get<std::string>());
        p.micro = j.at("micro").get<bool>();
        p.n = j.at("n").get<std::size_t>();
        p.d = j.at("d").get<std::size_t>();
        p.k = j.at("k").get<std::size_t>();
        p.t = j.at("t").get<std::size_t>();
        p.d1 = j.at("d1").get<std::size_t>();
        p.d2 = j.at("d2").get<std::size_t>();
        p.log_v = j.at("log_v").get<std::size_t>();
        p.v = j.at("v").get<std::size_t>();
        p.ecc_width = j.at("ecc_width").get<unsigned>();
        p.a = j.at("a").get<std::size_t>();
        p.s = j.at("s").get<std::size_t>();
        p.b = j.at("b").get<std::size_t>();
        p.h = j.at("h").get<std::size_t>();
        p.t_len = j.at("t_len").get<std::size_t>();
        p.s_out = j.at("s_out").get<std::size_t>();
        p.out_len = j.at("out_len").get<std::size_t>();
        p.n1 = j.at("n1").get<std::size_t>();
        p.t1 = j.at("t1").get<std::size_t>();
        if (j.contains("sampler")) {
            SamplerSpec ss;
            ss.r = j["sampler"].at("r").get<std::size_t>();
            ss.nu = j["sampler"].at("nu").get<std::size_t>();
            ss.t1 = j["sampler"].at("t1").get<std::size_t>();
            ss.alpha = j["sampler"].at("alpha").get<double>();
            ss.beta = j["sampler"].at("beta").get<double>();
            ss.delta = j["sampler"].at("delta").get<double>();
            p.sampler = ss;
        }
        p.eps = j.at("eps").get<double>();
        p.eps_prime = j.at("eps_prime").get<double>();
        p.eps_dprime = j.at("eps_dprime").get<double>();
        p.gamma = j.at("gamma").get<double>();
        p.lg_inv_eps_prime = j.at("lg_inv_eps_prime").get<double>();
        p.constants = j.at("constants").get<ConstantTable>();
        p.specs.clear();
        for (const auto& [key, val] : j.at("specs").items()) {
            ExtSpec e = spec_from_json(val);
            if (to_string(e.role) != key)
                throw StructuralError("spec key '" + key + "' does not match its role field");
            p.specs.emplace(e.role, e);
        }
        p.mac_bits = j.at("mac_bits").get<std::size_t>();
        p.z_out = j.at("z_out").get<std::size_t>();
        p.rng_algo = j.at("rng_algo").get<std::string>();
        p.enum_budget = j.at("enum_budget").get<std::uint64_t>();
    } catch (const json::exception& e) {
        throw StructuralError(std::string("plan JSON field error: ") + e.what());
    }
    validate_plan(p);
    return p;
}

} // namespace nmx
