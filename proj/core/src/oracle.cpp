#include "nmx/oracle.hpp"
#include "nmx/errors.hpp"
#include "nmx/nmext.hpp"
#include "nmx/t_tamper.hpp"
#include "nmx/two_source.hpp"

#include <cmath>
#include <memory>

namespace nmx {

MinEntropyResult min_entropy_cond(const JointDist& dist, CondTarget target) {
    Rat g = (target == CondTarget::XGivenE) ? dist.guess_x_given_e() : dist.guess_y_given_e();
    return {g, -std::log2(rat_double(g))};
}

namespace {

// Distance of a joint table from U_bits ⊗ (its first-part marginal),
// where each key is the uniform part's value followed by the rest.
Rat uniform_product_distance(const Dist& joint,
                             const std::map<std::string, Rat>& rest_marginal,
                             std::size_t uniform_bits,
                             const std::function<std::string(std::uint64_t)>& render_uniform) {
    Rat factor = rat_pow2(-static_cast<long>(uniform_bits));
    Dist product;
    for (const auto& [rest, mass] : rest_marginal)
        for (std::uint64_t u = 0; u < (std::uint64_t(1) << uniform_bits); ++u)
            product[render_uniform(u) + rest] = mass * factor;
    return stat_dist(joint, product);
}

struct PipelineEval {
    std::function<BitString(const BitString&, const BitString&)> eval;
};

PipelineEval make_pipeline(const ParamPlan& plan) {
    switch (plan.variant) {
        case Variant::Seeded: {
            auto p = std::make_shared<NmExt>(plan);
            return {[p](const BitString& x, const BitString& y) { return p->compute(x, y); }};
        }
        case Variant::TwoSource: {
            auto p = std::make_shared<TwoNmExt>(plan);
            return {[p](const BitString& x, const BitString& y) { return p->compute(x, y); }};
        }
        case Variant::TSeeded: {
            auto p = std::make_shared<TNmExt>(plan);
            return {[p](const BitString& x, const BitString& y) { return p->compute(x, y); }};
        }
        case Variant::TTwoSource: {
            auto p = std::make_shared<T2NmExt>(plan);
            return {[p](const BitString& x, const BitString& y) { return p->compute(x, y); }};
        }
    }
    throw PlanError("unreachable");
}

} // namespace

NmDistanceReport nm_distance(const JointDist& source, const TamperSet& tampers,
                             const ParamPlan& plan) {
    if (tampers.maps.empty()) throw StructuralError("nm_distance: no tamper maps supplied");
    const std::size_t t = tampers.t();
    const std::uint64_t cost = source.size() * (t + 1);
    if (cost > plan.enum_budget)
        throw BudgetError("nm_distance: " + std::to_string(cost) + " pipeline evaluations exceed budget " +
                          std::to_string(plan.enum_budget));

    const bool two_source = plan.variant == Variant::TwoSource || plan.variant == Variant::TTwoSource;
    PipelineEval pipe = make_pipeline(plan);

    Dist joint_y, joint_x, base_joint_y, base_joint_x;
    std::map<std::string, Rat> rest_y, rest_x, base_rest_y, base_rest_x;
    std::uint64_t evals = 0;

    for (const auto& atom : source.atoms()) {
        BitString l = pipe.eval(atom.x, atom.y);
        ++evals;

        std::vector<BitString> l_tampered, x_tampered, y_tampered;
        for (const auto& f : tampers.maps) {
            BitString xt = atom.x, yt = atom.y;
            if (tampers.side == TamperSide::Y) {
                yt = f(atom.y);
                if (yt == atom.y)
                    throw StructuralError("nm_distance: tamper map has a fixed point at y=" +
                                          atom.y.to_hex());
            } else {
                xt = f(atom.x);
                if (xt == atom.x)
                    throw StructuralError("nm_distance: tamper map has a fixed point at x=" +
                                          atom.x.to_hex());
            }
            l_tampered.push_back(pipe.eval(xt, yt));
            x_tampered.push_back(xt);
            y_tampered.push_back(yt);
            ++evals;
        }

        // Y-side conditioning: (L, L^[t], Y, Y^[t], E)
        {
            std::vector<BitString> rest;
            for (const auto& lt : l_tampered) rest.push_back(lt);
            rest.push_back(atom.y);
            for (const auto& yt : y_tampered) rest.push_back(yt);
            rest.push_back(atom.e);
            std::string rest_key = outcome_key(rest);
            joint_y[l.to_hex() + "|" + rest_key] += atom.p;
            rest_y[rest_key] += atom.p;
        }
        {
            std::string rest_key = outcome_key({atom.y, atom.e});
            base_joint_y[l.to_hex() + "|" + rest_key] += atom.p;
            base_rest_y[rest_key] += atom.p;
        }
        if (two_source) {
            std::vector<BitString> rest;
            for (const auto& lt : l_tampered) rest.push_back(lt);
            rest.push_back(atom.x);
            for (const auto& xt : x_tampered) rest.push_back(xt);
            rest.push_back(atom.e);
            std::string rest_key = outcome_key(rest);
            joint_x[l.to_hex() + "|" + rest_key] += atom.p;
            rest_x[rest_key] += atom.p;
            std::string base_key = outcome_key({atom.x, atom.e});
            base_joint_x[l.to_hex() + "|" + base_key] += atom.p;
            base_rest_x[base_key] += atom.p;
        }
    }

    auto render = [&](std::uint64_t u) {
        return BitString::from_uint(u, plan.out_len).to_hex() + "|";
    };
    NmDistanceReport rep;
    rep.evaluations = evals;
    rep.joint_y = uniform_product_distance(joint_y, rest_y, plan.out_len, render);
    rep.base_y = uniform_product_distance(base_joint_y, base_rest_y, plan.out_len, render);
    if (two_source) {
        rep.joint_x = uniform_product_distance(joint_x, rest_x, plan.out_len, render);
        rep.base_x = uniform_product_distance(base_joint_x, base_rest_x, plan.out_len, render);
    }
    return rep;
}

Rat ext_distance(const JointDist& source, const ExtSpec& spec, bool strong, std::uint64_t budget) {
    const std::uint64_t seeds = std::uint64_t(1) << spec.d_seed;
    const std::uint64_t cost = seeds * source.size();
    if (cost > budget)
        throw BudgetError("ext_distance: " + std::to_string(cost) +
                          " evaluations exceed budget " + std::to_string(budget));

    TrevisanExt ext(spec);
    Dist joint;
    std::map<std::string, Rat> rest;
    Rat seed_p = rat_pow2(-static_cast<long>(spec.d_seed));
    for (std::uint64_t sv = 0; sv < seeds; ++sv) {
        BitString seed = BitString::from_uint(sv, spec.d_seed);
        for (const auto& atom : source.atoms()) {
            BitString out = ext.extract(atom.x, seed);
            std::string rest_key =
                strong ? outcome_key({seed, atom.e}) : outcome_key({atom.e});
            joint[out.to_hex() + "|" + rest_key] += atom.p * seed_p;
            rest[rest_key] += atom.p * seed_p;
        }
    }
    auto render = [&](std::uint64_t u) {
        return BitString::from_uint(u, spec.m_out).to_hex() + "|";
    };
    return uniform_product_distance(joint, rest, spec.m_out, render);
}

} // namespace nmx
