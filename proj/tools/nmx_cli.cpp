// Command-line surface: parameter planning, pipeline runs, protocol
// sessions and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 enumeration-budget refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nmx/errors.hpp"
#include "nmx/joint_dist.hpp"
#include "nmx/nmext.hpp"
#include "nmx/pa_protocol.hpp"
#include "nmx/plan_json.hpp"
#include "nmx/presets.hpp"
#include "nmx/t_tamper.hpp"
#include "nmx/two_source.hpp"
#include "nmx/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw nmx::StructuralError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw nmx::StructuralError("cannot write '" + path + "'");
    out << text << "\n";
}

void apply_micro_kv(nmx::MicroSpec& ms, const std::string& kv) {
    auto eq = kv.find('=');
    if (eq == std::string::npos)
        throw nmx::StructuralError("--micro expects key=value, got '" + kv + "'");
    std::string key = kv.substr(0, eq);
    std::string val = kv.substr(eq + 1);
    auto num = [&]() { return static_cast<std::size_t>(std::stoull(val)); };
    if (key == "n") ms.n = num();
    else if (key == "d") ms.d = num();
    else if (key == "k") ms.k = num();
    else if (key == "t") ms.t = num();
    else if (key == "d1") ms.d1 = num();
    else if (key == "d2") ms.d2 = num();
    else if (key == "log_v") ms.log_v = num();
    else if (key == "v") ms.v = num();
    else if (key == "ecc_width") ms.ecc_width = static_cast<unsigned>(num());
    else if (key == "s") ms.s = num();
    else if (key == "b") ms.b = num();
    else if (key == "h") ms.h = num();
    else if (key == "t_len") ms.t_len = num();
    else if (key == "s_out") ms.s_out = num();
    else if (key == "out_len") ms.out_len = num();
    else if (key == "n1") ms.n1 = num();
    else if (key == "t1") ms.t1 = num();
    else if (key == "mac_bits") ms.mac_bits = num();
    else if (key == "z_out") ms.z_out = num();
    else if (key == "eps") ms.eps = std::stod(val);
    else if (key == "enum_budget") ms.enum_budget = std::stoull(val);
    else throw nmx::StructuralError("unknown --micro key '" + key + "'");
}

int cmd_plan(const std::string& variant, std::size_t n, double eps, std::size_t k, std::size_t t,
             const std::vector<std::string>& constant_kvs, const std::vector<std::string>& micro_kvs,
             const std::string& preset, const std::string& out_path) {
    nmx::ParamPlan plan;
    if (!preset.empty()) {
        plan = nmx::micro_preset(preset);
    } else if (!micro_kvs.empty()) {
        nmx::MicroSpec ms;
        ms.variant = nmx::variant_from_string(variant);
        for (const auto& kv : micro_kvs) apply_micro_kv(ms, kv);
        plan = nmx::plan_micro(ms);
    } else {
        nmx::ConstantTable cons = nmx::default_constants();
        for (const auto& kv : constant_kvs) {
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw nmx::StructuralError("--constant expects name=value, got '" + kv + "'");
            cons[kv.substr(0, eq)] = std::stod(kv.substr(eq + 1));
        }
        plan = nmx::plan_params(n, eps, k, nmx::variant_from_string(variant), t, cons);
    }
    spill(out_path, nmx::plan_to_json(plan));
    return kExitOk;
}

int cmd_run(const std::string& plan_path, const std::string& op, const std::string& x_hex,
            const std::string& y_hex, const std::string& trace_path, const std::string& strategy,
            std::uint64_t rng_seed, std::uint64_t adv_seed, std::uint64_t trials,
            const std::string& dist_path) {
    nmx::ParamPlan plan = nmx::plan_from_json(slurp(plan_path));
    nmx::BitString x = nmx::BitString::from_hex(x_hex);

    if (op == "pa") {
        auto strat = nmx::make_strategy(strategy, adv_seed);
        if (trials > 1 || !dist_path.empty()) {
            nmx::JointDist source = dist_path.empty()
                                        ? nmx::JointDist::flat_pair({x}, {nmx::BitString()})
                                        : nmx::JointDist::from_json(slurp(dist_path));
            auto rep = nmx::eval_robustness(source, strat, plan, trials, rng_seed);
            std::cout << rep.to_json() << "\n";
        } else {
            auto res = nmx::run_pa(x, strat, plan, rng_seed);
            std::cout << res.to_json() << "\n";
        }
        return kExitOk;
    }

    nmx::BitString y = nmx::BitString::from_hex(y_hex);
    nmx::NmExtTrace trace;
    nmx::BitString l;
    if (op == "nmext") {
        if (plan.variant != nmx::Variant::Seeded)
            throw nmx::StructuralError("op nmext needs a seeded plan, this one is " +
                                       nmx::to_string(plan.variant));
        std::tie(l, trace) = nmx::nmext(x, y, plan);
    } else if (op == "2nmext") {
        if (plan.variant != nmx::Variant::TwoSource)
            throw nmx::StructuralError("op 2nmext needs a two_source plan, this one is " +
                                       nmx::to_string(plan.variant));
        std::tie(l, trace) = nmx::two_nmext(x, y, plan);
    } else if (op == "t-nmext") {
        if (plan.variant != nmx::Variant::TSeeded)
            throw nmx::StructuralError("op t-nmext needs a t_seeded plan, this one is " +
                                       nmx::to_string(plan.variant));
        std::tie(l, trace) = nmx::t_nmext(x, y, plan);
    } else if (op == "t-2nmext") {
        if (plan.variant != nmx::Variant::TTwoSource)
            throw nmx::StructuralError("op t-2nmext needs a t_two_source plan, this one is " +
                                       nmx::to_string(plan.variant));
        std::tie(l, trace) = nmx::t_2nmext(x, y, plan);
    } else {
        throw nmx::StructuralError("unknown op '" + op + "'");
    }
    std::cout << l.to_hex() << "\n";
    if (!trace_path.empty()) spill(trace_path, nmx::trace_to_json(trace));
    return kExitOk;
}

int cmd_verify(const std::string& suite, bool json, std::uint64_t correctness_trials,
               std::uint64_t robustness_trials) {
    nmx::SuiteReport rep;
    if (suite == "pa") rep = nmx::verify_pa(correctness_trials, robustness_trials);
    else rep = nmx::run_suite(suite);
    std::cout << (json ? rep.to_json() : rep.to_text());
    return rep.pass() ? kExitOk : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-malleable extractor toolkit"};
    app.require_subcommand(1);

    auto* plan_cmd = app.add_subcommand("plan", "emit a validated parameter plan as JSON");
    std::string variant = "seeded", preset, plan_out;
    std::size_t n = 0, k = 0, t = 1;
    double eps = 0.0;
    std::vector<std::string> constant_kvs, micro_kvs;
    plan_cmd->add_option("--variant", variant, "seeded|two_source|t_seeded|t_two_source");
    plan_cmd->add_option("--n", n, "source length in bits");
    plan_cmd->add_option("--eps", eps, "target error");
    plan_cmd->add_option("--k", k, "min-entropy parameter");
    plan_cmd->add_option("--t", t, "tamper count for t-variants");
    plan_cmd->add_option("--constant", constant_kvs, "override a schedule constant, name=value");
    plan_cmd->add_option("--micro", micro_kvs, "micro-override lengths, key=value");
    plan_cmd->add_option("--micro-preset", preset, "emit a committed micro plan by name");
    plan_cmd->add_option("-o,--out", plan_out, "output path (default stdout)");

    auto* run_cmd = app.add_subcommand("run", "evaluate a pipeline or a protocol session");
    std::string run_plan, op = "nmext", x_hex, y_hex, trace_path, strategy = "identity", dist_path;
    std::uint64_t rng_seed = 0, adv_seed = 0, trials = 1;
    run_cmd->add_option("--plan", run_plan, "plan JSON path")->required();
    run_cmd->add_option("--op", op, "nmext|2nmext|t-nmext|t-2nmext|pa");
    run_cmd->add_option("--x", x_hex, "source X, len:hex")->required();
    run_cmd->add_option("--y", y_hex, "seed/source Y, len:hex");
    run_cmd->add_option("--trace", trace_path, "write the full trace JSON here");
    run_cmd->add_option("--strategy", strategy, "pa adversary strategy name");
    run_cmd->add_option("--rng-seed", rng_seed, "session randomness seed");
    run_cmd->add_option("--adv-seed", adv_seed, "adversary randomness seed");
    run_cmd->add_option("--trials", trials, "pa Monte-Carlo trials (1 = single session)");
    run_cmd->add_option("--dist", dist_path, "JointDist JSON for pa trials");

    auto* verify_cmd = app.add_subcommand("verify", "run a committed verification suite");
    std::string suite;
    bool as_json = false;
    std::uint64_t correctness_trials = 10'000, robustness_trials = 100'000;
    verify_cmd->add_option("--suite", suite, "mac|ecc|design|ext|nmext|2nmext|t|pa|entropy-loss")
        ->required();
    verify_cmd->add_flag("--json", as_json, "JSON report instead of text");
    verify_cmd->add_option("--correctness-trials", correctness_trials, "pa suite correctness trials");
    verify_cmd->add_option("--robustness-trials", robustness_trials, "pa suite robustness trials");

    try {
        app.parse(argc, argv);
        if (plan_cmd->parsed())
            return cmd_plan(variant, n, eps, k, t, constant_kvs, micro_kvs, preset, plan_out);
        if (run_cmd->parsed())
            return cmd_run(run_plan, op, x_hex, y_hex, trace_path, strategy, rng_seed, adv_seed,
                           trials, dist_path);
        if (verify_cmd->parsed())
            return cmd_verify(suite, as_json, correctness_trials, robustness_trials);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    } catch (const nmx::BudgetError& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return kExitBudget;
    } catch (const nmx::PlanError& e) {
        std::cerr << "plan error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nmx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
