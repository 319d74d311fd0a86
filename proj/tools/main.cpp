// Command line front door: run the bundled scalar fixture, certify or falsify
// contractive conditions on builtin maps, solve configured Fredholm problems,
// and validate control functions. Exit codes are the contract for CI: 0 on
// success (certify: Certified; falsify: witness found), 1 on Falsified,
// refusal, or exhausted falsification budget, 2 on malformed input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coupledfp/contraction.hpp"
#include "coupledfp/control_functions.hpp"
#include "coupledfp/errors.hpp"
#include "coupledfp/fredholm.hpp"
#include "coupledfp/order.hpp"
#include "coupledfp/solver.hpp"

namespace {

using namespace coupledfp;

constexpr int kExitSuccess = 0;
constexpr int kExitRefused = 1;
constexpr int kExitBadInput = 2;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write output file '" + path + "'");
    out << content;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// Flags shared by certify and falsify; values left empty here fall back to the
// config file (when given) and then to defaults.
struct CheckOptions {
    std::string config_path;
    std::string out_path;
    std::string map_name;
    std::string condition;
    std::string phi_name;
    std::string psi_name;
    std::optional<double> k;
    std::optional<double> radius;
    std::optional<std::size_t> dimension;
    std::uint64_t seed = 42;
    std::size_t budget = 10000;
};

void add_check_flags(CLI::App* cmd, CheckOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON file with map/condition fields");
    cmd->add_option("--out", opt.out_path, "write the JSON check record here");
    cmd->add_option("--map", opt.map_name,
                    "builtin map: example1, linear:a,b, constant:c");
    cmd->add_option("--condition", opt.condition,
                    "bhaskar, luong, berinde, or berinde-cor (default berinde)");
    cmd->add_option("--phi", opt.phi_name, "phi control function name (default identity)");
    cmd->add_option("--psi", opt.psi_name,
                    "psi control function name (default psi-linear:0.25)");
    cmd->add_option("--k", opt.k, "contraction constant for bhaskar (default 0.5)");
    cmd->add_option("--radius", opt.radius, "sampling radius (default 10)");
    cmd->add_option("--dim", opt.dimension, "dimension for linear/constant maps (default 1)");
    cmd->add_option("--seed", opt.seed, "sampler seed (default 42)");
    cmd->add_option("--budget", opt.budget, "tuples to sample (default 10000)");
}

// Flag wins over config field wins over the built-in default.
struct ResolvedCheck {
    CoupledMap F;
    ConditionSpec spec;
    double radius;
};

ResolvedCheck resolve_check(const CheckOptions& opt) {
    std::string map_name = opt.map_name;
    std::string condition = opt.condition;
    std::string phi_name = opt.phi_name;
    std::string psi_name = opt.psi_name;
    std::optional<double> k = opt.k;
    std::optional<double> radius = opt.radius;
    std::optional<std::size_t> dimension = opt.dimension;

    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw InvalidInput("cannot read config file '" + opt.config_path + "'");
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const std::exception& e) {
            throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw InvalidInput("config root must be a JSON object");
        const auto take_string = [&j](std::string& slot, const char* key) {
            if (slot.empty() && j.contains(key)) {
                if (!j.at(key).is_string()) {
                    throw InvalidInput(std::string("config field '") + key +
                                       "' must be a string");
                }
                slot = j.at(key).get<std::string>();
            }
        };
        take_string(map_name, "map");
        take_string(condition, "condition");
        take_string(phi_name, "phi");
        take_string(psi_name, "psi");
        if (!k && j.contains("k")) k = j.at("k").get<double>();
        if (!radius && j.contains("radius")) radius = j.at("radius").get<double>();
        if (!dimension && j.contains("dimension")) {
            dimension = j.at("dimension").get<std::size_t>();
        }
    }

    if (map_name.empty()) {
        throw InvalidInput("a map is required: pass --map or a config file with a 'map' field");
    }
    if (condition.empty()) condition = "berinde";
    if (phi_name.empty()) phi_name = "identity";
    if (psi_name.empty()) psi_name = "psi-linear:0.25";

    CoupledMap F = make_coupled_map(map_name, dimension.value_or(1));

    // Any builtin may play either role here; class conformance is a separate
    // concern handled by validate-functions.
    ConditionSpec spec = [&] {
        if (condition == "bhaskar") return ConditionSpec::bhaskar(k.value_or(0.5));
        if (condition == "berinde-cor") {
            return ConditionSpec::berinde_cor(make_control_function(psi_name));
        }
        if (condition != "luong" && condition != "berinde") {
            throw InvalidInput("unknown condition '" + condition +
                               "' (expected bhaskar, luong, berinde, or berinde-cor)");
        }
        ControlFunction phi = make_control_function(phi_name);
        ControlFunction psi = make_control_function(psi_name);
        return condition == "luong" ? ConditionSpec::luong(phi, psi)
                                    : ConditionSpec::berinde(phi, psi);
    }();

    return ResolvedCheck{std::move(F), std::move(spec), radius.value_or(10.0)};
}

int run_certify(const CheckOptions& opt) {
    const ResolvedCheck rc = resolve_check(opt);
    const CheckReport report = certify(rc.spec, rc.F, opt.budget, opt.seed, rc.radius);
    std::cout << "certify " << report.checked << " on " << rc.F.label() << ": "
              << to_string(report.verdict) << " after " << report.tuples_tested
              << " tuples (seed " << report.seed << ")\n";
    if (report.witness) std::cout << witness_record(report) << "\n";
    if (!opt.out_path.empty()) write_file(opt.out_path, witness_record(report) + "\n");
    return report.verdict == Verdict::Certified ? kExitSuccess : kExitRefused;
}

int run_falsify(const CheckOptions& opt) {
    const ResolvedCheck rc = resolve_check(opt);
    const CheckReport report = certify(rc.spec, rc.F, opt.budget, opt.seed, rc.radius);
    std::cout << "falsify " << report.checked << " on " << rc.F.label() << ": ";
    if (report.verdict == Verdict::Falsified) {
        std::cout << "witness found after " << report.tuples_tested << " tuples (seed "
                  << report.seed << ")\n"
                  << witness_record(report) << "\n";
    } else {
        std::cout << "no witness in " << report.tuples_tested << " tuples (seed "
                  << report.seed << ")\n";
    }
    if (!opt.out_path.empty()) write_file(opt.out_path, witness_record(report) + "\n");
    return report.verdict == Verdict::Falsified ? kExitSuccess : kExitRefused;
}

struct SolveExampleOptions {
    std::string out_path;
    std::uint64_t seed = 42;
    std::size_t budget = 10000;
    double tolerance = 1e-10;
    std::size_t max_iterations = 10000;
};

// The bundled fixture: the scalar map (x - 2y)/4. It satisfies the summed
// two-place condition with phi = identity and psi(t) = t/4 but neither the
// one-place phi-psi condition nor a k-contraction, and its coupled iteration
// from (-2, 3) settles on (0, 0).
int run_solve_example(const SolveExampleOptions& opt) {
    const CoupledMap F = make_coupled_map("example1");
    const ControlFunction identity = make_control_function("identity");
    const ControlFunction quarter = make_control_function("psi-linear:0.25");

    bool ok = true;

    const CheckReport cert =
        certify(ConditionSpec::berinde(identity, quarter), F, opt.budget, opt.seed);
    std::cout << "certify " << cert.checked << ": " << to_string(cert.verdict) << " after "
              << cert.tuples_tested << " tuples (seed " << cert.seed << ")\n";
    ok = ok && cert.verdict == Verdict::Certified;

    for (const ConditionSpec& spec :
         {ConditionSpec::luong(identity, quarter), ConditionSpec::bhaskar(0.5)}) {
        const CheckReport rep = certify(spec, F, opt.budget, opt.seed);
        std::cout << "falsify " << rep.checked << ": ";
        if (rep.verdict == Verdict::Falsified) {
            std::cout << "witness found after " << rep.tuples_tested << " tuples, lhs = "
                      << format_value(rep.witness->lhs) << " > rhs = "
                      << format_value(rep.witness->rhs) << "\n";
        } else {
            std::cout << "no witness in " << rep.tuples_tested << " tuples\n";
            ok = false;
        }
    }

    SolverConfig cfg;
    cfg.tolerance = opt.tolerance;
    cfg.max_iterations = opt.max_iterations;
    cfg.metric = Metric{MetricKind::AbsoluteScalar};
    const SolveResult res =
        solve(F, OrderedVector::scalar(-2.0), OrderedVector::scalar(3.0), cfg);
    const double x = res.fixed_point.point.first[0];
    const double y = res.fixed_point.point.second[0];
    std::cout << "solve from (-2, 3): " << to_string(res.trace.stop_reason) << " in "
              << res.trace.deltas.size() << " iterations\n"
              << "fixed point: (" << format_value(x) << ", " << format_value(y)
              << "), approximately (0, 0)\n"
              << "residual = " << format_value(res.fixed_point.residual)
              << ", diagonal gap = " << format_value(std::abs(x - y)) << "\n";
    ok = ok && res.trace.stop_reason == StopReason::Converged &&
         std::abs(x) <= 1e-8 && std::abs(y) <= 1e-8;

    if (!opt.out_path.empty()) write_file(opt.out_path, trace_to_csv(res.trace));
    return ok ? kExitSuccess : kExitRefused;
}

struct FredholmOptions {
    std::string config_path;
    std::string out_path;
    std::optional<double> tolerance;
    std::optional<std::size_t> max_iterations;
    std::optional<std::size_t> grid;
    std::uint64_t seed = 42;
    std::size_t budget = 10000;
};

int run_solve_fredholm(const FredholmOptions& opt) {
    std::ifstream in(opt.config_path);
    if (!in) throw InvalidInput("cannot read config file '" + opt.config_path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    if (opt.grid) {
        // Rewrite grid_size before parsing so constant bounds resample cleanly.
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const std::exception& e) {
            throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw InvalidInput("config root must be a JSON object");
        j["grid_size"] = *opt.grid;
        text = j.dump();
    }

    FredholmConfig cfg = parse_fredholm_config(text);
    if (opt.tolerance) cfg.solver.tolerance = *opt.tolerance;
    if (opt.max_iterations) cfg.solver.max_iterations = *opt.max_iterations;

    SamplerConfig sampler;
    sampler.seed = opt.seed;
    sampler.budget = opt.budget;
    const AssumptionReport assumptions = check_assumptions(cfg.problem, sampler);
    std::cout << "assumptions: signs " << ((assumptions.k1_nonneg && assumptions.k2_nonpos)
                                           ? "ok" : "violated")
              << ", slope conditions "
              << ((assumptions.f_lipschitz_ok && assumptions.g_lipschitz_ok) ? "ok"
                                                                            : "violated")
              << ", norm bound " << format_value(assumptions.norm_bound)
              << (assumptions.norm_ok ? " <= 1" : " > 1") << " (comparison value "
              << format_value(assumptions.luong_bound) << ")\n";

    const FredholmSolution s = solve_integral_equation(cfg.problem, cfg.pair, cfg.solver);
    std::cout << "solved on " << s.nodes.size() << " nodes in " << s.trace.deltas.size()
              << " iterations; equation residual = " << format_value(s.equation_residual)
              << "\n";
    if (!opt.out_path.empty()) {
        write_file(opt.out_path, solution_to_csv(s.nodes, s.solution));
        std::cout << "solution written to " << opt.out_path << "\n";
    }
    return kExitSuccess;
}

struct ValidateOptions {
    std::vector<std::string> names;
};

int run_validate_functions(const ValidateOptions& opt) {
    std::vector<std::string> names = opt.names;
    if (names.empty()) {
        names = {"identity",        "linear:0.5",      "theta1:0.25",
                 "theta2",          "theta3",          "psi-linear:0.25",
                 "psi-bhaskar:0.5", "psi-bhaskar-sym:0.5"};
    }
    for (const std::string& name : names) {
        const ControlFunction fn = make_control_function(name);
        ClassReport report;
        switch (fn.declared_class) {
            case FunctionClass::Phi: report = validate_phi(fn); break;
            case FunctionClass::Psi: report = validate_psi(fn); break;
            case FunctionClass::Theta: report = validate_theta(fn); break;
        }
        std::cout << name << ": " << describe(report) << "\n";
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Coupled fixed points of mixed monotone maps: certify or falsify contractive "
        "conditions, run the coupled iteration, and solve Fredholm integral equations."};
    app.require_subcommand(1);

    SolveExampleOptions example_opt;
    CLI::App* solve_example = app.add_subcommand(
        "solve-example", "Run the bundled scalar fixture end to end");
    solve_example->add_option("--out", example_opt.out_path, "write the iteration trace CSV");
    solve_example->add_option("--seed", example_opt.seed, "sampler seed (default 42)");
    solve_example->add_option("--budget", example_opt.budget,
                              "tuples per certification (default 10000)");
    solve_example->add_option("--tol", example_opt.tolerance,
                              "iteration tolerance (default 1e-10)");
    solve_example->add_option("--max-iter", example_opt.max_iterations,
                              "iteration cap (default 10000)");

    CheckOptions certify_opt;
    CLI::App* certify_cmd = app.add_subcommand(
        "certify", "Sample a contractive condition; exit 0 only if no violation is found");
    add_check_flags(certify_cmd, certify_opt);

    CheckOptions falsify_opt;
    CLI::App* falsify_cmd = app.add_subcommand(
        "falsify", "Search for a violating tuple; exit 0 only if one is found");
    add_check_flags(falsify_cmd, falsify_opt);

    FredholmOptions fredholm_opt;
    CLI::App* fredholm_cmd = app.add_subcommand(
        "solve-fredholm", "Verify hypotheses and solve a configured integral equation");
    fredholm_cmd->add_option("--config", fredholm_opt.config_path, "problem JSON file")
        ->required();
    fredholm_cmd->add_option("--out", fredholm_opt.out_path, "write the solution CSV");
    fredholm_cmd->add_option("--tol", fredholm_opt.tolerance, "override solver tolerance");
    fredholm_cmd->add_option("--max-iter", fredholm_opt.max_iterations,
                             "override solver iteration cap");
    fredholm_cmd->add_option("--grid", fredholm_opt.grid, "override grid_size");
    fredholm_cmd->add_option("--seed", fredholm_opt.seed,
                             "assumption sampler seed (default 42)");
    fredholm_cmd->add_option("--budget", fredholm_opt.budget,
                             "assumption sampler budget (default 10000)");

    ValidateOptions validate_opt;
    CLI::App* validate_cmd = app.add_subcommand(
        "validate-functions", "Check control functions against their declared classes");
    validate_cmd->add_option("names", validate_opt.names,
                             "function names (default: the builtin set)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (solve_example->parsed()) return run_solve_example(example_opt);
        if (certify_cmd->parsed()) return run_certify(certify_opt);
        if (falsify_cmd->parsed()) return run_falsify(falsify_opt);
        if (fredholm_cmd->parsed()) return run_solve_fredholm(fredholm_opt);
        if (validate_cmd->parsed()) return run_validate_functions(validate_opt);
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefused;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefused;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
