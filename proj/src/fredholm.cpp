#include "coupledfp/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "coupledfp/errors.hpp"
#include "coupledfp/random.hpp"

namespace coupledfp {

namespace {

void validate_problem(const FredholmProblem& p) {
    if (!(p.a < p.b)) throw InvalidInput("interval requires a < b");
    if (!(p.lambda > 0.0) || !(p.mu > 0.0)) {
        throw InvalidInput("constants lambda and mu must be positive");
    }
    if (p.grid_size < 2) throw InvalidInput("grid_size must be >= 2");
    if (!p.k1 || !p.k2) throw InvalidInput("both kernels k1 and k2 are required");
    if (!p.f || !p.g) throw InvalidInput("both nonlinearities f and g are required");
    if (!p.h) throw InvalidInput("forcing function h is required");
}

struct Assembly {
    std::vector<double> nodes;
    std::vector<double> weights;
    std::vector<double> K1, K2;  // row-major grid_size x grid_size
    std::vector<double> hv;
};

Assembly assemble(const FredholmProblem& p) {
    validate_problem(p);
    const std::size_t n = p.grid_size;
    Assembly out;
    out.nodes.resize(n);
    out.weights.resize(n);
    const double dt = (p.b - p.a) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        out.nodes[i] = p.a + double(i) * dt;
        out.weights[i] = (i == 0 || i == n - 1) ? 0.5 * dt : dt;
    }
    out.nodes.back() = p.b;  // guard the endpoint against accumulation

    const auto require_finite = [](double v, const char* what, double t, double s) {
        if (std::isfinite(v)) return;
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%s is non-finite at (t,s)=(%g,%g)", what, t, s);
        throw InvalidInput(buf);
    };
    out.K1.resize(n * n);
    out.K2.resize(n * n);
    out.hv.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.K1[i * n + j] = p.k1(out.nodes[i], out.nodes[j]);
            out.K2[i * n + j] = p.k2(out.nodes[i], out.nodes[j]);
            require_finite(out.K1[i * n + j], "kernel k1", out.nodes[i], out.nodes[j]);
            require_finite(out.K2[i * n + j], "kernel k2", out.nodes[i], out.nodes[j]);
        }
        out.hv[i] = p.h(out.nodes[i]);
        if (!std::isfinite(out.hv[i])) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "forcing h is non-finite at t=%g", out.nodes[i]);
            throw InvalidInput(buf);
        }
    }
    return out;
}

}  // namespace

Discretization discretize(const FredholmProblem& p) {
    Assembly a = assemble(p);
    const std::size_t n = p.grid_size;
    auto nodes = a.nodes;
    auto weights = a.weights;
    auto f = p.f;
    auto g = p.g;
    CoupledMap F(
        [n, nodes, weights, K1 = std::move(a.K1), K2 = std::move(a.K2), hv = a.hv, f,
         g](const OrderedVector& x, const OrderedVector& y) {
            std::vector<double> fx(n), gx(n), fy(n), gy(n);
            for (std::size_t j = 0; j < n; ++j) {
                fx[j] = f(nodes[j], x[j]);
                gx[j] = g(nodes[j], x[j]);
                fy[j] = f(nodes[j], y[j]);
                gy[j] = g(nodes[j], y[j]);
            }
            std::vector<double> out(n);
            for (std::size_t i = 0; i < n; ++i) {
                double s1 = 0.0;
                double s2 = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    s1 += weights[j] * K1[i * n + j] * (fx[j] + gy[j]);
                }
                for (std::size_t j = 0; j < n; ++j) {
                    s2 += weights[j] * K2[i * n + j] * (fy[j] + gx[j]);
                }
                out[i] = s1 + s2 + hv[i];
            }
            return OrderedVector(out);
        },
        n, "fredholm-discretized");
    return Discretization{std::move(nodes), std::move(weights), std::move(F)};
}

AssumptionReport check_assumptions(const FredholmProblem& p, const SamplerConfig& sampler) {
    if (!p.theta.evaluator) throw InvalidInput("problem requires a theta control function");
    const Assembly a = assemble(p);
    const std::size_t n = p.grid_size;
    AssumptionReport report;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v1 = a.K1[i * n + j];
            if (v1 < -kFredholmSlack) {
                report.k1_nonneg = false;
                report.violations.push_back(
                    {"k1-sign", a.nodes[i], a.nodes[j], 0.0, v1, 0.0});
            }
            const double v2 = a.K2[i * n + j];
            if (v2 > kFredholmSlack) {
                report.k2_nonpos = false;
                report.violations.push_back(
                    {"k2-sign", a.nodes[i], a.nodes[j], 0.0, v2, 0.0});
            }
        }
    }

    UniformSampler rng(sampler.seed);
    const double gap_lo = 1e-6;
    const double gap_hi = std::max(sampler.radius, 2e-6);
    for (std::size_t trial = 0; trial < sampler.budget; ++trial) {
        const double t = a.nodes[rng.index(n)];
        const double gap = gap_lo * std::pow(gap_hi / gap_lo, rng.unit());
        const double y = rng.range(-sampler.radius, sampler.radius);
        const double x = y + gap;
        const double theta_gap = p.theta(gap);

        const double df = p.f(t, x) - p.f(t, y);
        const double f_cap = p.lambda * theta_gap;
        if (df < -kFredholmSlack) {
            report.f_lipschitz_ok = false;
            report.violations.push_back({"f-lipschitz-lower", t, x, y, df, 0.0});
        } else if (df > f_cap + kFredholmSlack) {
            report.f_lipschitz_ok = false;
            report.violations.push_back({"f-lipschitz-upper", t, x, y, df, f_cap});
        }

        const double dg = p.g(t, x) - p.g(t, y);
        const double g_cap = p.mu * theta_gap;
        if (dg > kFredholmSlack) {
            report.g_lipschitz_ok = false;
            report.violations.push_back({"g-lipschitz-upper", t, x, y, dg, 0.0});
        } else if (dg < -g_cap - kFredholmSlack) {
            report.g_lipschitz_ok = false;
            report.violations.push_back({"g-lipschitz-lower", t, x, y, dg, -g_cap});
        }
    }

    double sup = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            row += a.weights[j] * (a.K1[i * n + j] - a.K2[i * n + j]);
        }
        sup = std::max(sup, row);
    }
    report.norm_bound = (p.lambda + p.mu) * sup;
    report.norm_ok = report.norm_bound <= 1.0 + kFredholmSlack;
    report.luong_bound = 2.0 * std::max(p.lambda, p.mu) * sup;
    return report;
}

LowerUpperReport verify_lower_upper(const FredholmProblem& p, const LowerUpperPair& pair) {
    if (pair.alpha.dim() != p.grid_size || pair.beta.dim() != p.grid_size) {
        throw DimensionMismatch("lower-upper pair must be sampled on the problem grid");
    }
    const Discretization d = discretize(p);
    const OrderedVector f_ab = d.F(pair.alpha, pair.beta);
    const OrderedVector f_ba = d.F(pair.beta, pair.alpha);

    LowerUpperReport report;
    for (std::size_t i = 0; i < p.grid_size; ++i) {
        if (pair.alpha[i] > f_ab[i] + kFredholmSlack) {
            report.ok = false;
            report.violations.push_back(
                {"alpha", d.nodes[i], pair.alpha[i], 0.0, pair.alpha[i], f_ab[i]});
        }
        if (pair.beta[i] < f_ba[i] - kFredholmSlack) {
            report.ok = false;
            report.violations.push_back(
                {"beta", d.nodes[i], pair.beta[i], 0.0, pair.beta[i], f_ba[i]});
        }
    }
    return report;
}

FredholmSolution solve_integral_equation(const FredholmProblem& p, const LowerUpperPair& pair,
                                         const SolverConfig& cfg) {
    AssumptionReport assumptions = check_assumptions(p);
    if (!assumptions.passed()) {
        std::ostringstream msg;
        msg << "refusing to solve: ";
        if (!assumptions.k1_nonneg) msg << "assumption (i) fails (k1 takes negative values); ";
        if (!assumptions.k2_nonpos) msg << "assumption (i) fails (k2 takes positive values); ";
        if (!assumptions.f_lipschitz_ok) msg << "assumption (ii) fails for f; ";
        if (!assumptions.g_lipschitz_ok) msg << "assumption (ii) fails for g; ";
        if (!assumptions.norm_ok) {
            msg << "assumption (iii) fails: (lambda+mu)*sup integral = "
                << assumptions.norm_bound << " > 1; ";
        }
        throw HypothesisError(msg.str());
    }

    const LowerUpperReport lu = verify_lower_upper(p, pair);
    if (!lu.ok) {
        std::ostringstream msg;
        msg << "refusing to solve: (alpha, beta) is not a coupled lower-upper pair ("
            << lu.violations.size() << " node violations, first at t="
            << lu.violations.front().t << " on " << lu.violations.front().check << ")";
        throw HypothesisError(msg.str());
    }

    Discretization d = discretize(p);
    SolverConfig run_cfg = cfg;
    run_cfg.order_slack = std::max(cfg.order_slack, kFredholmSlack);
    SolveResult res = solve(d.F, pair.alpha, pair.beta, run_cfg);
    if (res.trace.stop_reason != StopReason::Converged) {
        throw NumericalError("coupled iteration stopped without converging: " +
                             to_string(res.trace.stop_reason) + " after " +
                             std::to_string(res.trace.deltas.size()) + " iterations");
    }

    const Ordering ab = compare(pair.alpha, pair.beta, kFredholmSlack);
    if ((ab == Ordering::LessOrEqual || ab == Ordering::Equal) &&
        !diagonal_check(res.fixed_point, res.trace, run_cfg)) {
        throw NumericalError(
            "limit is not diagonal although alpha <= beta; upstream hypotheses are suspect");
    }

    const OrderedVector& x = res.fixed_point.point.first;
    const std::size_t n = p.grid_size;
    std::vector<double> combined(n);
    for (std::size_t j = 0; j < n; ++j) {
        combined[j] = p.f(d.nodes[j], x[j]) + p.g(d.nodes[j], x[j]);
    }
    double residual = 0.0;
    {
        const Assembly a = assemble(p);
        for (std::size_t i = 0; i < n; ++i) {
            double rhs = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                rhs += a.weights[j] * (a.K1[i * n + j] + a.K2[i * n + j]) * combined[j];
            }
            rhs += a.hv[i];
            residual = std::max(residual, std::abs(x[i] - rhs));
        }
    }

    return FredholmSolution{x,
                            d.nodes,
                            std::move(assumptions),
                            res.fixed_point,
                            std::move(res.trace),
                            residual};
}

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& path, const std::string& why) {
    throw InvalidInput("config field '" + path + "' " + why);
}

const json& require_object(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key) || !j.at(key).is_object()) bad_field(path, "must be an object");
    return j.at(key);
}

double require_number(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key) || !j.at(key).is_number()) bad_field(path, "must be a number");
    return j.at(key).get<double>();
}

std::string require_string(const json& j, const std::string& key, const std::string& path) {
    if (!j.contains(key) || !j.at(key).is_string()) bad_field(path, "must be a string");
    return j.at(key).get<std::string>();
}

std::vector<double> require_array(const json& j, const std::string& key,
                                  const std::string& path) {
    if (!j.contains(key) || !j.at(key).is_array()) bad_field(path, "must be an array");
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) bad_field(path, "must contain only numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

double poly_eval(const std::vector<double>& coeffs, double t) {
    double acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::function<double(double, double)> build_kernel(const json& spec, const std::string& path) {
    const std::string name = require_string(spec, "name", path + ".name");
    if (name == "constant") {
        const double value = require_number(spec, "value", path + ".value");
        return [value](double, double) { return value; };
    }
    if (name == "separable") {
        const auto tc = require_array(spec, "t_coeffs", path + ".t_coeffs");
        const auto sc = require_array(spec, "s_coeffs", path + ".s_coeffs");
        return [tc, sc](double t, double s) { return poly_eval(tc, t) * poly_eval(sc, s); };
    }
    bad_field(path + ".name", "names an unknown kernel '" + name + "'");
}

std::function<double(double, double)> build_nonlinearity(const json& spec,
                                                         const std::string& path) {
    const std::string name = require_string(spec, "name", path + ".name");
    if (name == "zero") return [](double, double) { return 0.0; };
    if (name == "linear") {
        const double coef = require_number(spec, "coef", path + ".coef");
        return [coef](double, double x) { return coef * x; };
    }
    if (name == "affine") {
        const double coef = require_number(spec, "coef", path + ".coef");
        const double offset = require_number(spec, "offset", path + ".offset");
        return [coef, offset](double, double x) { return coef * x + offset; };
    }
    if (name == "polynomial") {
        const auto coeffs = require_array(spec, "coeffs", path + ".coeffs");
        return [coeffs](double, double x) { return poly_eval(coeffs, x); };
    }
    bad_field(path + ".name", "names an unknown nonlinearity '" + name + "'");
}

std::function<double(double)> build_forcing(const json& spec, const std::string& path) {
    const std::string name = require_string(spec, "name", path + ".name");
    if (name == "constant") {
        const double value = require_number(spec, "value", path + ".value");
        return [value](double) { return value; };
    }
    if (name == "polynomial") {
        const auto coeffs = require_array(spec, "coeffs", path + ".coeffs");
        return [coeffs](double t) { return poly_eval(coeffs, t); };
    }
    bad_field(path + ".name", "names an unknown forcing '" + name + "'");
}

OrderedVector build_bound(const json& j, const std::string& key, std::size_t grid_size,
                          const std::string& path) {
    if (!j.contains(key)) bad_field(path, "is required");
    const json& v = j.at(key);
    if (v.is_number()) return OrderedVector::constant(grid_size, v.get<double>());
    if (v.is_array()) {
        std::vector<double> values;
        for (const auto& e : v) {
            if (!e.is_number()) bad_field(path, "must contain only numbers");
            values.push_back(e.get<double>());
        }
        if (values.size() != grid_size) {
            bad_field(path, "must have exactly grid_size entries");
        }
        return OrderedVector(values);
    }
    bad_field(path, "must be a number or an array of node values");
}

}  // namespace

FredholmConfig parse_fredholm_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw InvalidInput(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InvalidInput("config root must be a JSON object");

    FredholmProblem p;
    const json& interval = require_object(j, "interval", "interval");
    p.a = require_number(interval, "a", "interval.a");
    p.b = require_number(interval, "b", "interval.b");

    if (!j.contains("grid_size") || !j.at("grid_size").is_number_integer() ||
        j.at("grid_size").get<long long>() < 2) {
        bad_field("grid_size", "must be an integer >= 2");
    }
    p.grid_size = j.at("grid_size").get<std::size_t>();

    const json& kernels = require_object(j, "kernels", "kernels");
    p.k1 = build_kernel(require_object(kernels, "k1", "kernels.k1"), "kernels.k1");
    p.k2 = build_kernel(require_object(kernels, "k2", "kernels.k2"), "kernels.k2");

    if (j.contains("nonlinearities")) {
        const json& nl = require_object(j, "nonlinearities", "nonlinearities");
        p.f = build_nonlinearity(require_object(nl, "f", "nonlinearities.f"),
                                 "nonlinearities.f");
        p.g = build_nonlinearity(require_object(nl, "g", "nonlinearities.g"),
                                 "nonlinearities.g");
    } else {
        p.f = [](double, double) { return 0.0; };
        p.g = [](double, double) { return 0.0; };
    }

    p.h = build_forcing(require_object(j, "forcing", "forcing"), "forcing");

    const json& constants = require_object(j, "constants", "constants");
    p.lambda = require_number(constants, "lambda", "constants.lambda");
    p.mu = require_number(constants, "mu", "constants.mu");

    const std::string theta_name = require_string(j, "theta", "theta");
    p.theta = make_control_function(theta_name);
    if (p.theta.declared_class != FunctionClass::Theta) {
        bad_field("theta", "must name a theta-class control function, got '" + theta_name +
                               "'");
    }

    const json& lu = require_object(j, "lower_upper", "lower_upper");
    LowerUpperPair pair{
        build_bound(lu, "alpha", p.grid_size, "lower_upper.alpha"),
        build_bound(lu, "beta", p.grid_size, "lower_upper.beta"),
    };

    SolverConfig solver;
    if (j.contains("solver")) {
        const json& s = require_object(j, "solver", "solver");
        if (s.contains("tolerance")) {
            solver.tolerance = require_number(s, "tolerance", "solver.tolerance");
        }
        if (s.contains("max_iterations")) {
            if (!s.at("max_iterations").is_number_integer()) {
                bad_field("solver.max_iterations", "must be an integer");
            }
            solver.max_iterations = s.at("max_iterations").get<std::size_t>();
        }
        if (s.contains("strict_monotone")) {
            if (!s.at("strict_monotone").is_boolean()) {
                bad_field("solver.strict_monotone", "must be a boolean");
            }
            solver.strict_monotone = s.at("strict_monotone").get<bool>();
        }
        if (s.contains("order_slack")) {
            solver.order_slack = require_number(s, "order_slack", "solver.order_slack");
        }
    }

    return FredholmConfig{std::move(p), std::move(pair), solver};
}

FredholmConfig load_fredholm_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_fredholm_config(buffer.str());
}

std::string solution_to_csv(const std::vector<double>& nodes, const OrderedVector& solution) {
    if (nodes.size() != solution.dim()) {
        throw DimensionMismatch("solution and node list differ in length");
    }
    std::string out = "t,x\n";
    char buf[40];
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", nodes[i]);
        out += buf;
        out += ',';
        std::snprintf(buf, sizeof(buf), "%.17g", solution[i]);
        out += buf;
        out += '\n';
    }
    return out;
}

}  // namespace coupledfp
