#include "coupledfp/control_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace coupledfp {

namespace {

constexpr double kMonotoneSlack = 1e-12;   // float slack for sampled monotonicity
constexpr double kZeroLimitTol = 1e-6;     // |psi| at the bottom of the decreasing sequence
constexpr double kNeighborhoodFloor = 1e-9;
constexpr std::size_t kLimitProbes = 32;   // r values probed for lim_{t->r} psi > 0

double safe_eval(const ControlFunction& fn, double t) {
    try {
        return fn(t);
    } catch (const std::exception&) {
        return std::numeric_limits<double>::quiet_NaN();
    }
}

void check_finite_nonneg(const ControlFunction& fn, const std::vector<double>& ts,
                         std::vector<double>& out, ClassReport& report) {
    out.resize(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
        out[i] = safe_eval(fn, ts[i]);
        ++report.samples_used;
        if (!std::isfinite(out[i]) || out[i] < 0.0) {
            report.violations.push_back(
                {ts[i], out[i], "value finite and >= 0"});
        }
    }
}

void check_nondecreasing(const std::vector<double>& ts, const std::vector<double>& vals,
                         ClassReport& report) {
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (!std::isfinite(vals[i]) || !std::isfinite(vals[i + 1])) continue;
        if (vals[i] > vals[i + 1] + kMonotoneSlack) {
            report.violations.push_back(
                {ts[i + 1], vals[i + 1],
                 "non-decreasing: value at " + std::to_string(ts[i]) + " was " +
                     std::to_string(vals[i])});
        }
    }
}

// Step-discontinuity heuristic: the jump across one interval must stay within
// a modulus scaled by the slope seen on the neighboring intervals. A genuine
// step keeps its jump as spacing shrinks while the neighbors stay flat; a
// steep but smooth function has comparably steep neighbors.
void check_continuity(const std::vector<double>& ts, const std::vector<double>& vals,
                      ClassReport& report) {
    const std::size_t n = ts.size();
    if (n < 3) return;
    std::vector<double> slope(n - 1, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double dt = ts[i + 1] - ts[i];
        slope[i] = dt > 0 ? std::abs(vals[i + 1] - vals[i]) / dt : 0.0;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!std::isfinite(vals[i]) || !std::isfinite(vals[i + 1])) continue;
        double neighbor = 0.0;
        if (i > 0) neighbor = std::max(neighbor, slope[i - 1]);
        if (i + 2 < n) neighbor = std::max(neighbor, slope[i + 1]);
        const double dt = ts[i + 1] - ts[i];
        const double jump = std::abs(vals[i + 1] - vals[i]);
        if (jump > 10.0 * dt * (neighbor + 1.0)) {
            report.violations.push_back(
                {ts[i + 1], vals[i + 1],
                 "continuity: jump " + std::to_string(jump) + " over spacing " +
                     std::to_string(dt) + " exceeds modulus"});
        }
    }
}

// Positivity of psi near a target r: evaluate on neighborhoods r +- h with h
// halving down to an absolute floor. Catches psi vanishing on an interval
// that the coarse grid straddles.
void check_positive_limits(const ControlFunction& fn, const SampleGrid& grid,
                           ClassReport& report) {
    const double r_lo = std::max(grid.t_min, 1e-6);
    const double r_hi = grid.t_max;
    if (!(r_lo < r_hi)) return;
    const double ratio = std::pow(r_hi / r_lo, 1.0 / double(kLimitProbes - 1));
    double r = r_lo;
    for (std::size_t i = 0; i < kLimitProbes; ++i, r *= ratio) {
        for (double h = r / 2; h >= kNeighborhoodFloor; h /= 2) {
            for (double t : {r - h, r + h}) {
                if (t <= 0) continue;
                const double v = safe_eval(fn, t);
                ++report.samples_used;
                if (!std::isfinite(v) || v <= 0.0) {
                    report.violations.push_back(
                        {t, v, "psi(t) > 0 near r = " + std::to_string(r)});
                    return;  // one witness per failing function is enough
                }
            }
        }
    }
}

}  // namespace

std::vector<double> SampleGrid::materialize() const {
    if (points < 2 || !(t_min < t_max) || t_min <= 0.0) {
        throw InvalidInput("SampleGrid requires 0 < t_min < t_max and >= 2 points");
    }
    std::vector<double> ts(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double frac = double(i) / double(points - 1);
        ts[i] = logarithmic ? t_min * std::pow(t_max / t_min, frac)
                            : t_min + frac * (t_max - t_min);
    }
    return ts;
}

ClassReport validate_phi(const ControlFunction& phi, const SampleGrid& grid) {
    ClassReport report{FunctionClass::Phi, true, {}, 0};
    const auto ts = grid.materialize();
    std::vector<double> vals;
    check_finite_nonneg(phi, ts, vals, report);
    check_nondecreasing(ts, vals, report);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!std::isfinite(vals[i])) continue;
        if (!(vals[i] < ts[i])) {
            report.violations.push_back({ts[i], vals[i], "phi(t) < t for t > 0"});
        }
    }
    check_continuity(ts, vals, report);
    report.passed = report.violations.empty();
    return report;
}

ClassReport validate_psi(const ControlFunction& psi, const SampleGrid& grid) {
    ClassReport report{FunctionClass::Psi, true, {}, 0};
    const auto ts = grid.materialize();
    std::vector<double> vals;
    check_finite_nonneg(psi, ts, vals, report);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!std::isfinite(vals[i])) continue;
        if (vals[i] <= 0.0) {
            report.violations.push_back({ts[i], vals[i], "psi(t) > 0 for t > 0"});
        }
    }
    // lim_{t->0+} psi(t) = 0: follow a halving sequence to the floor and
    // require the tail to sit below the tolerance.
    {
        std::vector<double> tail;
        for (double t = std::min(1e-3, grid.t_max); t >= kNeighborhoodFloor; t /= 2) {
            tail.push_back(t);
        }
        std::size_t checked = 0;
        for (auto it = tail.rbegin(); it != tail.rend() && checked < 3; ++it, ++checked) {
            const double v = safe_eval(psi, *it);
            ++report.samples_used;
            if (!std::isfinite(v) || std::abs(v) > kZeroLimitTol) {
                report.violations.push_back(
                    {*it, v, "psi(t) -> 0 as t -> 0+ (|psi| <= " +
                                 std::to_string(kZeroLimitTol) + ")"});
            }
        }
    }
    check_positive_limits(psi, grid, report);
    report.passed = report.violations.empty();
    return report;
}

ClassReport validate_theta(const ControlFunction& theta, const SampleGrid& grid) {
    ClassReport report{FunctionClass::Theta, true, {}, 0};
    const auto ts = grid.materialize();
    std::vector<double> vals;
    check_finite_nonneg(theta, ts, vals, report);
    check_nondecreasing(ts, vals, report);

    const ClassReport derived = validate_psi(psi_from_theta(theta), grid);
    report.samples_used += derived.samples_used;
    for (const auto& v : derived.violations) {
        report.violations.push_back({v.input, v.observed, "derived psi: " + v.expected});
    }
    report.passed = report.violations.empty();
    return report;
}

ControlFunction psi_from_theta(const ControlFunction& theta) {
    auto f = theta.evaluator;
    return ControlFunction{
        [f](double s) { return s - f(2.0 * s); },
        FunctionClass::Psi,
        "psi-from-" + theta.label,
    };
}

namespace {

double parse_param(const std::string& name, const std::string& text) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw InvalidInput("bad parameter '" + text + "' in control function '" + name + "'");
    }
}

}  // namespace

ControlFunction make_control_function(const std::string& name) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);
    const bool has_param = colon != std::string::npos;
    auto param = [&]() {
        if (!has_param) {
            throw InvalidInput("control function '" + head + "' requires a parameter, e.g. '" +
                               head + ":0.5'");
        }
        return parse_param(name, name.substr(colon + 1));
    };

    if (head == "identity") {
        return {[](double t) { return t; }, FunctionClass::Phi, "identity"};
    }
    if (head == "linear") {
        const double k = param();
        return {[k](double t) { return k * t; }, FunctionClass::Phi, name};
    }
    if (head == "psi-linear") {
        const double c = param();
        return {[c](double t) { return c * t; }, FunctionClass::Psi, name};
    }
    if (head == "psi-bhaskar") {
        // (1-k)/2 * t: turns the phi/psi condition on plain distances into the
        // constant-k contraction with the same k.
        const double k = param();
        return {[k](double t) { return 0.5 * (1.0 - k) * t; }, FunctionClass::Psi, name};
    }
    if (head == "psi-bhaskar-sym") {
        // (1-k/2) * t: the corresponding preset for the symmetric-sum condition.
        const double k = param();
        return {[k](double t) { return (1.0 - 0.5 * k) * t; }, FunctionClass::Psi, name};
    }
    if (head == "theta1") {
        const double k = param();
        return {[k](double r) { return k * r; }, FunctionClass::Theta, name};
    }
    if (head == "theta2") {
        return {[](double r) { return r * r / (2.0 * (r + 1.0)); }, FunctionClass::Theta,
                "theta2"};
    }
    if (head == "theta3") {
        return {[](double r) { return 0.5 * r - 0.5 * std::log1p(r); }, FunctionClass::Theta,
                "theta3"};
    }
    throw InvalidInput("unknown control function '" + name + "'");
}

std::string to_string(FunctionClass c) {
    switch (c) {
        case FunctionClass::Phi: return "phi";
        case FunctionClass::Psi: return "psi";
        case FunctionClass::Theta: return "theta";
    }
    return "?";
}

std::string describe(const ClassReport& report) {
    std::ostringstream out;
    out << to_string(report.class_checked) << " check: "
        << (report.passed ? "passed" : "FAILED") << " (" << report.samples_used
        << " samples";
    if (!report.passed) out << ", " << report.violations.size() << " violations";
    out << ")";
    std::size_t shown = 0;
    for (const auto& v : report.violations) {
        if (++shown > 5) {
            out << "\n  ...";
            break;
        }
        out << "\n  at t=" << v.input << " value=" << v.observed << ": expected "
            << v.expected;
    }
    return out.str();
}

}  // namespace coupledfp
