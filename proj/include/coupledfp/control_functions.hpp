#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "coupledfp/errors.hpp"

namespace coupledfp {

/// Which contractive-control class a function claims to belong to:
///  - Phi:   continuous, non-decreasing, phi(t) < t for t > 0
///  - Psi:   lim_{t->r} psi(t) > 0 for every r > 0, lim_{t->0+} psi(t) = 0
///  - Theta: non-decreasing and theta(r) = r/2 - psi(r/2) for some psi in Psi
enum class FunctionClass { Phi, Psi, Theta };

/// A scalar control function [0,inf) -> [0,inf) with a declared class.
/// The declaration is a claim; validate_* checks it on samples.
struct ControlFunction {
    std::function<double(double)> evaluator;
    FunctionClass declared_class = FunctionClass::Phi;
    std::string label;

    double operator()(double t) const { return evaluator(t); }
};

/// Sample layout for validation: `points` samples in [t_min, t_max],
/// log-spaced by default so both the near-zero and the large-argument
/// regime are covered.
struct SampleGrid {
    double t_min = 1e-9;
    double t_max = 1e3;
    std::size_t points = 256;
    bool logarithmic = true;

    std::vector<double> materialize() const;
};

struct ClassViolation {
    double input;           // sample where the check failed
    double observed;        // function value there (may be NaN)
    std::string expected;   // the relation that should have held
};

/// Outcome of a sampled class-membership check. `passed` iff no violation
/// was recorded. Sampling is evidence, not proof.
struct ClassReport {
    FunctionClass class_checked;
    bool passed = true;
    std::vector<ClassViolation> violations;
    std::size_t samples_used = 0;
};

ClassReport validate_phi(const ControlFunction& phi, const SampleGrid& grid = {});
ClassReport validate_psi(const ControlFunction& psi, const SampleGrid& grid = {});
ClassReport validate_theta(const ControlFunction& theta, const SampleGrid& grid = {});

/// The Psi partner determined by a Theta function: psi(s) = s - theta(2s).
/// Whether the result actually lies in Psi is checked separately.
ControlFunction psi_from_theta(const ControlFunction& theta);

/// Builtin functions selectable by name in configs:
///   "identity", "linear:k", "theta1:k", "theta2", "theta3", "psi-linear:c",
/// plus the two reduction presets "psi-bhaskar:k" ((1-k)/2 * t) and
/// "psi-bhaskar-sym:k" ((1-k/2) * t).
/// Throws InvalidInput for unknown names or malformed parameters.
ControlFunction make_control_function(const std::string& name);

std::string to_string(FunctionClass c);
std::string describe(const ClassReport& report);

}  // namespace coupledfp
