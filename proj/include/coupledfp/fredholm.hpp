#pragma once

#include <functional>
#include <string>
#include <vector>

#include "coupledfp/contraction.hpp"
#include "coupledfp/control_functions.hpp"
#include "coupledfp/solver.hpp"

namespace coupledfp {

/// The integral equation x(t) = int_a^b (K1+K2)(t,s) [f(s,x(s)) + g(s,x(s))] ds + h(t)
/// together with the data needed to check its solvability hypotheses:
///   (i)   K1 >= 0 and K2 <= 0 on I x I
///   (ii)  0 <= f(t,x)-f(t,y) <= lambda*theta(x-y) and
///         -mu*theta(x-y) <= g(t,x)-g(t,y) <= 0, for x >= y
///   (iii) (lambda+mu) * sup_t int_a^b [K1-K2](t,s) ds <= 1
struct FredholmProblem {
    double a = 0.0;
    double b = 1.0;
    std::function<double(double, double)> k1;  // (t, s)
    std::function<double(double, double)> k2;  // (t, s)
    std::function<double(double, double)> f;   // (s, x)
    std::function<double(double, double)> g;   // (s, x)
    std::function<double(double)> h;           // (t)
    double lambda = 1.0;
    double mu = 1.0;
    ControlFunction theta;
    std::size_t grid_size = 101;
};

/// Uniform nodes, composite trapezoid weights, and the induced coupled map
///   F(x,y)_i = sum_j w_j K1(t_i,s_j) [f(s_j,x_j)+g(s_j,y_j)]
///            + sum_j w_j K2(t_i,s_j) [f(s_j,y_j)+g(s_j,x_j)] + h(t_i).
struct Discretization {
    std::vector<double> nodes;
    std::vector<double> weights;
    CoupledMap F;
};

struct AssumptionViolation {
    std::string check;  // which inequality failed, e.g. "k1-sign", "f-lipschitz-upper"
    double t = 0.0;     // node (or s for kernel checks paired with t)
    double x = 0.0;
    double y = 0.0;
    double observed = 0.0;
    double bound = 0.0;
};

struct AssumptionReport {
    bool k1_nonneg = true;
    bool k2_nonpos = true;
    bool f_lipschitz_ok = true;
    bool g_lipschitz_ok = true;
    double norm_bound = 0.0;   // (lambda+mu) * sup over nodes of the K1-K2 quadrature
    bool norm_ok = false;      // norm_bound <= 1 + 1e-12
    double luong_bound = 0.0;  // 2*max(lambda,mu) * the same sup, for comparison
    std::vector<AssumptionViolation> violations;

    bool passed() const {
        return k1_nonneg && k2_nonpos && f_lipschitz_ok && g_lipschitz_ok && norm_ok;
    }
};

/// Grid samples of a candidate coupled lower-upper pair: alpha <= F(alpha,beta)
/// and beta >= F(beta,alpha). alpha <= beta is deliberately not required here;
/// it is only needed for the diagonality conclusion and is checked separately.
struct LowerUpperPair {
    OrderedVector alpha;
    OrderedVector beta;
};

struct LowerUpperReport {
    bool ok = true;
    std::vector<AssumptionViolation> violations;  // check: "alpha" or "beta"
};

struct FredholmSolution {
    OrderedVector solution;  // grid samples of the unique solution
    std::vector<double> nodes;
    AssumptionReport assumptions;
    CoupledFixedPoint fixed_point;
    IterationTrace trace;
    double equation_residual = 0.0;  // sup node defect of the discretized equation
};

/// Inequality slack used for the sign, Lipschitz, and lower-upper checks.
inline constexpr double kFredholmSlack = 1e-12;

/// Throws InvalidInput on malformed problems or non-finite kernel/forcing
/// values at grid nodes (the message names the node).
Discretization discretize(const FredholmProblem& p);

/// Signs are checked at all node pairs; the Lipschitz conditions (ii) are
/// sampled at nodes with gaps x-y log-spaced in [1e-6, radius]; the norm in
/// (iii) uses the same quadrature the operator iterates.
AssumptionReport check_assumptions(const FredholmProblem& p, const SamplerConfig& sampler = {});

/// Checks alpha <= F(alpha,beta) and beta >= F(beta,alpha) at every node.
LowerUpperReport verify_lower_upper(const FredholmProblem& p, const LowerUpperPair& pair);

/// Full pipeline: gate on check_assumptions and verify_lower_upper (throws
/// HypothesisError when either fails), run the coupled iteration from
/// (alpha, beta), and require a diagonal limit when alpha <= beta. The
/// returned solution is the first component of the fixed point.
FredholmSolution solve_integral_equation(const FredholmProblem& p, const LowerUpperPair& pair,
                                         const SolverConfig& cfg = {});

/// A problem plus starting data as read from a JSON config: fields interval
/// {a,b}, grid_size, kernels {k1,k2}, nonlinearities {f,g}, forcing, constants
/// {lambda,mu}, theta, lower_upper {alpha,beta}, solver {tolerance,
/// max_iterations, strict_monotone}. Kernels and nonlinearities are named
/// built-ins: kernels "constant" {value} and "separable" {t_coeffs, s_coeffs}
/// (product of polynomials); nonlinearities "zero", "linear" {coef}, "affine"
/// {coef, offset}, "polynomial" {coeffs} (in x); forcing "constant" {value}
/// and "polynomial" {coeffs} (in t); theta any Theta-class control function
/// name; alpha/beta either a number (constant function) or a node array.
struct FredholmConfig {
    FredholmProblem problem;
    LowerUpperPair pair;
    SolverConfig solver;
};

/// Throws InvalidInput naming the offending field.
FredholmConfig parse_fredholm_config(const std::string& json_text);
FredholmConfig load_fredholm_config_file(const std::string& path);

/// Columns: t, x. One row per node.
std::string solution_to_csv(const std::vector<double>& nodes, const OrderedVector& solution);

}  // namespace coupledfp
