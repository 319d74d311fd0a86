#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coupledfp/contraction.hpp"
#include "coupledfp/order.hpp"

namespace coupledfp {

/// Mic: x0 <= F(x0,y0) and y0 >= F(y0,x0). Mare: the reversed pair. Starts
/// satisfying both (equalities) classify as Mic.
enum class InitialCondition { Mic, Mare, Neither };

enum class StopReason { Converged, MaxIterations, InvariantViolation };

struct SolverConfig {
    double tolerance = 1e-10;  // d2 units, both for steps and the residual
    std::size_t max_iterations = 10000;
    bool strict_monotone = false;  // invariant violations abort instead of flagging
    Metric metric{};
    double order_slack = 0.0;  // componentwise slack for order checks
};

/// Successive iterates may stop short of the fixed point by a multiple of the
/// step tolerance (the tail of the geometric series), so derived equalities
/// such as "the limit lies on the diagonal" are asserted at this many
/// tolerances rather than one.
inline constexpr double kResolutionSlackFactor = 100.0;

/// A step beyond this d2 size aborts the iteration as divergent.
inline constexpr double kDivergenceThreshold = 1e12;

/// Slack for the non-increasing-delta diagnostic.
inline constexpr double kDeltaSlack = 1e-12;

struct IterationTrace {
    std::vector<PairPoint> points;  // Z_0 .. Z_N
    std::vector<double> deltas;     // deltas[i] = d2(points[i+1], points[i])
    std::vector<bool> chain_ok;     // step i ordered per initial_condition
    InitialCondition initial_condition = InitialCondition::Neither;
    bool monotone_chain_ok = true;
    bool delta_nonincreasing_ok = true;
    StopReason stop_reason = StopReason::MaxIterations;
};

/// residual <= tolerance is guaranteed only when the producing trace stopped
/// with Converged. diagonal means the components agree within
/// kResolutionSlackFactor * tolerance.
struct CoupledFixedPoint {
    PairPoint point;
    double residual = 0.0;  // d2(T(point), point)
    bool diagonal = false;
};

struct SolveResult {
    CoupledFixedPoint fixed_point;
    IterationTrace trace;
};

struct UniquenessReport {
    bool corroborated = true;
    bool trivial = false;  // fewer than two fixed points: nothing to compare
    std::vector<std::string> notes;
};

/// One Picard step on the pair space: T(Y) = (F(x,y), F(y,x)).
/// Throws NumericalError if F produces a non-finite value at Y.
PairPoint apply_T(const CoupledMap& F, const PairPoint& Y);

InitialCondition classify_initial(const CoupledMap& F, const OrderedVector& x0,
                                  const OrderedVector& y0, double order_slack = 0.0);

/// Picard iteration Z_{n+1} = T(Z_n) from (x0, y0). Converged means both the
/// last step and d2(T(Z_N), Z_N) are <= tolerance. Throws HypothesisError if
/// the start is classified Neither, NumericalError on divergence.
SolveResult solve(const CoupledMap& F, const OrderedVector& x0, const OrderedVector& y0,
                  const SolverConfig& cfg = {});

/// Cross-examines claimed fixed points: for each pair, iterates T from their
/// common upper bound (bounds_pair) and checks that the iteration settles on
/// both of them. Distinct surviving limits mean uniqueness fails.
UniquenessReport uniqueness_probe(const CoupledMap& F,
                                  const std::vector<CoupledFixedPoint>& fixed_points,
                                  const SolverConfig& cfg = {});

/// True when comparable starting coordinates led to a diagonal limit, or
/// vacuously when the start was incomparable.
bool diagonal_check(const CoupledFixedPoint& fp, const IterationTrace& trace,
                    const SolverConfig& cfg = {});

/// Columns: n, x components, y components, delta_n, chain_ok. Row 0 has empty
/// delta and chain fields.
std::string trace_to_csv(const IterationTrace& trace);

std::string to_string(InitialCondition c);
std::string to_string(StopReason r);

}  // namespace coupledfp
