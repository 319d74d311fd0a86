#include "coupledfp/solver.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <sstream>

#include "coupledfp/errors.hpp"

namespace coupledfp {

namespace {

bool is_geq(Ordering o) { return o == Ordering::GreaterOrEqual || o == Ordering::Equal; }
bool is_leq(Ordering o) { return o == Ordering::LessOrEqual || o == Ordering::Equal; }

bool step_ordered(InitialCondition init, const PairPoint& from, const PairPoint& to,
                  double slack) {
    const Ordering o = product_compare(from, to, slack);
    return init == InitialCondition::Mic ? is_leq(o) : is_geq(o);
}

void append_value(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

PairPoint apply_T(const CoupledMap& F, const PairPoint& Y) {
    try {
        OrderedVector first = F(Y.first, Y.second);
        OrderedVector second = F(Y.second, Y.first);
        return {std::move(first), std::move(second)};
    } catch (const InvalidInput& e) {
        throw NumericalError(std::string("applying T failed: ") + e.what() + " at Y = (" +
                             to_string(Y.first) + ", " + to_string(Y.second) + ")");
    }
}

InitialCondition classify_initial(const CoupledMap& F, const OrderedVector& x0,
                                  const OrderedVector& y0, double order_slack) {
    const OrderedVector fx = F(x0, y0);
    const OrderedVector fy = F(y0, x0);
    if (is_leq(compare(x0, fx, order_slack)) && is_geq(compare(y0, fy, order_slack))) {
        return InitialCondition::Mic;
    }
    if (is_geq(compare(x0, fx, order_slack)) && is_leq(compare(y0, fy, order_slack))) {
        return InitialCondition::Mare;
    }
    return InitialCondition::Neither;
}

SolveResult solve(const CoupledMap& F, const OrderedVector& x0, const OrderedVector& y0,
                  const SolverConfig& cfg) {
    if (!(cfg.tolerance > 0.0) || cfg.max_iterations < 1) {
        throw InvalidInput("solver needs tolerance > 0 and max_iterations >= 1");
    }
    const InitialCondition init = classify_initial(F, x0, y0, cfg.order_slack);
    if (init == InitialCondition::Neither) {
        throw HypothesisError(
            "starting pair satisfies neither admissible inequality: need x0 <= F(x0,y0) "
            "with y0 >= F(y0,x0), or the reverse");
    }

    IterationTrace trace;
    trace.initial_condition = init;
    trace.points.push_back(PairPoint{x0, y0});

    // When a convergence probe T(Z_{n+1}) turns out non-small it is reused as
    // Z_{n+2}, so no application of T is wasted.
    std::optional<PairPoint> lookahead;
    double residual = std::numeric_limits<double>::infinity();

    while (trace.deltas.size() < cfg.max_iterations) {
        const PairPoint& current = trace.points.back();
        PairPoint next = lookahead ? std::move(*lookahead) : apply_T(F, current);
        lookahead.reset();

        const double delta = d2(cfg.metric, next, current);
        if (!std::isfinite(delta) || delta > kDivergenceThreshold) {
            throw NumericalError("iteration diverged: step size " + std::to_string(delta));
        }

        const bool ordered = step_ordered(init, current, next, cfg.order_slack);
        trace.chain_ok.push_back(ordered);
        if (!ordered) trace.monotone_chain_ok = false;
        if (!trace.deltas.empty() && delta > trace.deltas.back() + kDeltaSlack) {
            trace.delta_nonincreasing_ok = false;
        }

        trace.points.push_back(std::move(next));
        trace.deltas.push_back(delta);

        if (cfg.strict_monotone &&
            (!trace.monotone_chain_ok || !trace.delta_nonincreasing_ok)) {
            trace.stop_reason = StopReason::InvariantViolation;
            break;
        }

        if (delta <= cfg.tolerance) {
            PairPoint probe = apply_T(F, trace.points.back());
            residual = d2(cfg.metric, probe, trace.points.back());
            if (residual <= cfg.tolerance) {
                trace.stop_reason = StopReason::Converged;
                break;
            }
            lookahead = std::move(probe);
        }
    }

    const PairPoint& last = trace.points.back();
    if (trace.stop_reason != StopReason::Converged) {
        residual = d2(cfg.metric, apply_T(F, last), last);
    }
    const bool diagonal = distance(cfg.metric, last.first, last.second) <=
                          kResolutionSlackFactor * cfg.tolerance;
    return SolveResult{CoupledFixedPoint{last, residual, diagonal}, std::move(trace)};
}

UniquenessReport uniqueness_probe(const CoupledMap& F,
                                  const std::vector<CoupledFixedPoint>& fixed_points,
                                  const SolverConfig& cfg) {
    UniquenessReport report;
    if (fixed_points.size() < 2) {
        report.trivial = true;
        report.notes.push_back("trivially corroborated: fewer than two fixed points");
        return report;
    }
    const double settle = kResolutionSlackFactor * cfg.tolerance;
    for (std::size_t i = 0; i < fixed_points.size(); ++i) {
        for (std::size_t j = i + 1; j < fixed_points.size(); ++j) {
            const PairPoint& yi = fixed_points[i].point;
            const PairPoint& yj = fixed_points[j].point;
            PairPoint w = bounds_pair(yi, yj);  // comparable to both by construction

            bool settled = false;
            for (std::size_t n = 0; n < cfg.max_iterations; ++n) {
                PairPoint next = apply_T(F, w);
                const double step = d2(cfg.metric, next, w);
                w = std::move(next);
                if (!std::isfinite(step) || step > kDivergenceThreshold) break;
                if (step <= cfg.tolerance) {
                    settled = true;
                    break;
                }
            }

            std::ostringstream note;
            note << "pair (" << i << "," << j << "): ";
            if (!settled) {
                report.corroborated = false;
                note << "auxiliary iteration did not settle";
            } else {
                const double di = d2(cfg.metric, w, yi);
                const double dj = d2(cfg.metric, w, yj);
                if (di <= settle && dj <= settle) {
                    note << "auxiliary iteration reaches both limits";
                } else {
                    report.corroborated = false;
                    note << "distinct coupled fixed points coexist (d2 " << di << " and "
                         << dj << ")";
                }
            }
            report.notes.push_back(note.str());
        }
    }
    return report;
}

bool diagonal_check(const CoupledFixedPoint& fp, const IterationTrace& trace,
                    const SolverConfig& cfg) {
    if (trace.points.empty()) return true;
    const PairPoint& start = trace.points.front();
    if (compare(start.first, start.second, cfg.order_slack) == Ordering::Incomparable) {
        return true;  // hypothesis absent, nothing to assert
    }
    return distance(cfg.metric, fp.point.first, fp.point.second) <=
           kResolutionSlackFactor * cfg.tolerance;
}

std::string trace_to_csv(const IterationTrace& trace) {
    std::string out = "n";
    if (!trace.points.empty()) {
        const std::size_t dim = trace.points.front().first.dim();
        for (std::size_t i = 0; i < dim; ++i) out += ",x_" + std::to_string(i);
        for (std::size_t i = 0; i < dim; ++i) out += ",y_" + std::to_string(i);
    }
    out += ",delta_n,chain_ok\n";
    for (std::size_t n = 0; n < trace.points.size(); ++n) {
        out += std::to_string(n);
        for (const OrderedVector* side : {&trace.points[n].first, &trace.points[n].second}) {
            for (std::size_t i = 0; i < side->dim(); ++i) {
                out += ',';
                append_value(out, (*side)[i]);
            }
        }
        out += ',';
        if (n > 0) append_value(out, trace.deltas[n - 1]);
        out += ',';
        if (n > 0) out += trace.chain_ok[n - 1] ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string to_string(InitialCondition c) {
    switch (c) {
        case InitialCondition::Mic: return "Mic";
        case InitialCondition::Mare: return "Mare";
        case InitialCondition::Neither: return "Neither";
    }
    return "?";
}

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::Converged: return "Converged";
        case StopReason::MaxIterations: return "MaxIterations";
        case StopReason::InvariantViolation: return "InvariantViolation";
    }
    return "?";
}

}  // namespace coupledfp
