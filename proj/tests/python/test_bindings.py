"""Smoke tests for the compiled extension: the main operations behave on
small fixtures and errors surface as the right Python exceptions."""

import math
from pathlib import Path

import pytest

import coupledfp as cf

REPO = Path(__file__).resolve().parents[2]


def test_version_and_surface():
    assert cf.__version__ == "0.1.0"
    for name in ("solve", "certify", "solve_integral_equation", "validate_theta"):
        assert callable(getattr(cf, name))


def test_ordered_vector_basics():
    v = cf.OrderedVector([1.0, 2.0, 3.0])
    assert len(v) == 3
    assert v[1] == 2.0
    assert v.values() == [1.0, 2.0, 3.0]
    assert v == cf.OrderedVector([1.0, 2.0, 3.0])
    with pytest.raises(IndexError):
        v[3]
    with pytest.raises(cf.InvalidInput):
        cf.OrderedVector([])
    assert cf.compare([0.0, 0.0], [1.0, 1.0]) == cf.Ordering.LessOrEqual


def test_example_fixture_solves_to_origin():
    F = cf.make_coupled_map("example1")
    res = cf.solve(F, cf.OrderedVector.scalar(-2.0), cf.OrderedVector.scalar(3.0))
    assert res.trace.stop_reason == cf.StopReason.Converged
    assert res.trace.initial_condition == cf.InitialCondition.Mic
    assert abs(res.fixed_point.point.first[0]) <= 1e-8
    assert abs(res.fixed_point.point.second[0]) <= 1e-8
    assert res.fixed_point.diagonal
    assert res.trace.monotone_chain_ok
    assert res.trace.delta_nonincreasing_ok
    assert len(res.trace.deltas) <= 200


def test_condition_separation_on_the_fixture():
    F = cf.make_coupled_map("example1")
    identity = cf.make_control_function("identity")
    quarter = cf.make_control_function("psi-linear:0.25")

    certified = cf.certify(cf.ConditionSpec.berinde(identity, quarter), F, 2000, 42)
    assert certified.verdict == cf.Verdict.Certified
    assert certified.witness is None

    falsified = cf.certify(cf.ConditionSpec.luong(identity, quarter), F, 2000, 42)
    assert falsified.verdict == cf.Verdict.Falsified
    w = falsified.witness
    assert w.lhs > w.rhs + 1e-12
    lhs, rhs = cf.evaluate_condition(
        cf.ConditionSpec.luong(identity, quarter), F, w.x, w.y, w.u, w.v
    )
    assert lhs == w.lhs and rhs == w.rhs

    record = cf.witness_record(falsified)
    assert '"verdict": "Falsified"' in record


def test_python_defined_map_and_uniqueness():
    G = cf.CoupledMap(lambda x, y: [0.3 * x[0] - 0.2 * y[0]], 1, "py-linear")
    assert G.label() == "py-linear"
    mono = cf.check_mixed_monotone(G)
    assert mono.verdict == cf.Verdict.Certified

    fps = []
    for c in (1.0, 5.0):
        res = cf.solve(G, [-c], [c])
        assert res.trace.stop_reason == cf.StopReason.Converged
        fps.append(res.fixed_point)
    probe = cf.uniqueness_probe(G, fps)
    assert probe.corroborated and not probe.trivial


def test_solver_rejects_inadmissible_start():
    F = cf.make_coupled_map("example1")
    # The swapped fixture start is admissible on the decreasing side.
    assert (
        cf.classify_initial(F, cf.OrderedVector.scalar(3.0), cf.OrderedVector.scalar(-2.0))
        == cf.InitialCondition.Mare
    )
    # (1, 1) fails both inequalities strictly.
    with pytest.raises(cf.HypothesisError):
        cf.solve(F, cf.OrderedVector.scalar(1.0), cf.OrderedVector.scalar(1.0))


def test_control_function_validation():
    assert not cf.validate_phi(cf.make_control_function("identity")).passed
    assert cf.validate_phi(cf.make_control_function("linear:0.5")).passed
    theta2 = cf.make_control_function("theta2")
    assert cf.validate_theta(theta2).passed
    psi = cf.psi_from_theta(theta2)
    for s in (1e-6, 0.25, 1.0, 7.5):
        assert abs(psi(s) - s / (2.0 * s + 1.0)) <= 1e-12
    report = cf.validate_psi(psi)
    assert report.passed
    assert "passed" in cf.describe(report)


def test_fredholm_config_pipeline():
    cfg = cf.load_fredholm_config_file(str(REPO / "configs" / "fredholm_constant.json"))
    assert cfg.problem.grid_size == 101
    sol = cf.solve_integral_equation(cfg.problem, cfg.pair, cfg.solver)
    assert sol.assumptions.passed()
    for i in range(0, 101, 25):
        assert abs(sol.solution[i] - 384.0 / 383.0) <= 1e-8
    assert sol.equation_residual <= 1e-9
    csv = cf.solution_to_csv(sol.nodes, sol.solution)
    assert csv.startswith("t,x\n0,")


def test_fredholm_problem_from_python_callables():
    p = cf.FredholmProblem()
    p.k1 = lambda t, s: 1.0
    p.k2 = lambda t, s: -1.0
    p.f = lambda s, x: 0.0
    p.g = lambda s, x: 0.0
    p.h = math.sin
    p.lambda_ = 1.0 / 6.0
    p.mu = 1.0 / 12.0
    p.theta = cf.make_control_function("theta1:0.25")
    p.grid_size = 21

    d = cf.discretize(p)
    assert d.weights[0] == 0.025
    report = cf.check_assumptions(p)
    assert report.passed()

    pair = cf.LowerUpperPair(
        cf.OrderedVector.constant(21, -2.0), cf.OrderedVector.constant(21, 2.0)
    )
    assert cf.verify_lower_upper(p, pair).ok
    sol = cf.solve_integral_equation(p, pair)
    for i in (0, 10, 20):
        assert sol.solution[i] == math.sin(sol.nodes[i])


def test_fredholm_refusal_raises():
    cfg = cf.load_fredholm_config_file(str(REPO / "configs" / "fredholm_rejected.json"))
    report = cf.check_assumptions(cfg.problem)
    assert not report.norm_ok and report.norm_bound > 1.0
    with pytest.raises(cf.HypothesisError, match=r"assumption \(iii\)"):
        cf.solve_integral_equation(cfg.problem, cfg.pair, cfg.solver)


def test_error_types():
    with pytest.raises(cf.InvalidInput, match="not valid JSON"):
        cf.parse_fredholm_config("{bad")
    with pytest.raises(cf.DimensionMismatch):
        cf.PairPoint(cf.OrderedVector([1.0]), cf.OrderedVector([1.0, 2.0]))
    with pytest.raises(cf.InvalidInput):
        cf.make_coupled_map("no-such-map")
    assert issubclass(cf.HypothesisError, cf.Error)


def test_trace_csv_round_trip():
    F = cf.make_coupled_map("constant:1", 2)
    res = cf.solve(F, cf.OrderedVector.constant(2, 0.0), cf.OrderedVector.constant(2, 2.0))
    csv = cf.trace_to_csv(res.trace)
    lines = csv.strip().split("\n")
    assert lines[0] == "n,x_0,x_1,y_0,y_1,delta_n,chain_ok"
    assert len(lines) == len(res.trace.deltas) + 2  # header + row per point
