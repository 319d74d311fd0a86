"""Coupled fixed points of mixed monotone maps.

Certify or falsify contractive conditions by seeded sampling, iterate to
coupled fixed points under monotone invariants, and solve nonlinear Fredholm
integral equations with verified hypotheses. Everything here is re-exported
from the compiled extension.
"""

from ._core import (
    AssumptionReport,
    AssumptionViolation,
    CheckReport,
    ClassReport,
    ClassViolation,
    ConditionKind,
    ConditionSpec,
    ControlFunction,
    CoupledFixedPoint,
    CoupledMap,
    DimensionMismatch,
    Discretization,
    Error,
    FredholmConfig,
    FredholmProblem,
    FredholmSolution,
    FunctionClass,
    HypothesisError,
    InitialCondition,
    InvalidInput,
    IterationTrace,
    LowerUpperPair,
    LowerUpperReport,
    Metric,
    MetricKind,
    NumericalError,
    OrderedVector,
    Ordering,
    PairPoint,
    SampleGrid,
    SamplerConfig,
    SolveResult,
    SolverConfig,
    StopReason,
    UniquenessReport,
    Verdict,
    Witness,
    apply_T,
    bounds_pair,
    certify,
    check_assumptions,
    check_mixed_monotone,
    classify_initial,
    compare,
    d2,
    describe,
    diagonal_check,
    discretize,
    distance,
    evaluate_condition,
    load_fredholm_config_file,
    make_control_function,
    make_coupled_map,
    parse_fredholm_config,
    product_compare,
    psi_from_theta,
    solution_to_csv,
    solve,
    solve_integral_equation,
    trace_to_csv,
    uniqueness_probe,
    validate_phi,
    validate_psi,
    validate_theta,
    verify_lower_upper,
    witness_record,
)

__version__ = "0.1.0"

__all__ = [
    "AssumptionReport",
    "AssumptionViolation",
    "CheckReport",
    "ClassReport",
    "ClassViolation",
    "ConditionKind",
    "ConditionSpec",
    "ControlFunction",
    "CoupledFixedPoint",
    "CoupledMap",
    "DimensionMismatch",
    "Discretization",
    "Error",
    "FredholmConfig",
    "FredholmProblem",
    "FredholmSolution",
    "FunctionClass",
    "HypothesisError",
    "InitialCondition",
    "InvalidInput",
    "IterationTrace",
    "LowerUpperPair",
    "LowerUpperReport",
    "Metric",
    "MetricKind",
    "NumericalError",
    "OrderedVector",
    "Ordering",
    "PairPoint",
    "SampleGrid",
    "SamplerConfig",
    "SolveResult",
    "SolverConfig",
    "StopReason",
    "UniquenessReport",
    "Verdict",
    "Witness",
    "apply_T",
    "bounds_pair",
    "certify",
    "check_assumptions",
    "check_mixed_monotone",
    "classify_initial",
    "compare",
    "d2",
    "describe",
    "diagonal_check",
    "discretize",
    "distance",
    "evaluate_condition",
    "load_fredholm_config_file",
    "make_control_function",
    "make_coupled_map",
    "parse_fredholm_config",
    "product_compare",
    "psi_from_theta",
    "solution_to_csv",
    "solve",
    "solve_integral_equation",
    "trace_to_csv",
    "uniqueness_probe",
    "validate_phi",
    "validate_psi",
    "validate_theta",
    "verify_lower_upper",
    "witness_record",
]
