// Python bindings for the coupled fixed point toolkit. The surface mirrors the
// C++ headers: ordered vectors and coupled maps, control function validation,
// condition certification, the monotone coupled iteration, and the Fredholm
// pipeline. Maps, kernels, and nonlinearities accept Python callables.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "coupledfp/contraction.hpp"
#include "coupledfp/control_functions.hpp"
#include "coupledfp/errors.hpp"
#include "coupledfp/fredholm.hpp"
#include "coupledfp/order.hpp"
#include "coupledfp/random.hpp"
#include "coupledfp/solver.hpp"

namespace py = pybind11;
using namespace coupledfp;

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Coupled fixed points of mixed monotone maps: certify contractive conditions, "
        "iterate to coupled fixed points, and solve Fredholm integral equations.";

    // Exceptions: the common base first, then the specific kinds.
    static py::exception<Error> base_exc(m, "Error");
    py::register_exception<InvalidInput>(m, "InvalidInput", base_exc);
    py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base_exc);
    py::register_exception<HypothesisError>(m, "HypothesisError", base_exc);
    py::register_exception<NumericalError>(m, "NumericalError", base_exc);

    py::enum_<Ordering>(m, "Ordering")
        .value("LessOrEqual", Ordering::LessOrEqual)
        .value("GreaterOrEqual", Ordering::GreaterOrEqual)
        .value("Equal", Ordering::Equal)
        .value("Incomparable", Ordering::Incomparable);

    py::enum_<MetricKind>(m, "MetricKind")
        .value("SupNorm", MetricKind::SupNorm)
        .value("Euclidean", MetricKind::Euclidean)
        .value("AbsoluteScalar", MetricKind::AbsoluteScalar);

    py::class_<Metric>(m, "Metric")
        .def(py::init<>())
        .def(py::init([](MetricKind kind) { return Metric{kind}; }), py::arg("kind"))
        .def_readwrite("kind", &Metric::kind);

    py::class_<OrderedVector>(m, "OrderedVector")
        .def(py::init<std::vector<double>>(), py::arg("values"))
        .def_static("scalar", &OrderedVector::scalar, py::arg("value"))
        .def_static("constant", &OrderedVector::constant, py::arg("dim"), py::arg("value"))
        .def("values", &OrderedVector::values)
        .def("__len__", &OrderedVector::dim)
        .def("__getitem__",
             [](const OrderedVector& v, std::size_t i) {
                 if (i >= v.dim()) throw py::index_error();
                 return v[i];
             })
        .def("__eq__", [](const OrderedVector& a, const OrderedVector& b) { return a == b; })
        .def("__repr__", [](const OrderedVector& v) {
            std::ostringstream out;
            out << "OrderedVector([";
            for (std::size_t i = 0; i < v.dim(); ++i) out << (i ? ", " : "") << v[i];
            out << "])";
            return out.str();
        });
    py::implicitly_convertible<py::list, OrderedVector>();

    py::class_<PairPoint>(m, "PairPoint")
        .def(py::init<OrderedVector, OrderedVector>(), py::arg("first"), py::arg("second"))
        .def_readonly("first", &PairPoint::first)
        .def_readonly("second", &PairPoint::second);

    m.def("compare", &compare, py::arg("a"), py::arg("b"), py::arg("slack") = 0.0,
          "Componentwise comparison of two vectors in the partial order.");
    m.def("product_compare", &product_compare, py::arg("a"), py::arg("b"),
          py::arg("slack") = 0.0,
          "Comparison in the product order: second components are reversed.");
    m.def("bounds_pair", &bounds_pair, py::arg("a"), py::arg("b"),
          "Componentwise (max of firsts, min of seconds): an upper bound of both "
          "pairs in the product order.");
    m.def("distance", &distance, py::arg("metric"), py::arg("a"), py::arg("b"));
    m.def("d2", &d2, py::arg("metric"), py::arg("a"), py::arg("b"),
          "Metric on the product space: half the sum of componentwise distances.");

    py::enum_<FunctionClass>(m, "FunctionClass")
        .value("Phi", FunctionClass::Phi)
        .value("Psi", FunctionClass::Psi)
        .value("Theta", FunctionClass::Theta);

    py::class_<ControlFunction>(m, "ControlFunction")
        .def(py::init([](std::function<double(double)> evaluator, FunctionClass declared,
                         std::string label) {
                 return ControlFunction{std::move(evaluator), declared, std::move(label)};
             }),
             py::arg("evaluator"), py::arg("declared_class"), py::arg("label"))
        .def_readonly("declared_class", &ControlFunction::declared_class)
        .def_readonly("label", &ControlFunction::label)
        .def("__call__", [](const ControlFunction& f, double t) { return f(t); });

    py::class_<SampleGrid>(m, "SampleGrid")
        .def(py::init<>())
        .def_readwrite("t_min", &SampleGrid::t_min)
        .def_readwrite("t_max", &SampleGrid::t_max)
        .def_readwrite("points", &SampleGrid::points)
        .def_readwrite("logarithmic", &SampleGrid::logarithmic);

    py::class_<ClassViolation>(m, "ClassViolation")
        .def_readonly("input", &ClassViolation::input)
        .def_readonly("observed", &ClassViolation::observed)
        .def_readonly("expected", &ClassViolation::expected);

    py::class_<ClassReport>(m, "ClassReport")
        .def_readonly("class_checked", &ClassReport::class_checked)
        .def_readonly("passed", &ClassReport::passed)
        .def_readonly("violations", &ClassReport::violations)
        .def_readonly("samples_used", &ClassReport::samples_used);

    m.def("make_control_function", &make_control_function, py::arg("name"),
          "Builtin control functions by name, e.g. 'identity', 'linear:0.5', "
          "'theta1:0.25', 'theta2', 'theta3', 'psi-linear:0.25'.");
    m.def("validate_phi", &validate_phi, py::arg("fn"), py::arg("grid") = SampleGrid{});
    m.def("validate_psi", &validate_psi, py::arg("fn"), py::arg("grid") = SampleGrid{});
    m.def("validate_theta", &validate_theta, py::arg("fn"), py::arg("grid") = SampleGrid{});
    m.def("psi_from_theta", &psi_from_theta, py::arg("theta"),
          "The companion psi(s) = s - theta(2 s) induced by a theta-class function.");
    m.def("describe", &describe, py::arg("report"));

    py::class_<CoupledMap>(m, "CoupledMap")
        .def(py::init<CoupledMap::Evaluator, std::size_t, std::string>(),
             py::arg("evaluator"), py::arg("dimension"), py::arg("label") = "custom")
        .def("__call__", &CoupledMap::operator(), py::arg("x"), py::arg("y"))
        .def("dim", &CoupledMap::dim)
        .def("label", &CoupledMap::label);

    m.def("make_coupled_map", &make_coupled_map, py::arg("name"), py::arg("dimension") = 1,
          "Builtin maps: 'example1', 'linear:a,b', 'constant:c'.");

    py::enum_<ConditionKind>(m, "ConditionKind")
        .value("Bhaskar", ConditionKind::Bhaskar)
        .value("Luong", ConditionKind::Luong)
        .value("Berinde", ConditionKind::Berinde)
        .value("BerindeCor", ConditionKind::BerindeCor);

    py::class_<ConditionSpec>(m, "ConditionSpec")
        .def_static("bhaskar", &ConditionSpec::bhaskar, py::arg("k"),
                    py::arg("metric") = Metric{})
        .def_static("luong", &ConditionSpec::luong, py::arg("phi"), py::arg("psi"),
                    py::arg("metric") = Metric{})
        .def_static("berinde", &ConditionSpec::berinde, py::arg("phi"), py::arg("psi"),
                    py::arg("metric") = Metric{})
        .def_static("berinde_cor", &ConditionSpec::berinde_cor, py::arg("psi"),
                    py::arg("metric") = Metric{})
        .def_readonly("kind", &ConditionSpec::kind)
        .def("label", &ConditionSpec::label);

    py::enum_<Verdict>(m, "Verdict")
        .value("Certified", Verdict::Certified)
        .value("Falsified", Verdict::Falsified);

    py::class_<Witness>(m, "Witness")
        .def_readonly("x", &Witness::x)
        .def_readonly("y", &Witness::y)
        .def_readonly("u", &Witness::u)
        .def_readonly("v", &Witness::v)
        .def_readonly("lhs", &Witness::lhs)
        .def_readonly("rhs", &Witness::rhs)
        .def_readonly("note", &Witness::note);

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("checked", &CheckReport::checked)
        .def_readonly("verdict", &CheckReport::verdict)
        .def_readonly("witness", &CheckReport::witness)
        .def_readonly("tuples_tested", &CheckReport::tuples_tested)
        .def_readonly("seed", &CheckReport::seed);

    py::class_<SamplerConfig>(m, "SamplerConfig")
        .def(py::init<>())
        .def_readwrite("seed", &SamplerConfig::seed)
        .def_readwrite("budget", &SamplerConfig::budget)
        .def_readwrite("radius", &SamplerConfig::radius)
        .def_readwrite("order_slack", &SamplerConfig::order_slack);

    m.def("check_mixed_monotone", &check_mixed_monotone, py::arg("map"),
          py::arg("sampler") = SamplerConfig{},
          "Sampled check that the map is non-decreasing in x and non-increasing in y.");
    m.def("evaluate_condition", &evaluate_condition, py::arg("spec"), py::arg("map"),
          py::arg("x"), py::arg("y"), py::arg("u"), py::arg("v"),
          "Both sides of the condition at one comparable tuple (lhs, rhs).");
    m.def("certify", &certify, py::arg("spec"), py::arg("map"), py::arg("budget"),
          py::arg("seed"), py::arg("radius") = 10.0,
          "Seeded random search for a violating tuple; Certified means none found.");
    m.def("witness_record", &witness_record, py::arg("report"),
          "JSON text form of a check report.");

    py::enum_<InitialCondition>(m, "InitialCondition")
        .value("Mic", InitialCondition::Mic)
        .value("Mare", InitialCondition::Mare)
        .value("Neither", InitialCondition::Neither);

    py::enum_<StopReason>(m, "StopReason")
        .value("Converged", StopReason::Converged)
        .value("MaxIterations", StopReason::MaxIterations)
        .value("InvariantViolation", StopReason::InvariantViolation);

    py::class_<SolverConfig>(m, "SolverConfig")
        .def(py::init<>())
        .def_readwrite("tolerance", &SolverConfig::tolerance)
        .def_readwrite("max_iterations", &SolverConfig::max_iterations)
        .def_readwrite("strict_monotone", &SolverConfig::strict_monotone)
        .def_readwrite("metric", &SolverConfig::metric)
        .def_readwrite("order_slack", &SolverConfig::order_slack);

    py::class_<IterationTrace>(m, "IterationTrace")
        .def_readonly("points", &IterationTrace::points)
        .def_readonly("deltas", &IterationTrace::deltas)
        .def_readonly("chain_ok", &IterationTrace::chain_ok)
        .def_readonly("initial_condition", &IterationTrace::initial_condition)
        .def_readonly("monotone_chain_ok", &IterationTrace::monotone_chain_ok)
        .def_readonly("delta_nonincreasing_ok", &IterationTrace::delta_nonincreasing_ok)
        .def_readonly("stop_reason", &IterationTrace::stop_reason);

    py::class_<CoupledFixedPoint>(m, "CoupledFixedPoint")
        .def_readonly("point", &CoupledFixedPoint::point)
        .def_readonly("residual", &CoupledFixedPoint::residual)
        .def_readonly("diagonal", &CoupledFixedPoint::diagonal);

    py::class_<SolveResult>(m, "SolveResult")
        .def_readonly("fixed_point", &SolveResult::fixed_point)
        .def_readonly("trace", &SolveResult::trace);

    py::class_<UniquenessReport>(m, "UniquenessReport")
        .def_readonly("corroborated", &UniquenessReport::corroborated)
        .def_readonly("trivial", &UniquenessReport::trivial)
        .def_readonly("notes", &UniquenessReport::notes);

    m.def("apply_T", &apply_T, py::arg("map"), py::arg("point"),
          "One step of the product-space iteration (F(x,y), F(y,x)).");
    m.def("classify_initial", &classify_initial, py::arg("map"), py::arg("x0"), py::arg("y0"),
          py::arg("order_slack") = 0.0);
    m.def("solve", &solve, py::arg("map"), py::arg("x0"), py::arg("y0"),
          py::arg("config") = SolverConfig{},
          "Iterate to a coupled fixed point from an admissible starting pair.");
    m.def("uniqueness_probe", &uniqueness_probe, py::arg("map"), py::arg("fixed_points"),
          py::arg("config") = SolverConfig{},
          "Cross-check distinct solves: iterate from a common product-order bound.");
    m.def("diagonal_check", &diagonal_check, py::arg("fixed_point"), py::arg("trace"),
          py::arg("config") = SolverConfig{},
          "True when the limit lies on the diagonal (or the start was incomparable).");
    m.def("trace_to_csv", &trace_to_csv, py::arg("trace"));

    py::class_<FredholmProblem>(m, "FredholmProblem")
        .def(py::init<>())
        .def_readwrite("a", &FredholmProblem::a)
        .def_readwrite("b", &FredholmProblem::b)
        .def_readwrite("k1", &FredholmProblem::k1)
        .def_readwrite("k2", &FredholmProblem::k2)
        .def_readwrite("f", &FredholmProblem::f)
        .def_readwrite("g", &FredholmProblem::g)
        .def_readwrite("h", &FredholmProblem::h)
        .def_readwrite("lambda_", &FredholmProblem::lambda)
        .def_readwrite("mu", &FredholmProblem::mu)
        .def_readwrite("theta", &FredholmProblem::theta)
        .def_readwrite("grid_size", &FredholmProblem::grid_size);

    py::class_<Discretization>(m, "Discretization")
        .def_readonly("nodes", &Discretization::nodes)
        .def_readonly("weights", &Discretization::weights)
        .def_readonly("F", &Discretization::F);

    py::class_<AssumptionViolation>(m, "AssumptionViolation")
        .def_readonly("check", &AssumptionViolation::check)
        .def_readonly("t", &AssumptionViolation::t)
        .def_readonly("x", &AssumptionViolation::x)
        .def_readonly("y", &AssumptionViolation::y)
        .def_readonly("observed", &AssumptionViolation::observed)
        .def_readonly("bound", &AssumptionViolation::bound);

    py::class_<AssumptionReport>(m, "AssumptionReport")
        .def_readonly("k1_nonneg", &AssumptionReport::k1_nonneg)
        .def_readonly("k2_nonpos", &AssumptionReport::k2_nonpos)
        .def_readonly("f_lipschitz_ok", &AssumptionReport::f_lipschitz_ok)
        .def_readonly("g_lipschitz_ok", &AssumptionReport::g_lipschitz_ok)
        .def_readonly("norm_bound", &AssumptionReport::norm_bound)
        .def_readonly("norm_ok", &AssumptionReport::norm_ok)
        .def_readonly("luong_bound", &AssumptionReport::luong_bound)
        .def_readonly("violations", &AssumptionReport::violations)
        .def("passed", &AssumptionReport::passed);

    py::class_<LowerUpperPair>(m, "LowerUpperPair")
        .def(py::init<OrderedVector, OrderedVector>(), py::arg("alpha"), py::arg("beta"))
        .def_readonly("alpha", &LowerUpperPair::alpha)
        .def_readonly("beta", &LowerUpperPair::beta);

    py::class_<LowerUpperReport>(m, "LowerUpperReport")
        .def_readonly("ok", &LowerUpperReport::ok)
        .def_readonly("violations", &LowerUpperReport::violations);

    py::class_<FredholmSolution>(m, "FredholmSolution")
        .def_readonly("solution", &FredholmSolution::solution)
        .def_readonly("nodes", &FredholmSolution::nodes)
        .def_readonly("assumptions", &FredholmSolution::assumptions)
        .def_readonly("fixed_point", &FredholmSolution::fixed_point)
        .def_readonly("trace", &FredholmSolution::trace)
        .def_readonly("equation_residual", &FredholmSolution::equation_residual);

    py::class_<FredholmConfig>(m, "FredholmConfig")
        .def_readonly("problem", &FredholmConfig::problem)
        .def_readonly("pair", &FredholmConfig::pair)
        .def_readonly("solver", &FredholmConfig::solver);

    m.def("discretize", &discretize, py::arg("problem"),
          "Uniform nodes, trapezoid weights, and the induced coupled map.");
    m.def("check_assumptions", &check_assumptions, py::arg("problem"),
          py::arg("sampler") = SamplerConfig{},
          "Kernel signs at node pairs, sampled slope conditions, and the norm bound.");
    m.def("verify_lower_upper", &verify_lower_upper, py::arg("problem"), py::arg("pair"));
    m.def("solve_integral_equation", &solve_integral_equation, py::arg("problem"),
          py::arg("pair"), py::arg("config") = SolverConfig{},
          "Gate on the hypotheses, then iterate from (alpha, beta) to the solution.");
    m.def("parse_fredholm_config", &parse_fredholm_config, py::arg("json_text"));
    m.def("load_fredholm_config_file", &load_fredholm_config_file, py::arg("path"));
    m.def("solution_to_csv", &solution_to_csv, py::arg("nodes"), py::arg("solution"));
}
