#include <doctest.h>

#include <cmath>

#include "coupledfp/control_functions.hpp"
#include "coupledfp/errors.hpp"

using namespace coupledfp;

namespace {

ControlFunction fn(FunctionClass cls, std::function<double(double)> f, std::string label) {
    return ControlFunction{std::move(f), cls, std::move(label)};
}

}  // namespace

TEST_CASE("sample grids cover (0, t_max]") {
    const auto ts = SampleGrid{1e-9, 1e3, 256, true}.materialize();
    CHECK(ts.size() == 256);
    CHECK(ts.front() == doctest::Approx(1e-9));
    CHECK(ts.back() == doctest::Approx(1e3));
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) CHECK(ts[i] < ts[i + 1]);

    CHECK_THROWS_AS((SampleGrid{0.0, 1.0, 10, false}.materialize()), InvalidInput);
    CHECK_THROWS_AS((SampleGrid{1.0, 1.0, 10, true}.materialize()), InvalidInput);
    CHECK_THROWS_AS((SampleGrid{0.1, 1.0, 1, true}.materialize()), InvalidInput);
}

TEST_CASE("identity fails the strict phi bound everywhere") {
    const auto report = validate_phi(make_control_function("identity"),
                                     SampleGrid{1e-9, 10.0, 256, true});
    CHECK_FALSE(report.passed);
    CHECK(report.violations.size() == 256);
}

TEST_CASE("t - ln(1+t) is a valid phi") {
    const auto phi = fn(FunctionClass::Phi,
                        [](double t) { return t - std::log1p(t); }, "t-ln(1+t)");
    const auto report = validate_phi(phi);
    CHECK(report.passed);
    CHECK(report.violations.empty());
}

TEST_CASE("linear maps pass or fail phi by their slope") {
    CHECK(validate_phi(make_control_function("linear:0.5")).passed);
    CHECK_FALSE(validate_phi(make_control_function("linear:1.5")).passed);
}

TEST_CASE("a step function trips the continuity heuristic") {
    const auto stepped = fn(FunctionClass::Phi,
                            [](double t) { return 0.25 * t + (t >= 1.0 ? 0.4 : 0.0); },
                            "step");
    const auto report = validate_phi(stepped, SampleGrid{0.5, 2.0, 201, false});
    CHECK_FALSE(report.passed);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].expected.find("continuity") == 0);
}

TEST_CASE("quarter slope is a valid psi") {
    const auto report = validate_psi(make_control_function("psi-linear:0.25"));
    CHECK(report.passed);
}

TEST_CASE("zero fails psi positivity") {
    CHECK_FALSE(validate_psi(make_control_function("psi-linear:0")).passed);
}

TEST_CASE("a psi that plateaus above zero fails the vanishing limit") {
    const auto plateau = fn(FunctionClass::Psi,
                            [](double t) { return 0.25 * t + 0.01; }, "offset");
    const auto report = validate_psi(plateau);
    CHECK_FALSE(report.passed);
    bool saw_limit_violation = false;
    for (const auto& v : report.violations) {
        if (v.expected.find("t -> 0+") != std::string::npos) saw_limit_violation = true;
    }
    CHECK(saw_limit_violation);
}

TEST_CASE("a psi with a dead zone fails") {
    const auto dead = fn(FunctionClass::Psi,
                         [](double t) { return (t >= 1.5 && t <= 2.5) ? 0.0 : 0.25 * t; },
                         "dead-zone");
    CHECK_FALSE(validate_psi(dead).passed);
}

TEST_CASE("s/(2s+1) is a valid psi") {
    const auto psi = fn(FunctionClass::Psi,
                        [](double s) { return s / (2.0 * s + 1.0); }, "s/(2s+1)");
    CHECK(validate_psi(psi).passed);
}

TEST_CASE("builtin theta fixtures pass validation") {
    for (const char* name : {"theta1:0.25", "theta2", "theta3"}) {
        const auto report = validate_theta(make_control_function(name));
        CHECK_MESSAGE(report.passed, describe(report));
    }
}

TEST_CASE("theta with 2k >= 1 fails via its derived psi") {
    const auto report = validate_theta(make_control_function("theta1:0.7"));
    CHECK_FALSE(report.passed);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations[0].expected.find("derived psi") == 0);
}

TEST_CASE("theta r/2 has zero partner and fails") {
    const auto half = fn(FunctionClass::Theta, [](double r) { return 0.5 * r; }, "r/2");
    const auto psi = psi_from_theta(half);
    for (double s : {0.5, 1.0, 2.0, 10.0}) CHECK(psi(s) == 0.0);
    CHECK_FALSE(validate_theta(half).passed);
}

TEST_CASE("derived psi formulas match their algebraic forms") {
    const auto grid = SampleGrid{}.materialize();

    const auto psi1 = psi_from_theta(make_control_function("theta1:0.25"));
    const auto psi2 = psi_from_theta(make_control_function("theta2"));
    const auto psi3 = psi_from_theta(make_control_function("theta3"));
    for (double s : grid) {
        CHECK(psi1(s) == 0.5 * s);  // exact: all operations scale by powers of two
        CHECK(std::abs(psi2(s) - s / (2.0 * s + 1.0)) <= 1e-12);
        CHECK(std::abs(psi3(s) - 0.5 * std::log1p(2.0 * s)) <= 1e-12);
    }
}

TEST_CASE("theta round-trips through its derived psi") {
    const auto grid = SampleGrid{}.materialize();
    for (const char* name : {"theta1:0.25", "theta2", "theta3"}) {
        const auto theta = make_control_function(name);
        const auto psi = psi_from_theta(theta);
        for (double r : grid) {
            const double rebuilt = 0.5 * r - psi(0.5 * r);
            REQUIRE(std::abs(rebuilt - theta(r)) <= 1e-12);
        }
    }
}

TEST_CASE("contraction-constant presets scale as documented") {
    const auto half = make_control_function("psi-bhaskar:0.5");
    const auto sym = make_control_function("psi-bhaskar-sym:0.5");
    CHECK(half(1.0) == 0.25);
    CHECK(sym(1.0) == 0.75);
    CHECK(validate_psi(half).passed);
    CHECK(validate_psi(sym).passed);
}

TEST_CASE("builtin lookup rejects unknown or malformed names") {
    CHECK_THROWS_AS(make_control_function("nope"), InvalidInput);
    CHECK_THROWS_AS(make_control_function("linear"), InvalidInput);
    CHECK_THROWS_AS(make_control_function("linear:abc"), InvalidInput);
    CHECK_THROWS_AS(make_control_function("linear:1.0x"), InvalidInput);
    CHECK(make_control_function("theta2")(1.0) == 0.25);
    CHECK(make_control_function("identity").declared_class == FunctionClass::Phi);
}

TEST_CASE("reports describe themselves") {
    const auto good = validate_psi(make_control_function("psi-linear:0.25"));
    CHECK(describe(good).find("passed") != std::string::npos);
    const auto bad = validate_psi(make_control_function("psi-linear:0"));
    CHECK(describe(bad).find("FAILED") != std::string::npos);
    CHECK(to_string(FunctionClass::Theta) == "theta");
}
