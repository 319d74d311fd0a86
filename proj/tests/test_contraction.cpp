#include <doctest.h>

#include <cmath>

#include "coupledfp/contraction.hpp"
#include "coupledfp/errors.hpp"
#include "coupledfp/random.hpp"

using namespace coupledfp;

namespace {

const Metric kScalar{MetricKind::AbsoluteScalar};

ControlFunction identity_phi() { return make_control_function("identity"); }
ControlFunction quarter_psi() { return make_control_function("psi-linear:0.25"); }

OrderedVector sc(double v) { return OrderedVector::scalar(v); }

}  // namespace

TEST_CASE("coupled map constructor and call-site checks") {
    CHECK_THROWS_AS(CoupledMap(nullptr, 1, "broken"), InvalidInput);
    CHECK_THROWS_AS(make_coupled_map("example1", 1)(sc(0), OrderedVector::constant(2, 0)),
                    DimensionMismatch);
    CHECK_THROWS_AS(make_coupled_map("no-such-map"), InvalidInput);
    CHECK_THROWS_AS(make_coupled_map("linear:1"), InvalidInput);
    CHECK_THROWS_AS(make_coupled_map("linear:1,x"), InvalidInput);

    const CoupledMap wrong_dim(
        [](const OrderedVector& x, const OrderedVector&) {
            return OrderedVector::constant(x.dim() + 1, 0.0);
        },
        1, "grows");
    CHECK_THROWS_AS(wrong_dim(sc(0), sc(0)), DimensionMismatch);
}

TEST_CASE("example1 map evaluates (x-2y)/4") {
    const CoupledMap F = make_coupled_map("example1");
    CHECK(F(sc(1), sc(0))[0] == 0.25);
    CHECK(F(sc(0), sc(1))[0] == -0.5);
    CHECK(F(sc(-2), sc(3))[0] == -2.0);
}

TEST_CASE("bhaskar factory enforces the constant range") {
    CHECK_THROWS_AS(ConditionSpec::bhaskar(1.0), InvalidInput);
    CHECK_THROWS_AS(ConditionSpec::bhaskar(-0.1), InvalidInput);
    CHECK(ConditionSpec::bhaskar(0.0).label() == "bhaskar(k=0)");
    CHECK(ConditionSpec::bhaskar(0.9).label() == "bhaskar(k=0.9)");
}

TEST_CASE("evaluate_condition rejects incomparable tuples") {
    const CoupledMap F = make_coupled_map("example1");
    const auto spec = ConditionSpec::bhaskar(0.5, kScalar);
    CHECK_THROWS_AS(evaluate_condition(spec, F, sc(0), sc(0), sc(1), sc(1)), HypothesisError);
}

TEST_CASE("berinde condition holds with equality on the worked tuple") {
    const CoupledMap F = make_coupled_map("example1");
    const auto spec = ConditionSpec::berinde(identity_phi(), quarter_psi(), kScalar);
    const auto [lhs, rhs] = evaluate_condition(spec, F, sc(1), sc(0), sc(0), sc(1));
    CHECK(lhs == 0.75);
    CHECK(rhs == 0.75);
}

TEST_CASE("luong condition is violated on the boundary tuple") {
    const CoupledMap F = make_coupled_map("example1");
    const auto spec = ConditionSpec::luong(identity_phi(), quarter_psi(), kScalar);
    const auto [lhs, rhs] = evaluate_condition(spec, F, sc(0), sc(0), sc(0), sc(1));
    CHECK(lhs == 0.5);
    CHECK(rhs == 0.25);
}

TEST_CASE("bhaskar condition is violated on the boundary tuple") {
    const CoupledMap F = make_coupled_map("example1");
    const auto spec = ConditionSpec::bhaskar(0.9, kScalar);
    const auto [lhs, rhs] = evaluate_condition(spec, F, sc(0), sc(0), sc(0), sc(1));
    CHECK(lhs == 0.5);
    CHECK(rhs == doctest::Approx(0.45));
}

TEST_CASE("certify separates the conditions on example1") {
    const CoupledMap F = make_coupled_map("example1");

    const auto berinde = certify(
        ConditionSpec::berinde(identity_phi(), quarter_psi(), kScalar), F, 10000, 42);
    CHECK(berinde.verdict == Verdict::Certified);
    CHECK(berinde.tuples_tested == 10000);

    const auto luong = certify(
        ConditionSpec::luong(identity_phi(), quarter_psi(), kScalar), F, 10000, 42);
    REQUIRE(luong.verdict == Verdict::Falsified);
    REQUIRE(luong.witness.has_value());
    CHECK(luong.witness->lhs > luong.witness->rhs + kViolationSlack);

    const auto bhaskar = certify(ConditionSpec::bhaskar(0.9, kScalar), F, 10000, 42);
    REQUIRE(bhaskar.verdict == Verdict::Falsified);
    REQUIRE(bhaskar.witness.has_value());
}

TEST_CASE("falsification witnesses replay to a violation") {
    const CoupledMap F = make_coupled_map("example1");
    for (double k : {0.1, 0.5, 0.9}) {
        const auto spec = ConditionSpec::bhaskar(k, kScalar);
        const auto report = certify(spec, F, 10000, 42);
        REQUIRE(report.verdict == Verdict::Falsified);
        const Witness& w = *report.witness;
        const auto [lhs, rhs] = evaluate_condition(spec, F, w.x, w.y, w.u, w.v);
        CHECK(lhs > rhs + kViolationSlack);
        CHECK(lhs == w.lhs);
        CHECK(rhs == w.rhs);
    }
}

TEST_CASE("certify is deterministic for a fixed seed") {
    const CoupledMap F = make_coupled_map("example1");
    const auto spec = ConditionSpec::bhaskar(0.5, kScalar);
    const auto a = certify(spec, F, 5000, 7);
    const auto b = certify(spec, F, 5000, 7);
    REQUIRE(a.verdict == b.verdict);
    REQUIRE(a.tuples_tested == b.tuples_tested);
    REQUIRE(a.witness.has_value() == b.witness.has_value());
    if (a.witness) {
        CHECK(a.witness->x == b.witness->x);
        CHECK(a.witness->v == b.witness->v);
        CHECK(a.witness->lhs == b.witness->lhs);
    }
    const auto c = certify(spec, F, 5000, 8);
    CHECK((c.witness->x == a.witness->x) == false);
}

TEST_CASE("luong reduces to bhaskar for linear controls") {
    const CoupledMap F = make_coupled_map("example1");
    const double k = 0.3;
    const auto luong = ConditionSpec::luong(
        identity_phi(), make_control_function("psi-bhaskar:0.3"), kScalar);
    const auto bhaskar = ConditionSpec::bhaskar(k, kScalar);

    UniformSampler rng(42);
    for (int trial = 0; trial < 10000; ++trial) {
        const double a = rng.range(0.0, 10.0);
        const double b = rng.range(0.0, 10.0);
        const double base_x = rng.range(-10.0, 10.0);
        const double base_y = rng.range(-10.0, 10.0);
        const OrderedVector x = sc(base_x + a), u = sc(base_x);
        const OrderedVector y = sc(base_y), v = sc(base_y + b);
        const auto [l1, r1] = evaluate_condition(luong, F, x, y, u, v);
        const auto [l2, r2] = evaluate_condition(bhaskar, F, x, y, u, v);
        REQUIRE(std::abs(l1 - l2) <= 1e-12);
        REQUIRE(std::abs(r1 - r2) <= 1e-12);
    }
}

TEST_CASE("bhaskar at a tuple and its mirror implies the symmetric-sum bound") {
    // The mirror of (x,y,u,v) is (v,u,y,x); together the two bhaskar
    // inequalities control both distances in the symmetric sum, giving the
    // two-control condition with psi(t) = (1-k)/2 * t.
    const double k = 0.6;
    const auto bhaskar = ConditionSpec::bhaskar(k, kScalar);
    const auto target = ConditionSpec::berinde_cor(
        make_control_function("psi-bhaskar:0.6"), kScalar);

    const CoupledMap F(
        [](const OrderedVector& x, const OrderedVector& y) {
            return OrderedVector::scalar(0.25 * x[0] - 0.05 * y[0] * y[0] / 10.0);
        },
        1, "mildly-nonlinear");

    UniformSampler rng(11);
    std::size_t implications = 0;
    for (int trial = 0; trial < 5000; ++trial) {
        const double a = rng.range(-10.0, 10.0), b = rng.range(-10.0, 10.0);
        const double c = rng.range(-10.0, 10.0), d = rng.range(-10.0, 10.0);
        const OrderedVector x = sc(std::max(a, b)), u = sc(std::min(a, b));
        const OrderedVector y = sc(std::min(c, d)), v = sc(std::max(c, d));
        const auto [fl, fr] = evaluate_condition(bhaskar, F, x, y, u, v);
        const auto [ml, mr] = evaluate_condition(bhaskar, F, v, u, y, x);
        if (fl <= fr && ml <= mr) {
            ++implications;
            const auto [lhs, rhs] = evaluate_condition(target, F, x, y, u, v);
            REQUIRE(rhs - lhs >= -kViolationSlack);
        }
    }
    CHECK(implications > 100);  // the implication must actually be exercised
}

TEST_CASE("mixed monotonicity of the builtin maps") {
    const auto ex1 = check_mixed_monotone(make_coupled_map("example1"));
    CHECK(ex1.verdict == Verdict::Certified);
    CHECK(ex1.tuples_tested == 1000);

    const auto constant = check_mixed_monotone(make_coupled_map("constant:3", 2));
    CHECK(constant.verdict == Verdict::Certified);

    const CoupledMap product(
        [](const OrderedVector& x, const OrderedVector& y) {
            return OrderedVector::scalar(std::abs(x[0]) * std::abs(y[0]) + 1.0);
        },
        1, "product");
    const auto bad = check_mixed_monotone(product);
    REQUIRE(bad.verdict == Verdict::Falsified);
    REQUIRE(bad.witness.has_value());
    CHECK(bad.witness->lhs > 0.0);
    CHECK_FALSE(bad.witness->note.empty());
}

TEST_CASE("witness records are valid json with the tuple inside") {
    const CoupledMap F = make_coupled_map("example1");
    const auto spec = ConditionSpec::luong(identity_phi(), quarter_psi(), kScalar);
    const auto report = certify(spec, F, 10000, 42);
    REQUIRE(report.verdict == Verdict::Falsified);
    const std::string record = witness_record(report);
    CHECK(record.find("\"verdict\": \"Falsified\"") != std::string::npos);
    CHECK(record.find("\"witness\"") != std::string::npos);
    CHECK(record.find("\"seed\": 42") != std::string::npos);

    const auto clean = witness_record(certify(
        ConditionSpec::berinde(identity_phi(), quarter_psi(), kScalar), F, 100, 42));
    CHECK(clean.find("\"verdict\": \"Certified\"") != std::string::npos);
    CHECK(clean.find("witness") == std::string::npos);
}
