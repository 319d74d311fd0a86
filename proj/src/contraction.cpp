#include "coupledfp/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include <json.hpp>

#include "coupledfp/errors.hpp"
#include "coupledfp/random.hpp"

namespace coupledfp {

CoupledMap::CoupledMap(Evaluator evaluator, std::size_t dimension, std::string label)
    : evaluator_(std::move(evaluator)), dimension_(dimension), label_(std::move(label)) {
    if (!evaluator_) throw InvalidInput("CoupledMap requires an evaluator");
    if (dimension_ == 0) throw InvalidInput("CoupledMap dimension must be >= 1");
}

OrderedVector CoupledMap::operator()(const OrderedVector& x, const OrderedVector& y) const {
    if (x.dim() != dimension_ || y.dim() != dimension_) {
        throw DimensionMismatch("CoupledMap '" + label_ + "' expects dimension " +
                                std::to_string(dimension_));
    }
    OrderedVector out = evaluator_(x, y);
    if (out.dim() != dimension_) {
        throw DimensionMismatch("CoupledMap '" + label_ + "' returned dimension " +
                                std::to_string(out.dim()));
    }
    return out;
}

ConditionSpec ConditionSpec::bhaskar(double k, Metric metric) {
    if (!(k >= 0.0 && k < 1.0)) {
        throw InvalidInput("bhaskar constant must satisfy 0 <= k < 1");
    }
    ConditionSpec spec;
    spec.kind = ConditionKind::Bhaskar;
    spec.metric = metric;
    spec.k = k;
    return spec;
}

ConditionSpec ConditionSpec::luong(ControlFunction phi, ControlFunction psi, Metric metric) {
    ConditionSpec spec;
    spec.kind = ConditionKind::Luong;
    spec.metric = metric;
    spec.phi = std::move(phi);
    spec.psi = std::move(psi);
    return spec;
}

ConditionSpec ConditionSpec::berinde(ControlFunction phi, ControlFunction psi, Metric metric) {
    ConditionSpec spec = luong(std::move(phi), std::move(psi), metric);
    spec.kind = ConditionKind::Berinde;
    return spec;
}

ConditionSpec ConditionSpec::berinde_cor(ControlFunction psi, Metric metric) {
    ConditionSpec spec;
    spec.kind = ConditionKind::BerindeCor;
    spec.metric = metric;
    spec.psi = std::move(psi);
    return spec;
}

std::string ConditionSpec::label() const {
    switch (kind) {
        case ConditionKind::Bhaskar: {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "bhaskar(k=%g)", k);
            return buf;
        }
        case ConditionKind::Luong:
            return "luong(phi=" + phi.label + ", psi=" + psi.label + ")";
        case ConditionKind::Berinde:
            return "berinde(phi=" + phi.label + ", psi=" + psi.label + ")";
        case ConditionKind::BerindeCor:
            return "berinde-cor(psi=" + psi.label + ")";
    }
    return "?";
}

namespace {

bool is_geq(Ordering o) { return o == Ordering::GreaterOrEqual || o == Ordering::Equal; }
bool is_leq(Ordering o) { return o == Ordering::LessOrEqual || o == Ordering::Equal; }

OrderedVector draw_vec(UniformSampler& rng, std::size_t dim, double radius) {
    std::vector<double> vs(dim);
    for (auto& v : vs) v = rng.range(-radius, radius);
    return OrderedVector(vs);
}

// Comparable coordinate pair: lo <= hi componentwise.
std::pair<OrderedVector, OrderedVector> draw_ordered(UniformSampler& rng, std::size_t dim,
                                                     double radius) {
    std::vector<double> lo(dim), hi(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const double a = rng.range(-radius, radius);
        const double b = rng.range(-radius, radius);
        lo[i] = std::min(a, b);
        hi[i] = std::max(a, b);
    }
    return {OrderedVector(lo), OrderedVector(hi)};
}

struct Tuple {
    OrderedVector x, y, u, v;
};

// One comparable tuple (x >= u, y <= v). The mix by index is fixed so runs
// are reproducible: 0 mod 4 boundary, 1 mod 4 near-diagonal, rest uniform.
Tuple draw_tuple(UniformSampler& rng, std::size_t idx, std::size_t dim, double radius) {
    if (idx % 4 == 0) {
        if (idx % 8 == 0) {
            OrderedVector shared = draw_vec(rng, dim, radius);
            auto [y, v] = draw_ordered(rng, dim, radius);
            return {shared, y, shared, v};
        }
        auto [u, x] = draw_ordered(rng, dim, radius);
        OrderedVector shared = draw_vec(rng, dim, radius);
        return {x, shared, u, shared};
    }
    if (idx % 4 == 1) {
        std::vector<double> x(dim), y(dim), u(dim), v(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            const double p = rng.range(-radius, radius);
            const double q = rng.range(-radius, radius);
            u[i] = p;
            x[i] = p + radius * 1e-3 * rng.unit();
            v[i] = q;
            y[i] = q - radius * 1e-3 * rng.unit();
        }
        return {OrderedVector(x), OrderedVector(y), OrderedVector(u), OrderedVector(v)};
    }
    auto [u, x] = draw_ordered(rng, dim, radius);
    auto [y, v] = draw_ordered(rng, dim, radius);
    return {x, y, u, v};
}

}  // namespace

std::pair<double, double> evaluate_condition(const ConditionSpec& spec, const CoupledMap& F,
                                             const OrderedVector& x, const OrderedVector& y,
                                             const OrderedVector& u, const OrderedVector& v) {
    if (!is_geq(compare(x, u)) || !is_leq(compare(y, v))) {
        throw HypothesisError("condition tuples must satisfy x >= u and y <= v");
    }
    const Metric& m = spec.metric;
    const double s = distance(m, x, u) + distance(m, y, v);
    const double forward = distance(m, F(x, y), F(u, v));
    switch (spec.kind) {
        case ConditionKind::Bhaskar:
            return {forward, 0.5 * spec.k * s};
        case ConditionKind::Luong:
            return {spec.phi(forward), 0.5 * spec.phi(s) - spec.psi(s)};
        case ConditionKind::Berinde: {
            const double backward = distance(m, F(y, x), F(v, u));
            return {spec.phi(0.5 * (forward + backward)),
                    spec.phi(0.5 * s) - spec.psi(0.5 * s)};
        }
        case ConditionKind::BerindeCor: {
            const double backward = distance(m, F(y, x), F(v, u));
            return {forward + backward, s - 2.0 * spec.psi(0.5 * s)};
        }
    }
    throw InvalidInput("unknown condition kind");
}

CheckReport certify(const ConditionSpec& spec, const CoupledMap& F, std::size_t budget,
                    std::uint64_t seed, double radius) {
    if (budget < 1) throw InvalidInput("certify budget must be >= 1");
    CheckReport report;
    report.checked = spec.label();
    report.seed = seed;
    UniformSampler rng(seed);
    for (std::size_t idx = 0; idx < budget; ++idx) {
        const Tuple t = draw_tuple(rng, idx, F.dim(), radius);
        const auto [lhs, rhs] = evaluate_condition(spec, F, t.x, t.y, t.u, t.v);
        ++report.tuples_tested;
        if (lhs > rhs + kViolationSlack) {
            report.verdict = Verdict::Falsified;
            report.witness = Witness{t.x, t.y, t.u, t.v, lhs, rhs, ""};
            return report;
        }
    }
    report.verdict = Verdict::Certified;
    return report;
}

CheckReport check_mixed_monotone(const CoupledMap& F, const SamplerConfig& sampler) {
    CheckReport report;
    report.checked = "mixed-monotone(" + F.label() + ")";
    report.seed = sampler.seed;
    UniformSampler rng(sampler.seed);

    auto max_excess = [](const OrderedVector& a, const OrderedVector& b) {
        // Largest amount by which a exceeds b; positive means a <= b fails.
        double worst = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, a[i] - b[i]);
        return worst;
    };

    for (std::size_t idx = 0; idx < sampler.budget; ++idx) {
        ++report.tuples_tested;

        auto [x1, x2] = draw_ordered(rng, F.dim(), sampler.radius);
        OrderedVector y = draw_vec(rng, F.dim(), sampler.radius);
        if (!is_leq(compare(F(x1, y), F(x2, y), sampler.order_slack))) {
            report.verdict = Verdict::Falsified;
            report.witness = Witness{x1, y, x2, y, max_excess(F(x1, y), F(x2, y)), 0.0,
                                     "not non-decreasing in x"};
            return report;
        }

        auto [y1, y2] = draw_ordered(rng, F.dim(), sampler.radius);
        OrderedVector x = draw_vec(rng, F.dim(), sampler.radius);
        if (!is_geq(compare(F(x, y1), F(x, y2), sampler.order_slack))) {
            report.verdict = Verdict::Falsified;
            report.witness = Witness{x, y1, x, y2, max_excess(F(x, y2), F(x, y1)), 0.0,
                                     "not non-increasing in y"};
            return report;
        }
    }
    report.verdict = Verdict::Certified;
    return report;
}

std::string witness_record(const CheckReport& report) {
    nlohmann::json j;
    j["checked"] = report.checked;
    j["verdict"] = to_string(report.verdict);
    j["tuples_tested"] = report.tuples_tested;
    j["seed"] = report.seed;
    if (report.witness) {
        const Witness& w = *report.witness;
        j["witness"] = {
            {"x", w.x.values()}, {"y", w.y.values()}, {"u", w.u.values()},
            {"v", w.v.values()}, {"lhs", w.lhs},      {"rhs", w.rhs},
        };
        if (!w.note.empty()) j["witness"]["note"] = w.note;
    }
    return j.dump(2);
}

namespace {

std::vector<double> parse_params(const std::string& name, std::size_t expected) {
    const auto colon = name.find(':');
    if (colon == std::string::npos) {
        throw InvalidInput("map '" + name + "' requires " + std::to_string(expected) +
                           " parameter(s)");
    }
    std::vector<double> out;
    std::string rest = name.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string piece =
            rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            const double v = std::stod(piece, &used);
            if (used != piece.size() || !std::isfinite(v)) throw std::invalid_argument(piece);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InvalidInput("bad parameter '" + piece + "' in map '" + name + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.size() != expected) {
        throw InvalidInput("map '" + name + "' requires " + std::to_string(expected) +
                           " parameter(s)");
    }
    return out;
}

}  // namespace

CoupledMap make_coupled_map(const std::string& name, std::size_t dimension) {
    const auto colon = name.find(':');
    const std::string head = name.substr(0, colon);

    if (head == "example1") {
        return CoupledMap(
            [](const OrderedVector& x, const OrderedVector& y) {
                return OrderedVector::scalar((x[0] - 2.0 * y[0]) / 4.0);
            },
            1, "example1");
    }
    if (head == "linear") {
        const auto p = parse_params(name, 2);
        const double a = p[0], b = p[1];
        return CoupledMap(
            [a, b](const OrderedVector& x, const OrderedVector& y) {
                std::vector<double> out(x.dim());
                for (std::size_t i = 0; i < x.dim(); ++i) out[i] = a * x[i] - b * y[i];
                return OrderedVector(out);
            },
            dimension, name);
    }
    if (head == "constant") {
        const auto p = parse_params(name, 1);
        const double c = p[0];
        return CoupledMap(
            [c, dimension](const OrderedVector&, const OrderedVector&) {
                return OrderedVector::constant(dimension, c);
            },
            dimension, name);
    }
    throw InvalidInput("unknown coupled map '" + name + "'");
}

std::string to_string(Verdict v) {
    return v == Verdict::Certified ? "Certified" : "Falsified";
}

std::string to_string(ConditionKind k) {
    switch (k) {
        case ConditionKind::Bhaskar: return "bhaskar";
        case ConditionKind::Luong: return "luong";
        case ConditionKind::Berinde: return "berinde";
        case ConditionKind::BerindeCor: return "berinde-cor";
    }
    return "?";
}

}  // namespace coupledfp
