#include "coupledfp/order.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace coupledfp {

OrderedVector::OrderedVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw InvalidInput("OrderedVector requires dimension >= 1");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!std::isfinite(values_[i])) {
            throw InvalidInput("OrderedVector entry " + std::to_string(i) +
                               " is not finite");
        }
    }
}

OrderedVector OrderedVector::constant(std::size_t dim, double value) {
    return OrderedVector(std::vector<double>(dim, value));
}

PairPoint::PairPoint(OrderedVector f, OrderedVector s)
    : first(std::move(f)), second(std::move(s)) {
    if (first.dim() != second.dim()) {
        throw DimensionMismatch("PairPoint components differ in dimension: " +
                                std::to_string(first.dim()) + " vs " +
                                std::to_string(second.dim()));
    }
}

namespace {

void require_same_dim(const OrderedVector& a, const OrderedVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("vector dimensions differ: " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
}

// a <= b componentwise, each comparison relaxed by slack.
bool leq(const OrderedVector& a, const OrderedVector& b, double slack) {
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!(a[i] <= b[i] + slack)) return false;
    }
    return true;
}

Ordering from_flags(bool le, bool ge) {
    if (le && ge) return Ordering::Equal;
    if (le) return Ordering::LessOrEqual;
    if (ge) return Ordering::GreaterOrEqual;
    return Ordering::Incomparable;
}

}  // namespace

Ordering compare(const OrderedVector& a, const OrderedVector& b, double slack) {
    require_same_dim(a, b);
    return from_flags(leq(a, b, slack), leq(b, a, slack));
}

Ordering product_compare(const PairPoint& a, const PairPoint& b, double slack) {
    require_same_dim(a.first, b.first);
    require_same_dim(a.second, b.second);
    // a <= b in the product order: first slots ascend, second slots descend.
    const bool a_le_b = leq(a.first, b.first, slack) && leq(b.second, a.second, slack);
    const bool b_le_a = leq(b.first, a.first, slack) && leq(a.second, b.second, slack);
    return from_flags(a_le_b, b_le_a);
}

PairPoint bounds_pair(const PairPoint& a, const PairPoint& b) {
    require_same_dim(a.first, b.first);
    require_same_dim(a.second, b.second);
    std::vector<double> hi(a.first.dim());
    std::vector<double> lo(a.second.dim());
    for (std::size_t i = 0; i < hi.size(); ++i) {
        hi[i] = std::max(a.first[i], b.first[i]);
        lo[i] = std::min(a.second[i], b.second[i]);
    }
    return PairPoint(OrderedVector(std::move(hi)), OrderedVector(std::move(lo)));
}

double distance(Metric m, const OrderedVector& a, const OrderedVector& b) {
    require_same_dim(a, b);
    switch (m.kind) {
        case MetricKind::SupNorm: {
            double d = 0.0;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                d = std::max(d, std::abs(a[i] - b[i]));
            }
            return d;
        }
        case MetricKind::Euclidean: {
            double s = 0.0;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                const double diff = a[i] - b[i];
                s += diff * diff;
            }
            return std::sqrt(s);
        }
        case MetricKind::AbsoluteScalar: {
            if (a.dim() != 1) {
                throw InvalidInput("AbsoluteScalar metric requires dimension 1, got " +
                                   std::to_string(a.dim()));
            }
            return std::abs(a[0] - b[0]);
        }
    }
    throw InvalidInput("unknown metric kind");
}

double d2(Metric m, const PairPoint& a, const PairPoint& b) {
    return 0.5 * (distance(m, a.first, b.first) + distance(m, a.second, b.second));
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::LessOrEqual: return "LessOrEqual";
        case Ordering::GreaterOrEqual: return "GreaterOrEqual";
        case Ordering::Equal: return "Equal";
        case Ordering::Incomparable: return "Incomparable";
    }
    return "?";
}

std::string to_string(const OrderedVector& v) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        out << (i ? ", " : "") << buf;
    }
    out << "]";
    return out.str();
}

}  // namespace coupledfp
