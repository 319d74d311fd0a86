#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coupledfp/errors.hpp"

namespace coupledfp {

/// Relation between two elements of a partial order.
enum class Ordering { LessOrEqual, GreaterOrEqual, Equal, Incomparable };

enum class MetricKind { SupNorm, Euclidean, AbsoluteScalar };

/// Finite real vector, ordered componentwise. This is the ambient space:
/// scalars are dimension-1 vectors, continuous functions enter as grid
/// samples. Entries are validated finite at construction and immutable
/// afterwards, so values are safe to share across threads.
class OrderedVector {
public:
    explicit OrderedVector(std::vector<double> values);

    static OrderedVector constant(std::size_t dim, double value);
    static OrderedVector scalar(double value) { return constant(1, value); }

    std::size_t dim() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    const std::vector<double>& values() const { return values_; }
    std::span<const double> span() const { return values_; }

    bool operator==(const OrderedVector& other) const = default;

private:
    std::vector<double> values_;
};

/// A point of the product space X x X. Both components must share a dimension.
struct PairPoint {
    OrderedVector first;
    OrderedVector second;

    PairPoint(OrderedVector f, OrderedVector s);
};

struct Metric {
    MetricKind kind = MetricKind::SupNorm;
};

/// Componentwise partial order on vectors. `slack` relaxes every comparison
/// by an absolute amount (default 0: exact floating-point order); use it for
/// noisy discretizations only.
Ordering compare(const OrderedVector& a, const OrderedVector& b, double slack = 0.0);

/// Product order on pairs: (u,v) <= (x,y) iff u <= x and v >= y componentwise
/// (the second slot is deliberately reversed). Returns the relation of `a`
/// to `b`, same convention as compare().
Ordering product_compare(const PairPoint& a, const PairPoint& b, double slack = 0.0);

/// (max{a.first, b.first}, min{a.second, b.second}): an upper bound of both
/// arguments in the product order. Every pair of pairs has one, which is the
/// comparability witness the uniqueness probe relies on.
PairPoint bounds_pair(const PairPoint& a, const PairPoint& b);

/// Distance between vectors under the selected metric. AbsoluteScalar is the
/// dimension-1 specialization |a - b| and rejects longer vectors.
double distance(Metric m, const OrderedVector& a, const OrderedVector& b);

/// Metric on the product space: half the sum of the componentwise distances.
double d2(Metric m, const PairPoint& a, const PairPoint& b);

std::string to_string(Ordering o);
std::string to_string(const OrderedVector& v);

}  // namespace coupledfp
