#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "coupledfp/control_functions.hpp"
#include "coupledfp/order.hpp"

namespace coupledfp {

/// The coupled operator F: X x X -> X under study. Calls are checked: input
/// and output dimensions must match the declared dimension (entry finiteness
/// is enforced by OrderedVector itself).
class CoupledMap {
  public:
    using Evaluator =
        std::function<OrderedVector(const OrderedVector&, const OrderedVector&)>;

    CoupledMap(Evaluator evaluator, std::size_t dimension, std::string label);

    OrderedVector operator()(const OrderedVector& x, const OrderedVector& y) const;

    std::size_t dim() const { return dimension_; }
    const std::string& label() const { return label_; }

  private:
    Evaluator evaluator_;
    std::size_t dimension_;
    std::string label_;
};

/// The four contractive inequalities that can be checked at a comparable
/// tuple (x >= u, y <= v), with s = d(x,u) + d(y,v):
///   Bhaskar:    d(F(x,y),F(u,v)) <= k/2 * s
///   Luong:      phi(d(F(x,y),F(u,v))) <= phi(s)/2 - psi(s)
///   Berinde:    phi((d(F(x,y),F(u,v)) + d(F(y,x),F(v,u))) / 2)
///                   <= phi(s/2) - psi(s/2)
///   BerindeCor: d(F(x,y),F(u,v)) + d(F(y,x),F(v,u)) <= s - 2*psi(s/2)
enum class ConditionKind { Bhaskar, Luong, Berinde, BerindeCor };

struct ConditionSpec {
    ConditionKind kind = ConditionKind::Bhaskar;
    Metric metric{};
    double k = 0.0;       // Bhaskar only
    ControlFunction phi;  // Luong, Berinde
    ControlFunction psi;  // Luong, Berinde, BerindeCor

    /// Throws InvalidInput unless 0 <= k < 1.
    static ConditionSpec bhaskar(double k, Metric metric = {});
    static ConditionSpec luong(ControlFunction phi, ControlFunction psi, Metric metric = {});
    static ConditionSpec berinde(ControlFunction phi, ControlFunction psi, Metric metric = {});
    static ConditionSpec berinde_cor(ControlFunction psi, Metric metric = {});

    std::string label() const;
};

struct Witness {
    OrderedVector x, y, u, v;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string note;  // which check failed, for mixed-monotone witnesses
};

enum class Verdict { Certified, Falsified };

struct CheckReport {
    std::string checked;  // label of the condition or property that was sampled
    Verdict verdict = Verdict::Certified;
    std::optional<Witness> witness;
    std::size_t tuples_tested = 0;
    std::uint64_t seed = 0;
};

struct SamplerConfig {
    std::uint64_t seed = 42;
    std::size_t budget = 1000;
    double radius = 10.0;      // coordinates drawn from [-radius, radius]
    double order_slack = 0.0;  // componentwise slack for monotonicity checks
};

/// Violations must exceed the right side by more than this to count, so that
/// conditions holding with exact equality survive rounding.
inline constexpr double kViolationSlack = 1e-12;

/// Samples x1 <= x2 (and separately y1 <= y2) and checks that F is
/// non-decreasing in its first slot and non-increasing in its second.
CheckReport check_mixed_monotone(const CoupledMap& F, const SamplerConfig& sampler = {});

/// Both sides of the selected inequality at one comparable tuple; the
/// condition holds there iff lhs <= rhs. Throws HypothesisError unless
/// x >= u and y <= v.
std::pair<double, double> evaluate_condition(const ConditionSpec& spec, const CoupledMap& F,
                                             const OrderedVector& x, const OrderedVector& y,
                                             const OrderedVector& u, const OrderedVector& v);

/// Seeded random search for a violation over the comparable-tuple hypothesis
/// set: 25% boundary tuples (x = u or y = v), 25% near-diagonal tuples
/// (s close to 0), the rest uniform. Certified means no violation within the
/// budget; it is evidence, not proof. Deterministic for a fixed seed.
CheckReport certify(const ConditionSpec& spec, const CoupledMap& F, std::size_t budget,
                    std::uint64_t seed, double radius = 10.0);

/// Structured text form (JSON) of a report, including the witness if any.
std::string witness_record(const CheckReport& report);

/// Builtin maps selectable by name: "example1" ((x-2y)/4 on scalars),
/// "linear:a,b" (a*x - b*y componentwise), "constant:c". Throws InvalidInput
/// for unknown names.
CoupledMap make_coupled_map(const std::string& name, std::size_t dimension = 1);

std::string to_string(Verdict v);
std::string to_string(ConditionKind k);

}  // namespace coupledfp
