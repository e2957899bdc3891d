#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wick/chart.hpp"
#include "wick/diff_operator.hpp"

namespace wick {

using FormalFunction = Series<RationalFunction>;
using OperatorSeries = Series<DiffOperator>;

/// Wick-type star product of a chart, truncated at order N.
///
/// The left multiplication operator L_a = sum_t v^t A_t is the unique
/// operator series with A_0 = m(a), A_t(1) = 0 and A_t built from w-derivatives
/// only, that commutes with every right multiplication b -> b*u_k + v d_{z_k} b.
/// Orders of the chart data above the chart's own order count as zero.
class StarProduct {
 public:
  StarProduct(const Chart& chart, int order);
  explicit StarProduct(const Chart& chart) : StarProduct(chart, chart.order()) {}

  const Chart& chart() const { return chart_; }
  int order() const { return order_; }
  int dimension() const { return chart_.dimension(); }
  const Metric& metric() const { return metric_; }

  OperatorSeries left_mult_operator(const RationalFunction& a) const;
  OperatorSeries left_mult_operator(const FormalFunction& a) const;

  FormalFunction apply(const OperatorSeries& op, const FormalFunction& b) const;
  FormalFunction star(const FormalFunction& a, const FormalFunction& b) const;
  FormalFunction star(const RationalFunction& a, const RationalFunction& b) const;
  /// a*b - b*a.
  FormalFunction ad(const FormalFunction& a, const FormalFunction& b) const;

  /// Negative control: a copy whose A_order gets `delta` added to the
  /// coefficient of d^e whenever that coefficient is nonzero.
  StarProduct corrupted(int order, const Exponent& e, const Scalar& delta) const;

  /// Lifts a function to a constant series of this product's order.
  FormalFunction lift(const RationalFunction& f) const { return FormalFunction(order_, f); }

 private:
  struct Corruption {
    int order;
    Exponent exp;
    Scalar delta;
  };

  const RationalFunction& u_derivative(int s, int k, const Exponent& c) const;
  DiffOperator solve_order(const std::vector<DiffOperator>& q, int t) const;

  Chart chart_;
  int order_;
  Metric metric_;
  /// d_w^C u^{(s)}_k for |C| <= order + 1, keyed by (s, k, C).
  std::map<std::tuple<int, int, Exponent>, RationalFunction> u_cache_;
  std::optional<Corruption> corruption_;
};

/// Exponent vectors over the chart slots with every entry <= dmax, in
/// lexicographic order of (z1..zn, w1..wn).
std::vector<Exponent> monomial_exponents(int dimension, int dmax);
RationalFunction monomial(const Exponent& e);

/// Outcome of a finite certificate. `witness` describes the first failing
/// case in enumeration order.
struct CheckReport {
  std::string name;
  bool holds = true;
  std::size_t cases = 0;
  std::optional<std::string> witness;
};

/// Index of the first failing case in [0, count), or count if all pass.
/// Runs on up to WICK_THREADS threads; the result does not depend on scheduling.
std::size_t first_failure(std::size_t count, const std::function<bool(std::size_t)>& passes);

/// Runs `check` for every index, returning the witness for the first failure.
CheckReport run_sweep(const std::string& name, std::size_t count,
                      const std::function<std::optional<std::string>(std::size_t)>& check);

CheckReport verify_associativity(const StarProduct& sp, int dmax);
/// Antiholomorphic left factors and holomorphic right factors multiply pointwise.
CheckReport verify_wick_type(const StarProduct& sp, int dmax);
/// a * u_k = a u_k + v d_{z_k} a, and vbar_l * a = vbar_l a + v d_{w_l} a when v data is present.
CheckReport verify_defining_relation(const StarProduct& sp, int dmax);
/// Every A_t has w-order <= t, no z-derivatives, and A_t(1) = 0 for t >= 1.
CheckReport verify_order_bound(const StarProduct& sp, int dmax);

/// Recovers the characterizing form from the product alone: checks that the
/// chart's u_k satisfy the defining relation under this product and returns
/// delbar(-u_k dz_k) per order. Throws InternalError on inconsistency.
Series<Form> extract_karabegov(const StarProduct& sp);

/// extract_karabegov(sp) == karabegov_form(chart) through the product's order.
CheckReport verify_roundtrip(const StarProduct& sp);

}  // namespace wick
