#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wick/form.hpp"
#include "wick/linear_solve.hpp"
#include "wick/rational_function.hpp"
#include "wick/series.hpp"
#include "wick/vector_field.hpp"

namespace wick {

/// One tuple of potential derivatives (u_1..u_n or vbar_1..vbar_n).
using Tuple = std::vector<RationalFunction>;

/// Kähler chart given by Karabegov data: the functions u_k (and optionally
/// vbar_l) per order of the deformation parameter. Orders without data are
/// zero. The potential itself is never stored, only its derivatives.
class Chart {
 public:
  /// `u[s]` is the order-s tuple; `v`, when present, has the same layout.
  Chart(int dimension, int order, std::vector<Tuple> u, std::optional<std::vector<Tuple>> v = std::nullopt);

  int dimension() const { return n_; }
  /// Truncation order N of the data.
  int order() const { return order_; }

  /// Order-s tuple u^{(s)} (zeros beyond the stored data).
  Tuple u(int s) const;
  bool has_v() const { return v_.has_value(); }
  Tuple v(int s) const;

  /// u_k = sum_s v^s u^{(s)}_k as a series of the given order (k is 1-based).
  Series<RationalFunction> u_series(int k, int order) const;
  Series<RationalFunction> v_series(int l, int order) const;

  /// Same chart with a different truncation order.
  Chart with_order(int order) const;

  /// Slots of the complexified frame: z1..zn then w1..wn.
  std::vector<int> frame_slots() const;

 private:
  int n_;
  int order_;
  std::vector<Tuple> u_;
  std::optional<std::vector<Tuple>> v_;
};

struct ValidationItem {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationItem> items;
  bool ok() const;
  /// First failing item rendered as a message, empty if valid.
  std::string first_failure() const;
};

ValidationReport validate_chart(const Chart& c);
/// Throws InputError naming the first failing invariant.
void require_valid(const Chart& c);

struct Metric {
  /// g[k][l] = d u^{(0)}_k / d w_l.
  Matrix<RationalFunction> g;
  /// Matrix inverse of g: sum_l g[k][l] ginv[l][m] = delta_km.
  Matrix<RationalFunction> ginv;
  RationalFunction det;
};

Metric metric(const Chart& c);

/// Order-s coefficient sum_{k,l} d_{w_l} u^{(s)}_k dz_k ^ dw_l; order 0 is omega.
Series<Form> karabegov_form(const Chart& c);
Form kahler_form(const Chart& c);

/// Levi-Civita (Kähler) connection in the complexified coordinate frame:
/// nabla_{e_a} e_b = gamma[c][a][b] e_c with a, b, c indexing frame_slots().
struct Christoffels {
  int frame_size = 0;
  std::vector<Matrix<RationalFunction>> gamma;
  const RationalFunction& operator()(int c, int a, int b) const { return gamma[c][a][b]; }
};

Christoffels christoffels(const Chart& c);

/// R(e_a, e_b) e_c = r[d][c][a][b] e_d.
struct Curvature {
  int frame_size = 0;
  std::vector<std::vector<Matrix<RationalFunction>>> r;
  const RationalFunction& operator()(int d, int c, int a, int b) const { return r[d][c][a][b]; }
};

Curvature curvature(const Chart& c);
Curvature curvature(const Christoffels& gamma, const std::vector<int>& slots);

/// div(Y) = tr(nabla Y).
RationalFunction covariant_divergence(const Chart& c, const VectorField& y);
RationalFunction covariant_divergence(const Christoffels& gamma, const std::vector<int>& slots,
                                      const VectorField& y);

/// rho(Y, Y') = -1/4 tr(R(Y, Y') I), traced in the complexified frame.
/// Throws InternalError if the result has (2,0) or (0,2) parts.
Form ricci_form(const Chart& c);

/// The (1,1)-form with coefficients d_{w_l}(d_{z_k} det g / det g).
Form log_determinant_form(const Chart& c);

/// The constant relating ricci_form to log_determinant_form on Kähler charts.
Scalar ricci_log_determinant_factor();

}  // namespace wick
