#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wick/chart.hpp"
#include "wick/chart_map.hpp"
#include "wick/star_product.hpp"

namespace wick {

/// Lie_X I = 0: chi^k holomorphic and chibar^l antiholomorphic.
bool check_holomorphy(const VectorField& x);

struct InvarianceReport {
  bool holomorphic = true;
  /// lie_k_zero[s]: Lie_X of the order-s characterizing form vanishes.
  std::vector<bool> lie_k_zero;
  /// Order of the first nonvanishing Lie_X K_s.
  std::optional<int> first_bad_order;
  CheckReport certificate;

  /// Verdict of the geometric conditions (holomorphy and every Lie_X K_s).
  bool conditions_hold() const;
  bool is_derivation() const { return certificate.holds; }
};

/// Decides whether X is a derivation of the star product through order N
/// from the geometric conditions and certifies the answer on monomial
/// pairs. The certificate runs the product one order further so that a
/// failure of Lie_X K_N is visible; disagreement throws InternalError.
InvarianceReport check_derivation(const Chart& c, const VectorField& x, int order);

struct AutomorphismReport {
  std::vector<bool> pullback_preserves_k;
  std::optional<int> first_bad_order;
  CheckReport certificate;
  bool conditions_hold() const;
};

AutomorphismReport check_automorphism(const Chart& c, const ChartMap& phi, int order);

struct PrimitiveAnsatz {
  /// Total degree bound of the numerator; default: max_a deg(F_a * D^2) - deg D + 2.
  std::optional<int> degree;
  /// Power of the lcm of F's denominators used as the ansatz denominator D.
  int denominator_power = 1;
};

/// Rational a with d a = F inside the ansatz space, or nullopt. Throws
/// InputError("not closed") when d F != 0 and InputError for forms that
/// are not 1-forms. Free parameters of the linear system are set to zero,
/// lower-degree monomials taking precedence.
std::optional<RationalFunction> find_primitive(const Form& f, int dimension, const PrimitiveAnsatz& ansatz = {});

/// The unique X with i_X omega = d a0.
VectorField hamiltonian_vector_field(const Chart& c, const RationalFunction& a0);

struct QuasiInnerReport {
  /// Order of the first failure of d a = i_X K.
  std::optional<int> primitive_failure;
  bool hamiltonian_matches = false;
  CheckReport certificate;
  bool holds() const { return !primitive_failure && hamiltonian_matches && certificate.holds; }
};

/// X(b) = -(1/v) ad(a)(b) through order N on monomials with exponents <= N,
/// together with d a = i_X K and X = X_{a_0}.
QuasiInnerReport check_quasi_inner(const Chart& c, const VectorField& x, const FormalFunction& a, int order);

}  // namespace wick
