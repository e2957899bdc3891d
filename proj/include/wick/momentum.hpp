#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wick/chart.hpp"
#include "wick/star_product.hpp"
#include "wick/symmetry.hpp"

namespace wick {

/// A Lie algebra acting by vector fields. structure[i][j][k] = c^i_{jk}
/// (0-based), so [e_j, e_k] = sum_i c^i_{jk} e_i, and the fields form an
/// anti-homomorphism: [X_j, X_k] = -sum_i c^i_{jk} X_i.
struct LieAction {
  int m = 0;
  std::vector<std::vector<std::vector<Scalar>>> structure;
  std::vector<VectorField> fields;

  LieAction() = default;
  LieAction(std::vector<VectorField> fields, std::vector<std::vector<std::vector<Scalar>>> structure);
  /// m fields with vanishing brackets.
  static LieAction abelian(std::vector<VectorField> fields);

  const Scalar& c(int i, int j, int k) const { return structure[i][j][k]; }
};

ValidationReport validate_action(const Chart& c, const LieAction& act);
void require_valid(const Chart& c, const LieAction& act);

using ScalarSeries = Series<Scalar>;
/// Function-valued 1-cochain: one formal function per basis element.
using FunctionCochain = std::vector<FormalFunction>;

/// Scalar 2-cochain stored on pairs j < k.
struct Cochain2 {
  int m = 0;
  int order = 0;
  std::map<std::pair<int, int>, ScalarSeries> values;

  Cochain2() = default;
  Cochain2(int m, int order);
  /// Alternating extension.
  ScalarSeries at(int j, int k) const;
  bool is_zero() const;
};

/// sum_i coef_i * f_i, truncated at the smallest order present.
FormalFunction on_bracket(const LieAction& act, const FunctionCochain& f, int j, int k);

struct QuantumHamiltonianResult {
  std::optional<FunctionCochain> j;
  /// (basis index, order) of the first primitive that was not found.
  std::optional<std::pair<int, int>> not_found;
};

/// Solves d J_xi = i_{X_xi} K per basis element and order. Throws
/// InputError when some field fails the derivation conditions.
QuantumHamiltonianResult quantum_hamiltonian(const Chart& c, const LieAction& act, int order,
                                             const PrimitiveAnsatz& ansatz = {});

/// -X_xi(b) = (1/v) ad(J_xi)(b) through order N on monomials with exponents <= N + 1.
CheckReport verify_quantum_hamiltonian(const Chart& c, const LieAction& act, const FunctionCochain& j, int order);

/// lambda(xi, eta) = K(X_xi, X_eta) - J_[xi,eta] per order. Throws
/// InternalError if a value is not constant or the cocycle identity fails.
Cochain2 lambda_cocycle(const Chart& c, const LieAction& act, const FunctionCochain& j);

/// (delta_0 tau)(xi, eta) = -tau([xi, eta]).
Cochain2 coboundary(const LieAction& act, const std::vector<ScalarSeries>& tau);
/// Trivial-coefficient differential of a 2-cochain, one value per triple i < j < k.
std::vector<ScalarSeries> coboundary2(const LieAction& act, const Cochain2& lambda);

struct CoboundaryResult {
  std::optional<std::vector<ScalarSeries>> tau;
  int h1 = 0;
  int h2 = 0;
  /// Order at which delta_0 tau = lambda has no solution.
  std::optional<int> obstructed_order;
  bool obstructed() const { return !tau; }
};

CoboundaryResult solve_coboundary(const LieAction& act, const Cochain2& lambda);

/// J_xi * J_eta - J_eta * J_xi = v J_[xi,eta] on every basis pair.
CheckReport verify_equivariance(const Chart& c, const LieAction& act, const FunctionCochain& j, int order);

/// With J_+ = J - J0: i_X (K - omega) = d J_+ and (K - omega)(X_xi, X_eta)
/// = -X_xi(J_+eta) + X_eta(J_+xi) - J_+[xi,eta], per order.
CheckReport verify_correction_identities(const Chart& c, const LieAction& act, const std::vector<RationalFunction>& j0,
                                         const FunctionCochain& j);

struct MomentumMapResult {
  /// "quantum_hamiltonian", "solve_coboundary" or "verified".
  std::string stage;
  QuantumHamiltonianResult hamiltonian;
  std::optional<Cochain2> lambda;
  std::optional<CoboundaryResult> coboundary;
  std::optional<FunctionCochain> j_tau;
  CheckReport equivariance;
  CheckReport hamiltonian_check;
  CheckReport correction;

  bool found() const { return j_tau.has_value(); }
};

MomentumMapResult momentum_map(const Chart& c, const LieAction& act, int order, const PrimitiveAnsatz& ansatz = {});

struct StrongInvarianceReport {
  /// d J0_xi = i_{X_xi} omega for every xi.
  bool classical = false;
  /// Per basis element, the first order s >= 1 with i_X K_s != 0.
  std::vector<std::optional<int>> first_nonzero;
  bool strongly_invariant = false;
  /// Present when strongly invariant: J0 as a quantum Hamiltonian, and the correction identities with J_+ = 0.
  std::optional<CheckReport> certificate;
  std::optional<CheckReport> correction;
};

StrongInvarianceReport check_strong_invariance(const Chart& c, const LieAction& act,
                                               const std::vector<RationalFunction>& j0, int order);

struct PotentialMomentumReport {
  /// chi^k u_k + chibar^l v_l = 0 at every order, per basis element.
  std::vector<bool> invariant;
  std::optional<FunctionCochain> j;
  bool primitive_ok = false;
  bool lambda_zero = false;
};

/// J_xi = (chi^k u_k - chibar^l v_l)/2 per order; needs v data.
PotentialMomentumReport potential_momentum(const Chart& c, const LieAction& act);

/// Chart with the same order-0 data and order-1 correction d_z log det g.
/// Self-checks the result against (2/i) rho.
Chart berezin_toeplitz(const Chart& c);

/// j(xi) = (1/4) div(I X_xi).
RationalFunction bt_divergence_term(const Chart& c, const VectorField& x);

struct BTMomentumReport {
  std::vector<RationalFunction> j0;
  std::vector<RationalFunction> j;
  /// i_{X_xi} rho = d j(xi), per basis element.
  std::vector<bool> contraction_ok;
  /// rho(X_xi, X_eta) = j([xi, eta]) on pairs j < k.
  std::map<std::pair<int, int>, bool> pairing_ok;
  FunctionCochain quantum;
  CheckReport hamiltonian_check;
  bool holds() const;
};

/// Classical momenta are found by find_primitive unless supplied. Throws
/// InputError when some i_X omega has no primitive in the ansatz.
BTMomentumReport bt_momentum(const Chart& c, const LieAction& act, int order,
                             const std::optional<std::vector<RationalFunction>>& j0 = std::nullopt);

}  // namespace wick
