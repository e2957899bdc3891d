#include "wick/momentum.hpp"

#include <algorithm>

#include "wick/error.hpp"
#include "wick/expression.hpp"
#include "wick/linear_solve.hpp"

namespace wick {

namespace {

std::string xi(int i) { return "xi" + std::to_string(i + 1); }

std::string pair_label(int j, int k) { return "(" + xi(j) + "," + xi(k) + ")"; }

FormalFunction resized(const FormalFunction& f, int order) {
  FormalFunction out(order);
  for (int s = 0; s <= std::min(order, f.order()); ++s) out[s] = f[s];
  return out;
}

int min_order(const FunctionCochain& f) {
  if (f.empty()) return 0;
  int n = f[0].order();
  for (const auto& g : f) n = std::min(n, g.order());
  return n;
}

void require_cochain(const LieAction& act, const FunctionCochain& f) {
  if (static_cast<int>(f.size()) != act.m)
    throw InputError("cochain has " + std::to_string(f.size()) + " values, algebra dimension is " +
                     std::to_string(act.m));
}

RationalFunction combination(const LieAction& act, const std::vector<RationalFunction>& f, int j, int k) {
  RationalFunction out;
  for (int i = 0; i < act.m; ++i)
    if (!act.c(i, j, k).is_zero()) out += act.c(i, j, k) * f[i];
  return out;
}

std::vector<RationalFunction> at_order(const FunctionCochain& f, int s) {
  std::vector<RationalFunction> out;
  for (const auto& g : f) out.push_back(s <= g.order() ? g[s] : RationalFunction());
  return out;
}

bool derivation_conditions(const VectorField& x, const Series<Form>& k, std::string& why) {
  if (!check_holomorphy(x)) {
    why = "does not preserve the complex structure";
    return false;
  }
  for (int s = 0; s <= k.order(); ++s)
    if (!lie_derivative(x, k[s]).is_zero()) {
      why = "Lie_X K is nonzero at order " + std::to_string(s);
      return false;
    }
  return true;
}

Matrix<Scalar> delta0_matrix(const LieAction& act) {
  Matrix<Scalar> a;
  for (int j = 0; j < act.m; ++j)
    for (int k = j + 1; k < act.m; ++k) {
      std::vector<Scalar> row(static_cast<std::size_t>(act.m));
      for (int i = 0; i < act.m; ++i) row[i] = -act.c(i, j, k);
      a.push_back(std::move(row));
    }
  return a;
}

}  // namespace

LieAction::LieAction(std::vector<VectorField> f, std::vector<std::vector<std::vector<Scalar>>> s)
    : m(static_cast<int>(f.size())), structure(std::move(s)), fields(std::move(f)) {
  if (m == 0) throw InputError("action: no fields");
  const auto mm = static_cast<std::size_t>(m);
  bool shape = structure.size() == mm;
  for (const auto& a : structure) {
    shape = shape && a.size() == mm;
    for (const auto& b : a) shape = shape && b.size() == mm;
  }
  if (!shape) throw InputError("action: structure constants must form an m x m x m array");
  for (const auto& x : fields)
    if (x.dimension() != fields[0].dimension()) throw InputError("action: fields have different dimensions");
}

LieAction LieAction::abelian(std::vector<VectorField> f) {
  const auto m = f.size();
  return LieAction(std::move(f), std::vector(m, std::vector(m, std::vector<Scalar>(m))));
}

ValidationReport validate_action(const Chart& c, const LieAction& act) {
  ValidationReport rep;
  const int m = act.m;
  ValidationItem dim{"dimension", true, ""};
  for (int i = 0; i < m && dim.ok; ++i)
    if (act.fields[i].dimension() != c.dimension()) {
      dim.ok = false;
      dim.detail = "field " + xi(i) + " has dimension " + std::to_string(act.fields[i].dimension()) +
                   ", chart has " + std::to_string(c.dimension());
    }
  rep.items.push_back(dim);
  if (!dim.ok) return rep;

  ValidationItem anti{"antisymmetry", true, ""};
  for (int i = 0; i < m && anti.ok; ++i)
    for (int j = 0; j < m && anti.ok; ++j)
      for (int k = j; k < m; ++k)
        if (!(act.c(i, j, k) == -act.c(i, k, j))) {
          anti.ok = false;
          anti.detail = "c^" + std::to_string(i + 1) + "_" + std::to_string(j + 1) + std::to_string(k + 1) +
                        " != -c^" + std::to_string(i + 1) + "_" + std::to_string(k + 1) + std::to_string(j + 1);
          break;
        }
  rep.items.push_back(anti);

  ValidationItem jacobi{"Jacobi identity", true, ""};
  for (int a = 0; a < m && jacobi.ok; ++a)
    for (int b = a + 1; b < m && jacobi.ok; ++b)
      for (int d = b + 1; d < m && jacobi.ok; ++d)
        for (int i = 0; i < m; ++i) {
          Scalar sum;
          for (int l = 0; l < m; ++l)
            sum += act.c(l, a, b) * act.c(i, l, d) + act.c(l, b, d) * act.c(i, l, a) + act.c(l, d, a) * act.c(i, l, b);
          if (!sum.is_zero()) {
            jacobi.ok = false;
            jacobi.detail = "fails for " + xi(a) + ", " + xi(b) + ", " + xi(d) + " in component " + xi(i);
            break;
          }
        }
  rep.items.push_back(jacobi);

  ValidationItem hol{"holomorphy", true, ""};
  for (int i = 0; i < m; ++i)
    if (!check_holomorphy(act.fields[i])) {
      hol.ok = false;
      hol.detail = "field " + xi(i) + " mixes holomorphic and antiholomorphic variables";
      break;
    }
  rep.items.push_back(hol);

  ValidationItem hom{"anti-homomorphism", true, ""};
  for (int j = 0; j < m && hom.ok; ++j)
    for (int k = j + 1; k < m; ++k) {
      VectorField expected(c.dimension());
      for (int i = 0; i < m; ++i)
        if (!act.c(i, j, k).is_zero()) expected -= act.c(i, j, k) * act.fields[i];
      if (!(bracket(act.fields[j], act.fields[k]) == expected)) {
        hom.ok = false;
        hom.detail = "[X_" + std::to_string(j + 1) + ", X_" + std::to_string(k + 1) + "] != -sum_i c^i_" +
                     std::to_string(j + 1) + std::to_string(k + 1) + " X_i";
        break;
      }
    }
  rep.items.push_back(hom);
  return rep;
}

void require_valid(const Chart& c, const LieAction& act) {
  require_valid(c);
  const auto rep = validate_action(c, act);
  if (!rep.ok()) throw InputError("invalid action: " + rep.first_failure());
}

Cochain2::Cochain2(int m_, int order_) : m(m_), order(order_) {
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) values.emplace(std::make_pair(j, k), ScalarSeries(order));
}

ScalarSeries Cochain2::at(int j, int k) const {
  if (j == k) return ScalarSeries(order);
  if (j < k) return values.at({j, k});
  return -values.at({k, j});
}

bool Cochain2::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const auto& v) { return v.second.is_zero(); });
}

FormalFunction on_bracket(const LieAction& act, const FunctionCochain& f, int j, int k) {
  FormalFunction out(min_order(f));
  for (int i = 0; i < act.m; ++i)
    if (!act.c(i, j, k).is_zero()) out += resized(f[i], out.order()).scale(act.c(i, j, k));
  return out;
}

QuantumHamiltonianResult quantum_hamiltonian(const Chart& c, const LieAction& act, int order,
                                             const PrimitiveAnsatz& ansatz) {
  require_valid(c, act);
  const Series<Form> k = karabegov_form(c.with_order(order));
  for (int i = 0; i < act.m; ++i) {
    std::string why;
    if (!derivation_conditions(act.fields[i], k, why))
      throw InputError("quantum_hamiltonian: field " + xi(i) + " is not a derivation: " + why);
  }
  QuantumHamiltonianResult res;
  FunctionCochain j(static_cast<std::size_t>(act.m), FormalFunction(order));
  for (int i = 0; i < act.m; ++i)
    for (int s = 0; s <= order; ++s) {
      auto a = find_primitive(interior_product(act.fields[i], k[s]), c.dimension(), ansatz);
      if (!a) {
        res.not_found = std::make_pair(i, s);
        return res;
      }
      j[i][s] = std::move(*a);
    }
  res.j = std::move(j);
  return res;
}

CheckReport verify_quantum_hamiltonian(const Chart& c, const LieAction& act, const FunctionCochain& j, int order) {
  require_valid(c, act);
  require_cochain(act, j);
  const StarProduct sp(c, order + 1);
  const auto exps = monomial_exponents(c.dimension(), order + 1);
  const std::size_t nb = exps.size();
  std::vector<RationalFunction> mono(nb);
  std::vector<OperatorSeries> lb(nb);
  std::vector<OperatorSeries> lj(static_cast<std::size_t>(act.m));
  std::vector<FormalFunction> jp(static_cast<std::size_t>(act.m));
  first_failure(nb + static_cast<std::size_t>(act.m), [&](std::size_t i) {
    if (i < nb) {
      mono[i] = monomial(exps[i]);
      lb[i] = sp.left_mult_operator(mono[i]);
    } else {
      const std::size_t q = i - nb;
      jp[q] = resized(j[q], order + 1);
      lj[q] = sp.left_mult_operator(jp[q]);
    }
    return true;
  });
  return run_sweep("quantum Hamiltonian", nb * static_cast<std::size_t>(act.m),
                   [&](std::size_t p) -> std::optional<std::string> {
                     const std::size_t q = p / nb, ib = p % nb;
                     const FormalFunction ad = sp.apply(lj[q], sp.lift(mono[ib])) - sp.apply(lb[ib], jp[q]);
                     const FormalFunction rhs = ad.divided_by_nu();
                     const FormalFunction lhs(order, -act.fields[q].apply(mono[ib]));
                     if (lhs == rhs) return std::nullopt;
                     return xi(static_cast<int>(q)) + ", b = " + mono[ib].to_string() + ": -X(b) = " + to_string(lhs) +
                            ", (1/v) ad(J)(b) = " + to_string(rhs);
                   });
}

Cochain2 lambda_cocycle(const Chart& c, const LieAction& act, const FunctionCochain& j) {
  require_valid(c, act);
  require_cochain(act, j);
  const int order = min_order(j);
  const Series<Form> k = karabegov_form(c.with_order(order));
  Cochain2 lam(act.m, order);
  for (auto& [jk, value] : lam.values) {
    const auto [a, b] = jk;
    for (int s = 0; s <= order; ++s) {
      const RationalFunction v = evaluate(k[s], act.fields[a], act.fields[b]) - combination(act, at_order(j, s), a, b);
      if (!v.is_constant())
        throw InternalError("lambda" + pair_label(a, b) + " at order " + std::to_string(s) +
                            " is not constant: " + v.to_string());
      value[s] = v.num().constant_value();
    }
  }
  for (const auto& d : coboundary2(act, lam))
    if (!d.is_zero()) throw InternalError("lambda fails the cocycle identity");
  return lam;
}

Cochain2 coboundary(const LieAction& act, const std::vector<ScalarSeries>& tau) {
  const int order = tau.empty() ? 0 : tau[0].order();
  Cochain2 out(act.m, order);
  for (auto& [jk, value] : out.values)
    for (int i = 0; i < act.m; ++i)
      if (!act.c(i, jk.first, jk.second).is_zero()) value -= ScalarSeries(tau[i]).scale(act.c(i, jk.first, jk.second));
  return out;
}

std::vector<ScalarSeries> coboundary2(const LieAction& act, const Cochain2& lam) {
  // (d lam)(a,b,d) = -lam([a,b],d) + lam([a,d],b) - lam([b,d],a).
  auto on = [&](int p, int q, int r) {
    ScalarSeries s(lam.order);
    for (int l = 0; l < act.m; ++l)
      if (!act.c(l, p, q).is_zero()) s += lam.at(l, r).scale(act.c(l, p, q));
    return s;
  };
  std::vector<ScalarSeries> out;
  for (int a = 0; a < act.m; ++a)
    for (int b = a + 1; b < act.m; ++b)
      for (int d = b + 1; d < act.m; ++d) out.push_back(on(a, d, b) - on(a, b, d) - on(b, d, a));
  return out;
}

CoboundaryResult solve_coboundary(const LieAction& act, const Cochain2& lam) {
  CoboundaryResult res;
  const Matrix<Scalar> a = delta0_matrix(act);
  const int r0 = static_cast<int>(rank(a));
  res.h1 = act.m - r0;

  // delta_1 on the basis 2-cochains.
  const int pairs = static_cast<int>(lam.values.size());
  Matrix<Scalar> b;
  {
    std::vector<std::vector<Scalar>> cols;
    for (const auto& [jk, unused] : lam.values) {
      Cochain2 e(act.m, 0);
      e.values[jk][0] = Scalar(1);
      std::vector<Scalar> col;
      for (const auto& v : coboundary2(act, e)) col.push_back(v[0]);
      cols.push_back(std::move(col));
    }
    const std::size_t triples = cols.empty() ? 0 : cols[0].size();
    for (std::size_t t = 0; t < triples; ++t) {
      std::vector<Scalar> row;
      for (const auto& col : cols) row.push_back(col[t]);
      b.push_back(std::move(row));
    }
  }
  res.h2 = pairs - static_cast<int>(rank(b)) - r0;

  std::vector<ScalarSeries> tau(static_cast<std::size_t>(act.m), ScalarSeries(lam.order));
  for (int s = 0; s <= lam.order; ++s) {
    std::vector<Scalar> rhs;
    for (const auto& [jk, v] : lam.values) rhs.push_back(v[s]);
    if (rhs.empty()) continue;
    const auto x = solve_linear(a, rhs);
    if (!x) {
      res.obstructed_order = s;
      return res;
    }
    for (int i = 0; i < act.m; ++i) tau[i][s] = (*x)[i];
  }
  res.tau = std::move(tau);
  return res;
}

CheckReport verify_equivariance(const Chart& c, const LieAction& act, const FunctionCochain& j, int order) {
  require_valid(c, act);
  require_cochain(act, j);
  const StarProduct sp(c, order + 1);
  std::vector<FormalFunction> jp(static_cast<std::size_t>(act.m));
  std::vector<OperatorSeries> lj(static_cast<std::size_t>(act.m));
  first_failure(jp.size(), [&](std::size_t i) {
    jp[i] = resized(j[i], order + 1);
    lj[i] = sp.left_mult_operator(jp[i]);
    return true;
  });
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < act.m; ++a)
    for (int b = a + 1; b < act.m; ++b) pairs.emplace_back(a, b);
  return run_sweep("equivariance", pairs.size(), [&](std::size_t p) -> std::optional<std::string> {
    const auto [a, b] = pairs[p];
    const FormalFunction lhs = sp.apply(lj[a], jp[b]) - sp.apply(lj[b], jp[a]);
    const FormalFunction rhs = on_bracket(act, jp, a, b).shifted(1);
    if (lhs == rhs) return std::nullopt;
    return pair_label(a, b) + ": J*J - J*J = " + to_string(lhs) + ", v J_[xi,eta] = " + to_string(rhs);
  });
}

CheckReport verify_correction_identities(const Chart& c, const LieAction& act, const std::vector<RationalFunction>& j0,
                                         const FunctionCochain& j) {
  require_valid(c, act);
  require_cochain(act, j);
  if (static_cast<int>(j0.size()) != act.m) throw InputError("classical momentum has the wrong number of values");
  const int order = min_order(j);
  const Series<Form> k = karabegov_form(c.with_order(order));
  CheckReport rep{"correction identities", true, 0, std::nullopt};
  auto fail = [&](std::string w) {
    if (rep.holds) rep.witness = std::move(w);
    rep.holds = false;
  };
  for (int s = 0; s <= order; ++s) {
    const Form kp = s == 0 ? Form() : k[s];
    std::vector<RationalFunction> jp = at_order(j, s);
    if (s == 0)
      for (int i = 0; i < act.m; ++i) jp[i] -= j0[i];
    for (int i = 0; i < act.m; ++i) {
      ++rep.cases;
      if (!(interior_product(act.fields[i], kp) == exterior_d(Form::function(jp[i]))))
        fail(xi(i) + " at order " + std::to_string(s) + ": i_X (K - omega) != d J_+");
    }
    for (int a = 0; a < act.m; ++a)
      for (int b = a + 1; b < act.m; ++b) {
        ++rep.cases;
        const RationalFunction lhs = evaluate(kp, act.fields[a], act.fields[b]);
        const RationalFunction rhs =
            act.fields[b].apply(jp[a]) - act.fields[a].apply(jp[b]) - combination(act, jp, a, b);
        if (!(lhs == rhs))
          fail(pair_label(a, b) + " at order " + std::to_string(s) + ": (K - omega)(X,Y) = " + lhs.to_string() +
               ", delta J_+ = " + rhs.to_string());
      }
  }
  return rep;
}

MomentumMapResult momentum_map(const Chart& c, const LieAction& act, int order, const PrimitiveAnsatz& ansatz) {
  MomentumMapResult res;
  res.stage = "quantum_hamiltonian";
  res.hamiltonian = quantum_hamiltonian(c, act, order, ansatz);
  if (!res.hamiltonian.j) return res;
  res.stage = "lambda_cocycle";
  res.lambda = lambda_cocycle(c, act, *res.hamiltonian.j);
  res.stage = "solve_coboundary";
  res.coboundary = solve_coboundary(act, *res.lambda);
  if (res.coboundary->obstructed()) return res;

  FunctionCochain jt = *res.hamiltonian.j;
  for (int i = 0; i < act.m; ++i)
    for (int s = 0; s <= order; ++s) jt[i][s] -= RationalFunction((*res.coboundary->tau)[i][s]);
  res.stage = "verified";
  res.equivariance = verify_equivariance(c, act, jt, order);
  res.hamiltonian_check = verify_quantum_hamiltonian(c, act, jt, order);
  res.correction = verify_correction_identities(c, act, at_order(jt, 0), jt);
  res.j_tau = std::move(jt);
  return res;
}

StrongInvarianceReport check_strong_invariance(const Chart& c, const LieAction& act,
                                               const std::vector<RationalFunction>& j0, int order) {
  require_valid(c, act);
  if (static_cast<int>(j0.size()) != act.m) throw InputError("classical momentum has the wrong number of values");
  const Series<Form> k = karabegov_form(c.with_order(order));
  for (int i = 0; i < act.m; ++i)
    if (!(exterior_d(Form::function(j0[i])) == interior_product(act.fields[i], k[0])))
      throw InputError("strong invariance: J0 of " + xi(i) + " is not a Hamiltonian for X_" + std::to_string(i + 1));
  StrongInvarianceReport rep;
  rep.classical = true;
  rep.strongly_invariant = true;
  for (int i = 0; i < act.m; ++i) {
    std::optional<int> bad;
    for (int s = 1; s <= order && !bad; ++s)
      if (!interior_product(act.fields[i], k[s]).is_zero()) bad = s;
    rep.first_nonzero.push_back(bad);
    if (bad) rep.strongly_invariant = false;
  }
  if (rep.strongly_invariant) {
    FunctionCochain lifted;
    for (const auto& f : j0) lifted.emplace_back(order, f);
    rep.certificate = verify_quantum_hamiltonian(c, act, lifted, order);
    rep.correction = verify_correction_identities(c, act, j0, lifted);
  }
  return rep;
}

PotentialMomentumReport potential_momentum(const Chart& c, const LieAction& act) {
  require_valid(c, act);
  if (!c.has_v()) throw InputError("potential_momentum: chart carries no v data");
  const int n = c.dimension(), order = c.order();
  PotentialMomentumReport rep;
  FunctionCochain j(static_cast<std::size_t>(act.m), FormalFunction(order));
  for (int i = 0; i < act.m; ++i) {
    const VectorField& x = act.fields[i];
    bool inv = true;
    for (int s = 0; s <= order; ++s) {
      const Tuple u = c.u(s), v = c.v(s);
      RationalFunction hol, anti;
      for (int q = 1; q <= n; ++q) {
        hol += x.component(z_slot(q)) * u[q - 1];
        anti += x.component(w_slot(q)) * v[q - 1];
      }
      if (!(hol + anti).is_zero()) inv = false;
      j[i][s] = (hol - anti) * RationalFunction(Scalar(mpq_class(1, 2)));
    }
    rep.invariant.push_back(inv);
  }
  if (!std::all_of(rep.invariant.begin(), rep.invariant.end(), [](bool b) { return b; })) return rep;

  const Series<Form> k = karabegov_form(c);
  rep.primitive_ok = true;
  for (int i = 0; i < act.m; ++i)
    for (int s = 0; s <= order; ++s)
      if (!(exterior_d(Form::function(j[i][s])) == interior_product(act.fields[i], k[s]))) rep.primitive_ok = false;
  rep.lambda_zero = rep.primitive_ok && lambda_cocycle(c, act, j).is_zero();
  rep.j = std::move(j);
  return rep;
}

Chart berezin_toeplitz(const Chart& c) {
  require_valid(c);
  const int n = c.dimension();
  const Metric m = metric(c);
  const Scalar factor = Scalar(0, -2) * ricci_log_determinant_factor();  // 2/i
  Tuple u1;
  for (int k = 1; k <= n; ++k) u1.push_back(factor * (m.det.derivative(z_slot(k)) / m.det));
  Chart bt(n, std::max(c.order(), 1), {c.u(0), std::move(u1)});
  if (!(karabegov_form(bt.with_order(1))[1] == Scalar(0, -2) * ricci_form(c)))
    throw InternalError("Berezin-Toeplitz correction does not reproduce (2/i) rho");
  return bt;
}

RationalFunction bt_divergence_term(const Chart& c, const VectorField& x) {
  return Scalar(mpq_class(1, 4)) * covariant_divergence(c, x.complex_structure());
}

bool BTMomentumReport::holds() const {
  return std::all_of(contraction_ok.begin(), contraction_ok.end(), [](bool b) { return b; }) &&
         std::all_of(pairing_ok.begin(), pairing_ok.end(), [](const auto& p) { return p.second; }) &&
         hamiltonian_check.holds;
}

BTMomentumReport bt_momentum(const Chart& c, const LieAction& act, int order,
                             const std::optional<std::vector<RationalFunction>>& j0) {
  require_valid(c, act);
  const int n = c.dimension();
  const Form omega = kahler_form(c);
  const Form rho = ricci_form(c);
  BTMomentumReport rep;
  for (int i = 0; i < act.m; ++i) {
    const Form contraction = interior_product(act.fields[i], omega);
    if (j0) {
      if (static_cast<int>(j0->size()) != act.m) throw InputError("classical momentum has the wrong number of values");
      if (!(exterior_d(Form::function((*j0)[i])) == contraction))
        throw InputError("bt: supplied J0 of " + xi(i) + " is not a Hamiltonian");
      rep.j0.push_back((*j0)[i]);
    } else {
      auto a = find_primitive(contraction, n);
      if (!a) throw InputError("bt: no classical Hamiltonian found for " + xi(i));
      rep.j0.push_back(std::move(*a));
    }
    rep.j.push_back(bt_divergence_term(c, act.fields[i]));
    rep.contraction_ok.push_back(interior_product(act.fields[i], rho) == exterior_d(Form::function(rep.j.back())));
  }
  for (int a = 0; a < act.m; ++a)
    for (int b = a + 1; b < act.m; ++b)
      rep.pairing_ok[{a, b}] = evaluate(rho, act.fields[a], act.fields[b]) == combination(act, rep.j, a, b);

  const Chart bt = berezin_toeplitz(c).with_order(order);
  for (int i = 0; i < act.m; ++i) {
    FormalFunction q(order, rep.j0[i]);
    if (order >= 1) q[1] = Scalar(0, -2) * rep.j[i];
    rep.quantum.push_back(std::move(q));
  }
  rep.hamiltonian_check = verify_quantum_hamiltonian(bt, act, rep.quantum, order);
  return rep;
}

}  // namespace wick
