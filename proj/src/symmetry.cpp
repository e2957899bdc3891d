#include "wick/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "wick/error.hpp"
#include "wick/expression.hpp"

namespace wick {

namespace {

FormalFunction apply_field(const VectorField& x, const FormalFunction& f) {
  FormalFunction out(f.order());
  for (int s = 0; s <= f.order(); ++s) out[s] = x.apply(f[s]);
  return out;
}

FormalFunction padded(const FormalFunction& f, int order) {
  FormalFunction out(order);
  for (int s = 0; s <= std::min(order, f.order()); ++s) out[s] = f[s];
  return out;
}

std::string pair_text(const RationalFunction& a, const RationalFunction& b) {
  return "a = " + a.to_string() + ", b = " + b.to_string();
}

void require_dimension(const Chart& c, int dimension, const char* what) {
  if (dimension != c.dimension())
    throw InputError(std::string(what) + " dimension " + std::to_string(dimension) + " does not match chart dimension " +
                     std::to_string(c.dimension()));
}

std::vector<int> chart_slots(int n) {
  std::vector<int> s;
  for (int k = 1; k <= n; ++k) s.push_back(z_slot(k));
  for (int l = 1; l <= n; ++l) s.push_back(w_slot(l));
  return s;
}

// Monomials over the chart slots with total degree <= d, by ascending degree.
std::vector<Exponent> monomials_by_degree(int n, int d) {
  std::vector<Exponent> all;
  for (const auto& e : monomial_exponents(n, d))
    if (total_degree(e) <= d) all.push_back(e);
  std::stable_sort(all.begin(), all.end(), [](const Exponent& a, const Exponent& b) {
    const int da = total_degree(a), db = total_degree(b);
    return da != db ? da < db : a > b;
  });
  return all;
}

}  // namespace

bool check_holomorphy(const VectorField& x) {
  const int n = x.dimension();
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      if (!x.component(z_slot(k)).derivative(w_slot(l)).is_zero()) return false;
      if (!x.component(w_slot(l)).derivative(z_slot(k)).is_zero()) return false;
    }
  return true;
}

bool InvarianceReport::conditions_hold() const {
  return holomorphic && std::all_of(lie_k_zero.begin(), lie_k_zero.end(), [](bool b) { return b; });
}

InvarianceReport check_derivation(const Chart& c, const VectorField& x, int order) {
  require_valid(c);
  require_dimension(c, x.dimension(), "vector field");
  InvarianceReport rep;
  rep.holomorphic = check_holomorphy(x);
  const Series<Form> k = karabegov_form(c.with_order(order));
  for (int s = 0; s <= order; ++s) {
    rep.lie_k_zero.push_back(lie_derivative(x, k[s]).is_zero());
    if (!rep.lie_k_zero.back() && !rep.first_bad_order) rep.first_bad_order = s;
  }

  const StarProduct sp(c, order + 1);
  const auto exps = monomial_exponents(c.dimension(), order + 1);
  const std::size_t m = exps.size();
  std::vector<RationalFunction> mono(m);
  std::vector<OperatorSeries> ops(m), xops(m);
  first_failure(m, [&](std::size_t i) {
    mono[i] = monomial(exps[i]);
    ops[i] = sp.left_mult_operator(mono[i]);
    xops[i] = sp.left_mult_operator(x.apply(mono[i]));
    return true;
  });
  rep.certificate = run_sweep("derivation", m * m, [&](std::size_t p) -> std::optional<std::string> {
    const std::size_t ia = p / m, ib = p % m;
    const FormalFunction b = sp.lift(mono[ib]);
    const FormalFunction lhs = apply_field(x, sp.apply(ops[ia], b));
    const FormalFunction rhs = sp.apply(xops[ia], b) + sp.apply(ops[ia], sp.lift(x.apply(mono[ib])));
    if (lhs == rhs) return std::nullopt;
    return pair_text(mono[ia], mono[ib]) + ": X(a*b) = " + to_string(lhs) + ", X(a)*b + a*X(b) = " + to_string(rhs);
  });
  if (rep.certificate.holds != rep.conditions_hold())
    throw InternalError("derivation certificate disagrees with the conditions Lie_X I = 0, Lie_X K = 0");
  return rep;
}

bool AutomorphismReport::conditions_hold() const {
  return std::all_of(pullback_preserves_k.begin(), pullback_preserves_k.end(), [](bool b) { return b; });
}

AutomorphismReport check_automorphism(const Chart& c, const ChartMap& phi, int order) {
  require_valid(c);
  require_dimension(c, phi.dimension(), "chart map");
  AutomorphismReport rep;
  const Series<Form> k = karabegov_form(c.with_order(order));
  for (int s = 0; s <= order; ++s) {
    rep.pullback_preserves_k.push_back(phi.pullback(k[s]) == k[s]);
    if (!rep.pullback_preserves_k.back() && !rep.first_bad_order) rep.first_bad_order = s;
  }

  const StarProduct sp(c, order + 1);
  const auto exps = monomial_exponents(c.dimension(), order + 1);
  const std::size_t m = exps.size();
  std::vector<RationalFunction> mono(m), pulled(m);
  std::vector<OperatorSeries> ops(m), pops(m);
  first_failure(m, [&](std::size_t i) {
    mono[i] = monomial(exps[i]);
    pulled[i] = phi.pullback(mono[i]);
    ops[i] = sp.left_mult_operator(mono[i]);
    pops[i] = sp.left_mult_operator(pulled[i]);
    return true;
  });
  rep.certificate = run_sweep("automorphism", m * m, [&](std::size_t p) -> std::optional<std::string> {
    const std::size_t ia = p / m, ib = p % m;
    FormalFunction lhs = sp.apply(ops[ia], sp.lift(mono[ib]));
    for (int s = 0; s <= lhs.order(); ++s) lhs[s] = phi.pullback(lhs[s]);
    const FormalFunction rhs = sp.apply(pops[ia], sp.lift(pulled[ib]));
    if (lhs == rhs) return std::nullopt;
    return pair_text(mono[ia], mono[ib]) + ": phi*(a*b) = " + to_string(lhs) + ", phi*a * phi*b = " + to_string(rhs);
  });
  if (rep.certificate.holds != rep.conditions_hold())
    throw InternalError("automorphism certificate disagrees with the pull-back condition on K");
  return rep;
}

std::optional<RationalFunction> find_primitive(const Form& f, int dimension, const PrimitiveAnsatz& ansatz) {
  if (!f.is_degree(1)) throw InputError("find_primitive: input is not a 1-form");
  if (!exterior_d(f).is_zero()) throw InputError("find_primitive: form is not closed");
  if (ansatz.denominator_power < 0) throw InputError("find_primitive: negative denominator power");
  const auto slots = chart_slots(dimension);
  for (const auto& [mask, c] : f.terms()) {
    const int s = std::countr_zero(static_cast<unsigned>(mask));
    if (std::find(slots.begin(), slots.end(), s) == slots.end())
      throw InputError("find_primitive: form uses d" + slot_name(s) + " beyond the dimension");
    (void)c;
  }
  if (f.is_zero()) return RationalFunction();

  Polynomial lcm(1);
  for (const auto& [mask, c] : f.terms()) lcm = *(lcm * c.den()).divide_exact(gcd(lcm, c.den()));
  const Polynomial den = lcm.pow(static_cast<unsigned>(ansatz.denominator_power));
  const Polynomial den2 = den * den;

  std::vector<Polynomial> target;
  int top = 0;
  for (int s : slots) {
    const RationalFunction t = f.component(s) * RationalFunction(den2);
    if (!t.is_polynomial()) return std::nullopt;  // denominator power too small
    target.push_back(t.num());
    top = std::max(top, t.num().total_degree());
  }
  const int degree = ansatz.degree.value_or(std::max(0, top - den.total_degree() + 2));
  const auto unknowns = monomials_by_degree(dimension, degree);

  // Columns: d_s(m/den) * den^2 = d_s m * den - m * d_s den, per slot.
  std::vector<std::vector<Polynomial>> columns(unknowns.size());
  std::map<std::pair<int, Exponent>, std::size_t> rows;
  auto row_of = [&](int a, const Exponent& e) {
    auto [it, fresh] = rows.emplace(std::make_pair(a, e), rows.size());
    return it->second;
  };
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    const Polynomial m = Polynomial::monomial(unknowns[j]);
    for (std::size_t a = 0; a < slots.size(); ++a) {
      Polynomial col = m.derivative(slots[a]) * den - m * den.derivative(slots[a]);
      for (const auto& t : col.terms()) row_of(static_cast<int>(a), t.exp);
      columns[j].push_back(std::move(col));
    }
  }
  for (std::size_t a = 0; a < slots.size(); ++a)
    for (const auto& t : target[a].terms()) row_of(static_cast<int>(a), t.exp);

  Matrix<Scalar> mat(rows.size(), std::vector<Scalar>(unknowns.size()));
  std::vector<Scalar> rhs(rows.size());
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    for (std::size_t a = 0; a < slots.size(); ++a)
      for (const auto& t : columns[j][a].terms()) mat[rows.at({static_cast<int>(a), t.exp})][j] = t.coef;
  for (std::size_t a = 0; a < slots.size(); ++a)
    for (const auto& t : target[a].terms()) rhs[rows.at({static_cast<int>(a), t.exp})] = t.coef;

  const auto sol = solve_linear(std::move(mat), std::move(rhs));
  if (!sol) return std::nullopt;
  std::vector<Term> terms;
  for (std::size_t j = 0; j < unknowns.size(); ++j)
    if (!(*sol)[j].is_zero()) terms.push_back(Term{unknowns[j], (*sol)[j]});
  RationalFunction a(Polynomial::from_terms(std::move(terms)), den);
  if (!(exterior_d(Form::function(a)) == f)) throw InternalError("find_primitive: solution does not differentiate back");
  return a;
}

VectorField hamiltonian_vector_field(const Chart& c, const RationalFunction& a0) {
  const int n = c.dimension();
  const Metric m = metric(c);
  std::vector<RationalFunction> hol(n), anti(n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      hol[k - 1] += a0.derivative(w_slot(l)) * m.ginv[l - 1][k - 1];
      anti[l - 1] -= m.ginv[l - 1][k - 1] * a0.derivative(z_slot(k));
    }
  return VectorField(std::move(hol), std::move(anti));
}

QuasiInnerReport check_quasi_inner(const Chart& c, const VectorField& x, const FormalFunction& a, int order) {
  require_valid(c);
  require_dimension(c, x.dimension(), "vector field");
  const Series<Form> k = karabegov_form(c.with_order(order));
  if (!check_holomorphy(x)) throw InputError("quasi-inner: X does not preserve the complex structure");
  for (int s = 0; s <= order; ++s)
    if (!lie_derivative(x, k[s]).is_zero())
      throw InputError("quasi-inner: X does not preserve K at order " + std::to_string(s));

  QuasiInnerReport rep;
  const FormalFunction ap = padded(a, order + 1);
  for (int s = 0; s <= order; ++s) {
    if (exterior_d(Form::function(ap[s])) == interior_product(x, k[s])) continue;
    rep.primitive_failure = s;
    break;
  }
  rep.hamiltonian_matches = hamiltonian_vector_field(c, ap[0]) == x;

  const StarProduct sp(c, order + 1);
  const auto exps = monomial_exponents(c.dimension(), order + 1);
  const OperatorSeries la = sp.left_mult_operator(ap);
  rep.certificate = run_sweep("quasi-inner", exps.size(), [&](std::size_t i) -> std::optional<std::string> {
    const RationalFunction b = monomial(exps[i]);
    const FormalFunction fb = sp.lift(b);
    const FormalFunction ad = sp.apply(la, fb) - sp.star(fb, ap);
    const FormalFunction rhs = -ad.divided_by_nu();
    const FormalFunction lhs = FormalFunction(order, x.apply(b));
    if (lhs == rhs) return std::nullopt;
    return "b = " + b.to_string() + ": X(b) = " + to_string(lhs) + ", -(1/v) ad(a)(b) = " + to_string(rhs);
  });
  return rep;
}

}  // namespace wick
