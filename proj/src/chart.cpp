#include "wick/chart.hpp"

#include "wick/error.hpp"

namespace wick {

namespace {

Tuple zeros(int n) { return Tuple(static_cast<std::size_t>(n)); }

std::string pair_name(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Matrix<RationalFunction> square(int n) {
  return Matrix<RationalFunction>(static_cast<std::size_t>(n), std::vector<RationalFunction>(static_cast<std::size_t>(n)));
}

}  // namespace

Chart::Chart(int dimension, int order, std::vector<Tuple> u, std::optional<std::vector<Tuple>> v)
    : n_(dimension), order_(order), u_(std::move(u)), v_(std::move(v)) {
  if (n_ < 1 || n_ > kMaxDim) throw InputError("chart: dimension must be between 1 and 4");
  if (order_ < 0) throw InputError("chart: order must be non-negative");
  if (u_.empty()) throw InputError("chart: missing order-0 data u");
  auto check = [&](const std::vector<Tuple>& data, const char* name) {
    for (std::size_t s = 0; s < data.size(); ++s) {
      if (data[s].size() != static_cast<std::size_t>(n_))
        throw InputError(std::string("chart: ") + name + " at order " + std::to_string(s) + " has " +
                         std::to_string(data[s].size()) + " entries, expected " + std::to_string(n_));
    }
  };
  check(u_, "u");
  if (v_) {
    if (v_->empty()) throw InputError("chart: v has no order-0 data");
    check(*v_, "v");
  }
}

Tuple Chart::u(int s) const {
  if (s < 0 || s >= static_cast<int>(u_.size())) return zeros(n_);
  return u_[static_cast<std::size_t>(s)];
}

Tuple Chart::v(int s) const {
  if (!v_ || s < 0 || s >= static_cast<int>(v_->size())) return zeros(n_);
  return (*v_)[static_cast<std::size_t>(s)];
}

Series<RationalFunction> Chart::u_series(int k, int order) const {
  Series<RationalFunction> r(order);
  for (int s = 0; s <= order && s < static_cast<int>(u_.size()); ++s) r[s] = u_[s][k - 1];
  return r;
}

Series<RationalFunction> Chart::v_series(int l, int order) const {
  Series<RationalFunction> r(order);
  if (!v_) return r;
  for (int s = 0; s <= order && s < static_cast<int>(v_->size()); ++s) r[s] = (*v_)[s][l - 1];
  return r;
}

Chart Chart::with_order(int order) const {
  Chart c = *this;
  c.order_ = order;
  return c;
}

std::vector<int> Chart::frame_slots() const {
  std::vector<int> out;
  for (int k = 1; k <= n_; ++k) out.push_back(z_slot(k));
  for (int l = 1; l <= n_; ++l) out.push_back(w_slot(l));
  return out;
}

bool ValidationReport::ok() const {
  for (const auto& i : items)
    if (!i.ok) return false;
  return true;
}

std::string ValidationReport::first_failure() const {
  for (const auto& i : items)
    if (!i.ok) return i.name + ": " + i.detail;
  return {};
}

ValidationReport validate_chart(const Chart& c) {
  ValidationReport rep;
  const int n = c.dimension();
  const unsigned allowed = [&] {
    unsigned m = 0;
    for (int s : c.frame_slots()) m |= 1u << s;
    return m;
  }();

  ValidationItem vars{"variables", true, ""};
  for (int s = 0; s <= c.order() && vars.ok; ++s) {
    for (int k = 1; k <= n; ++k) {
      if ((c.u(s)[k - 1].used_slots() & ~allowed) || (c.v(s)[k - 1].used_slots() & ~allowed)) {
        vars.ok = false;
        vars.detail = "order " + std::to_string(s) + " entry " + std::to_string(k) + " uses a variable beyond dimension";
        break;
      }
    }
  }
  rep.items.push_back(vars);

  ValidationItem sym{"u symmetry", true, ""};
  for (int s = 0; s <= c.order() && sym.ok; ++s) {
    const Tuple u = c.u(s);
    for (int j = 1; j <= n && sym.ok; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (!(u[k - 1].derivative(z_slot(j)) == u[j - 1].derivative(z_slot(k)))) {
          sym.ok = false;
          sym.detail = "d_z" + std::to_string(j) + " u_" + std::to_string(k) + " != d_z" + std::to_string(k) +
                       " u_" + std::to_string(j) + " at order " + std::to_string(s) + " for pair " + pair_name(j, k);
          break;
        }
  }
  rep.items.push_back(sym);

  ValidationItem nondeg{"nondegeneracy", true, ""};
  {
    auto g = square(n);
    const Tuple u0 = c.u(0);
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) g[k - 1][l - 1] = u0[k - 1].derivative(w_slot(l));
    if (determinant(g).is_zero()) {
      nondeg.ok = false;
      nondeg.detail = "det(d_w u^(0)) vanishes identically";
    }
  }
  rep.items.push_back(nondeg);

  if (c.has_v()) {
    ValidationItem vsym{"v symmetry", true, ""};
    ValidationItem compat{"u/v compatibility", true, ""};
    for (int s = 0; s <= c.order(); ++s) {
      const Tuple u = c.u(s);
      const Tuple v = c.v(s);
      for (int l = 1; l <= n && vsym.ok; ++l)
        for (int m = l + 1; m <= n; ++m)
          if (!(v[m - 1].derivative(w_slot(l)) == v[l - 1].derivative(w_slot(m)))) {
            vsym.ok = false;
            vsym.detail = "d_w" + std::to_string(l) + " v_" + std::to_string(m) + " != d_w" + std::to_string(m) +
                          " v_" + std::to_string(l) + " at order " + std::to_string(s) + " for pair " +
                          pair_name(l, m);
            break;
          }
      for (int k = 1; k <= n && compat.ok; ++k)
        for (int l = 1; l <= n; ++l)
          if (!(v[l - 1].derivative(z_slot(k)) == u[k - 1].derivative(w_slot(l)))) {
            compat.ok = false;
            compat.detail = "d_z" + std::to_string(k) + " v_" + std::to_string(l) + " != d_w" + std::to_string(l) +
                            " u_" + std::to_string(k) + " at order " + std::to_string(s) + " for pair " +
                            pair_name(k, l);
            break;
          }
    }
    rep.items.push_back(vsym);
    rep.items.push_back(compat);
  }
  return rep;
}

void require_valid(const Chart& c) {
  const auto rep = validate_chart(c);
  if (!rep.ok()) throw InputError("invalid chart: " + rep.first_failure());
}

Metric metric(const Chart& c) {
  const int n = c.dimension();
  Metric m;
  m.g = square(n);
  const Tuple u0 = c.u(0);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) m.g[k - 1][l - 1] = u0[k - 1].derivative(w_slot(l));
  try {
    auto inv = invert(m.g);
    m.ginv = std::move(inv.inverse);
    m.det = std::move(inv.determinant);
  } catch (const MathError&) {
    throw InputError("invalid chart: metric is degenerate");
  }
  return m;
}

Series<Form> karabegov_form(const Chart& c) {
  const int n = c.dimension();
  Series<Form> k(c.order());
  for (int s = 0; s <= c.order(); ++s) {
    auto f = square(n);
    const Tuple u = c.u(s);
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) f[a - 1][b - 1] = u[a - 1].derivative(w_slot(b));
    k[s] = Form::type11(f);
  }
  return k;
}

Form kahler_form(const Chart& c) { return karabegov_form(c.with_order(0))[0]; }

Christoffels christoffels(const Chart& c) {
  const int n = c.dimension();
  const Metric m = metric(c);
  Christoffels gam;
  gam.frame_size = 2 * n;
  gam.gamma.assign(2 * n, square(2 * n));
  // Only the pure blocks survive for a Kähler metric.
  for (int mm = 0; mm < n; ++mm)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        RationalFunction hol, anti;
        for (int q = 0; q < n; ++q) {
          hol += m.ginv[q][mm] * m.g[l][q].derivative(z_slot(k + 1));
          anti += m.ginv[mm][q] * m.g[q][l].derivative(w_slot(k + 1));
        }
        gam.gamma[mm][k][l] = hol;
        gam.gamma[n + mm][n + k][n + l] = anti;
      }
  return gam;
}

Curvature curvature(const Christoffels& gam, const std::vector<int>& slots) {
  const int f = gam.frame_size;
  Curvature cur;
  cur.frame_size = f;
  cur.r.assign(f, std::vector<Matrix<RationalFunction>>(f, square(f)));
  for (int d = 0; d < f; ++d)
    for (int c = 0; c < f; ++c)
      for (int a = 0; a < f; ++a)
        for (int b = a + 1; b < f; ++b) {
          RationalFunction v = gam(d, b, c).derivative(slots[a]) - gam(d, a, c).derivative(slots[b]);
          for (int e = 0; e < f; ++e) {
            if (!gam(e, b, c).is_zero() && !gam(d, a, e).is_zero()) v += gam(d, a, e) * gam(e, b, c);
            if (!gam(e, a, c).is_zero() && !gam(d, b, e).is_zero()) v -= gam(d, b, e) * gam(e, a, c);
          }
          cur.r[d][c][b][a] = -v;
          cur.r[d][c][a][b] = std::move(v);
        }
  return cur;
}

Curvature curvature(const Chart& c) { return curvature(christoffels(c), c.frame_slots()); }

RationalFunction covariant_divergence(const Christoffels& gam, const std::vector<int>& slots, const VectorField& y) {
  const int f = gam.frame_size;
  RationalFunction out;
  for (int a = 0; a < f; ++a) {
    const RationalFunction& ya = y.component(slots[a]);
    out += ya.derivative(slots[a]);
    for (int b = 0; b < f; ++b) {
      const RationalFunction& yb = y.component(slots[b]);
      if (yb.is_zero() || gam(a, a, b).is_zero()) continue;
      out += gam(a, a, b) * yb;
    }
  }
  return out;
}

RationalFunction covariant_divergence(const Chart& c, const VectorField& y) {
  if (y.dimension() != c.dimension()) throw InputError("vector field dimension does not match the chart");
  return covariant_divergence(christoffels(c), c.frame_slots(), y);
}

Form ricci_form(const Chart& c) {
  const int n = c.dimension();
  const auto slots = c.frame_slots();
  const Curvature r = curvature(c);
  const Scalar i = Scalar::imaginary_unit();
  Form rho;
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) {
      // I e_c = i e_c on z slots and -i e_c on w slots.
      RationalFunction tr;
      for (int cc = 0; cc < 2 * n; ++cc) {
        const Scalar eps = cc < n ? i : -i;
        tr += eps * r(cc, cc, a, b);
      }
      rho.add(static_cast<Form::Mask>((1u << slots[a]) | (1u << slots[b])), Scalar(mpq_class(-1, 4), 0) * tr);
    }
  if (!rho.is_type(1, 1)) throw InternalError("ricci form has components outside type (1,1)");
  return rho;
}

Form log_determinant_form(const Chart& c) {
  const int n = c.dimension();
  const Metric m = metric(c);
  auto f = square(n);
  for (int k = 1; k <= n; ++k) {
    const RationalFunction logd = m.det.derivative(z_slot(k)) / m.det;
    for (int l = 1; l <= n; ++l) f[k - 1][l - 1] = logd.derivative(w_slot(l));
  }
  return Form::type11(f);
}

Scalar ricci_log_determinant_factor() { return Scalar(0, mpq_class(1, 2)); }

}  // namespace wick
