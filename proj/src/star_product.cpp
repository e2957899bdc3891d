#include "wick/star_product.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "wick/error.hpp"
#include "wick/expression.hpp"

namespace wick {

namespace {

// All w multi-indices (as full exponents) over n variables with |B| = m.
std::vector<Exponent> w_indices(int n, int m) {
  std::vector<Exponent> out;
  Exponent e{};
  std::function<void(int, int)> rec = [&](int l, int left) {
    if (l == n - 1) {
      e[w_slot(l + 1)] = static_cast<std::uint16_t>(left);
      out.push_back(e);
      return;
    }
    for (int x = left; x >= 0; --x) {
      e[w_slot(l + 1)] = static_cast<std::uint16_t>(x);
      rec(l + 1, left - x);
    }
  };
  rec(0, m);
  return out;
}

// Nonzero sub-indices C <= B.
std::vector<Exponent> nonzero_subindices(const Exponent& b) {
  std::vector<Exponent> out{Exponent{}};
  for (int s = 0; s < kSlots; ++s) {
    if (b[s] == 0) continue;
    std::vector<Exponent> next;
    for (const auto& c : out)
      for (int x = 0; x <= b[s]; ++x) {
        Exponent d = c;
        d[s] = static_cast<std::uint16_t>(x);
        next.push_back(d);
      }
    out = std::move(next);
  }
  out.erase(out.begin());  // the zero index comes first
  return out;
}

bool dominates(const Exponent& big, const Exponent& small) {
  for (int s = 0; s < kSlots; ++s)
    if (big[s] < small[s]) return false;
  return true;
}

Exponent minus(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int s = 0; s < kSlots; ++s) r[s] = static_cast<std::uint16_t>(a[s] - b[s]);
  return r;
}

int w_weight(const Exponent& e) {
  int k = 0;
  for (int s = kMaxDim; s < kSlots; ++s) k += e[s];
  return k;
}

unsigned thread_count(std::size_t work) {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("WICK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work, 1)));
}

const RationalFunction& zero_rf() {
  static const RationalFunction z;
  return z;
}

}  // namespace

StarProduct::StarProduct(const Chart& chart, int order) : chart_(chart), order_(order) {
  if (order < 0) throw InputError("star product: order must be non-negative");
  require_valid(chart_);
  metric_ = wick::metric(chart_);
  const int n = chart_.dimension();
  const int top = std::min(order_, chart_.order());
  for (int s = 0; s <= top; ++s) {
    const Tuple u = chart_.u(s);
    for (int k = 1; k <= n; ++k) {
      if (u[k - 1].is_zero()) continue;
      for (int m = 1; m <= order_ + 1; ++m)
        for (const auto& c : w_indices(n, m)) {
          RationalFunction d = u[k - 1].derivative(c);
          if (!d.is_zero()) u_cache_.emplace(std::make_tuple(s, k, c), std::move(d));
        }
    }
  }
}

const RationalFunction& StarProduct::u_derivative(int s, int k, const Exponent& c) const {
  auto it = u_cache_.find(std::make_tuple(s, k, c));
  return it == u_cache_.end() ? zero_rf() : it->second;
}

DiffOperator StarProduct::solve_order(const std::vector<DiffOperator>& q, int t) const {
  const int n = dimension();
  const auto fail = [t] { return InternalError("recursion singular at order " + std::to_string(t)); };
  for (const auto& qk : q)
    if (qk.z_order() > 0 || qk.w_order() >= t) throw fail();

  DiffOperator a;
  for (int m = t; m >= 1; --m) {
    std::map<Exponent, RationalFunction> level;
    for (const auto& d : w_indices(n, m - 1)) {
      std::vector<RationalFunction> rhs(n);
      for (int k = 1; k <= n; ++k) {
        RationalFunction r = q[k - 1].coefficient(d);
        for (const auto& [b, cb] : a.terms()) {
          if (w_weight(b) < m + 1 || !dominates(b, d)) continue;
          const Exponent c = minus(b, d);
          const RationalFunction& du = u_derivative(0, k, c);
          if (du.is_zero()) continue;
          r -= cb * du * Scalar(multi_binomial(b, c));
        }
        rhs[k - 1] = std::move(r);
      }
      for (int l = 1; l <= n; ++l) {
        RationalFunction y;
        for (int k = 1; k <= n; ++k)
          if (!rhs[k - 1].is_zero()) y += metric_.ginv[l - 1][k - 1] * rhs[k - 1];
        Exponent b = d;
        b[w_slot(l)] += 1;
        y *= Scalar(mpq_class(1, b[w_slot(l)]));
        auto [it, fresh] = level.emplace(b, y);
        if (!fresh && !(it->second == y)) throw fail();
      }
    }
    for (auto& [b, c] : level) a.set(b, std::move(c));
  }
  return a;
}

OperatorSeries StarProduct::left_mult_operator(const RationalFunction& a) const {
  const int n = dimension();
  OperatorSeries out(order_);
  out[0] = DiffOperator::multiplication(a);
  for (int t = 1; t <= order_; ++t) {
    std::vector<DiffOperator> q(n);
    for (int k = 1; k <= n; ++k) {
      DiffOperator qk;
      for (const auto& [e, c] : out[t - 1].terms()) qk.add(e, c.derivative(z_slot(k)));
      for (int s = 1; s <= t - 1; ++s) {
        for (const auto& [b, cb] : out[t - s].terms()) {
          if (w_weight(b) == 0) continue;
          for (const auto& c : nonzero_subindices(b)) {
            const RationalFunction& du = u_derivative(s, k, c);
            if (du.is_zero()) continue;
            qk.add(minus(b, c), -(cb * du * Scalar(multi_binomial(b, c))));
          }
        }
      }
      q[k - 1] = std::move(qk);
    }
    out[t] = solve_order(q, t);
  }
  if (corruption_ && corruption_->order <= order_) {
    auto& op = out[corruption_->order];
    if (!op.coefficient(corruption_->exp).is_zero()) op.add(corruption_->exp, RationalFunction(corruption_->delta));
  }
  return out;
}

OperatorSeries StarProduct::left_mult_operator(const FormalFunction& a) const {
  OperatorSeries out(order_);
  for (int s = 0; s <= std::min(order_, a.order()); ++s) {
    if (a[s].is_zero()) continue;
    const OperatorSeries part = left_mult_operator(a[s]);
    for (int t = 0; s + t <= order_; ++t) out[s + t] += part[t];
  }
  return out;
}

FormalFunction StarProduct::apply(const OperatorSeries& op, const FormalFunction& b) const {
  const int top = std::min({order_, op.order(), b.order()});
  FormalFunction out(top);
  for (int i = 0; i <= top; ++i) {
    if (op[i].is_zero()) continue;
    for (int j = 0; i + j <= top; ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] += op[i].apply(b[j]);
    }
  }
  return out;
}

FormalFunction StarProduct::star(const FormalFunction& a, const FormalFunction& b) const {
  return apply(left_mult_operator(a), b);
}

FormalFunction StarProduct::star(const RationalFunction& a, const RationalFunction& b) const {
  return apply(left_mult_operator(a), lift(b));
}

FormalFunction StarProduct::ad(const FormalFunction& a, const FormalFunction& b) const {
  return star(a, b) - star(b, a);
}

StarProduct StarProduct::corrupted(int order, const Exponent& e, const Scalar& delta) const {
  StarProduct s = *this;
  s.corruption_ = Corruption{order, e, delta};
  return s;
}

// ---------------------------------------------------------------------------

std::vector<Exponent> monomial_exponents(int dimension, int dmax) {
  std::vector<int> slots;
  for (int k = 1; k <= dimension; ++k) slots.push_back(z_slot(k));
  for (int l = 1; l <= dimension; ++l) slots.push_back(w_slot(l));
  std::vector<Exponent> out{Exponent{}};
  for (int s : slots) {
    std::vector<Exponent> next;
    for (const auto& e : out)
      for (int x = 0; x <= dmax; ++x) {
        Exponent f = e;
        f[s] = static_cast<std::uint16_t>(x);
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

RationalFunction monomial(const Exponent& e) { return Polynomial::monomial(e); }

std::size_t first_failure(std::size_t count, const std::function<bool(std::size_t)>& passes) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  std::mutex mu;
  std::map<std::size_t, std::exception_ptr> errors;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > best.load()) return;
      bool ok = false;
      try {
        ok = passes(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        errors.emplace(i, std::current_exception());
      }
      if (ok) continue;
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  };
  const unsigned threads = thread_count(count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  const std::size_t idx = best.load();
  if (auto it = errors.find(idx); it != errors.end()) std::rethrow_exception(it->second);
  return idx;
}

CheckReport run_sweep(const std::string& name, std::size_t count,
                      const std::function<std::optional<std::string>(std::size_t)>& check) {
  CheckReport rep;
  rep.name = name;
  rep.cases = count;
  const std::size_t idx = first_failure(count, [&](std::size_t i) { return !check(i).has_value(); });
  if (idx < count) {
    rep.holds = false;
    rep.witness = check(idx);
  }
  return rep;
}

CheckReport verify_associativity(const StarProduct& sp, int dmax) {
  const auto exps = monomial_exponents(sp.dimension(), dmax);
  const std::size_t m = exps.size();
  std::vector<RationalFunction> mono(m);
  for (std::size_t i = 0; i < m; ++i) mono[i] = monomial(exps[i]);

  std::vector<OperatorSeries> ops(m);
  first_failure(m, [&](std::size_t i) {
    ops[i] = sp.left_mult_operator(mono[i]);
    return true;
  });
  std::vector<FormalFunction> prod(m * m);
  first_failure(m * m, [&](std::size_t i) {
    prod[i] = sp.apply(ops[i / m], sp.lift(mono[i % m]));
    return true;
  });

  // Pair (a, b) fails if some c breaks (a*b)*c = a*(b*c); the witness names the first such c.
  auto first_bad_c = [&](std::size_t pair) -> std::optional<std::string> {
    const std::size_t ia = pair / m, ib = pair % m;
    const OperatorSeries lab = sp.left_mult_operator(prod[pair]);
    for (std::size_t ic = 0; ic < m; ++ic) {
      const FormalFunction lhs = sp.apply(lab, sp.lift(mono[ic]));
      const FormalFunction rhs = sp.apply(ops[ia], prod[ib * m + ic]);
      if (!(lhs == rhs))
        return "a = " + mono[ia].to_string() + ", b = " + mono[ib].to_string() + ", c = " + mono[ic].to_string() +
               ": (a*b)*c = " + to_string(lhs) + ", a*(b*c) = " + to_string(rhs);
    }
    return std::nullopt;
  };
  CheckReport rep = run_sweep("associativity", m * m, first_bad_c);
  rep.cases = m * m * m;
  return rep;
}

CheckReport verify_wick_type(const StarProduct& sp, int dmax) {
  const int n = sp.dimension();
  const auto exps = monomial_exponents(n, dmax);
  auto only = [n](const Exponent& e, bool z) {
    for (int k = 1; k <= n; ++k)
      if (e[z ? w_slot(k) : z_slot(k)] != 0) return false;
    return true;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < exps.size(); ++i)
    for (std::size_t j = 0; j < exps.size(); ++j)
      if (only(exps[i], false) || only(exps[j], true)) pairs.emplace_back(i, j);
  return run_sweep("wick type", pairs.size(), [&](std::size_t p) -> std::optional<std::string> {
    const auto a = monomial(exps[pairs[p].first]), b = monomial(exps[pairs[p].second]);
    const FormalFunction got = sp.star(a, b);
    if (got == sp.lift(a * b)) return std::nullopt;
    return "a = " + a.to_string() + ", b = " + b.to_string() + ": a*b = " + to_string(got);
  });
}

CheckReport verify_defining_relation(const StarProduct& sp, int dmax) {
  const int n = sp.dimension();
  const int order = sp.order();
  const auto exps = monomial_exponents(n, dmax);
  const bool with_v = sp.chart().has_v();
  const std::size_t per = static_cast<std::size_t>(with_v ? 2 * n : n);
  return run_sweep("defining relation", exps.size() * per, [&](std::size_t idx) -> std::optional<std::string> {
    const auto a = monomial(exps[idx / per]);
    const int j = static_cast<int>(idx % per);
    const FormalFunction fa = sp.lift(a);
    if (j < n) {
      const int k = j + 1;
      const FormalFunction u = sp.chart().u_series(k, order);
      const FormalFunction got = sp.star(fa, u);
      FormalFunction want = fa * u;
      want += sp.lift(a.derivative(z_slot(k))).shifted(1);
      if (got == want) return std::nullopt;
      return "a = " + a.to_string() + ", k = " + std::to_string(k) + ": a*u_k = " + to_string(got) +
             ", expected " + to_string(want);
    }
    const int l = j - n + 1;
    const FormalFunction v = sp.chart().v_series(l, order);
    const FormalFunction got = sp.star(v, fa);
    FormalFunction want = v * fa;
    want += sp.lift(a.derivative(w_slot(l))).shifted(1);
    if (got == want) return std::nullopt;
    return "a = " + a.to_string() + ", l = " + std::to_string(l) + ": vbar_l*a = " + to_string(got) + ", expected " +
           to_string(want);
  });
}

CheckReport verify_order_bound(const StarProduct& sp, int dmax) {
  const auto exps = monomial_exponents(sp.dimension(), dmax);
  return run_sweep("order bound", exps.size(), [&](std::size_t i) -> std::optional<std::string> {
    const auto a = monomial(exps[i]);
    const OperatorSeries l = sp.left_mult_operator(a);
    if (!(l[0] == DiffOperator::multiplication(a))) return "a = " + a.to_string() + ": A_0 is not multiplication";
    for (int t = 1; t <= l.order(); ++t) {
      if (l[t].z_order() > 0 || l[t].w_order() > t || !l[t].coefficient(Exponent{}).is_zero())
        return "a = " + a.to_string() + ": A_" + std::to_string(t) + " = " + l[t].to_string();
    }
    return std::nullopt;
  });
}

Series<Form> extract_karabegov(const StarProduct& sp) {
  const int n = sp.dimension();
  const int order = sp.order();
  // The u_k are located by the defining relation; a product that does not
  // satisfy it for the chart data is inconsistent.
  const CheckReport rel = verify_defining_relation(sp, std::max(order, 1));
  if (!rel.holds) throw InternalError("extract_karabegov: defining relation fails: " + *rel.witness);

  // Order 0 independently from the product: (z_j * w_l)_1 is the (l, j) entry of g^{-1}.
  if (order >= 1) {
    Matrix<RationalFunction> h(n, std::vector<RationalFunction>(n));
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l <= n; ++l)
        h[l - 1][j - 1] = sp.star(RationalFunction::variable(z_slot(j)), RationalFunction::variable(w_slot(l)))[1];
    const Matrix<RationalFunction> g = invert(h).inverse;
    if (!(g == sp.metric().g)) throw InternalError("extract_karabegov: metric read from the product differs");
  }

  Series<Form> out(order);
  for (int s = 0; s <= order; ++s) {
    Form alpha;
    const Tuple u = sp.chart().u(s);
    for (int k = 1; k <= n; ++k) alpha += (-u[k - 1]) * Form::differential(z_slot(k));
    out[s] = dolbeault_delbar(alpha);
  }
  return out;
}

CheckReport verify_roundtrip(const StarProduct& sp) {
  CheckReport rep;
  rep.name = "round trip";
  const Series<Form> got = extract_karabegov(sp);
  const Series<Form> want = karabegov_form(sp.chart().with_order(sp.order()));
  rep.cases = static_cast<std::size_t>(sp.order()) + 1;
  for (int s = 0; s <= sp.order(); ++s) {
    if (got[s] == want[s]) continue;
    rep.holds = false;
    rep.witness = "order " + std::to_string(s) + ": extracted " + got[s].to_string() + ", chart " + want[s].to_string();
    break;
  }
  return rep;
}

}  // namespace wick
