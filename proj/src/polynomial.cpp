#include "wick/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "wick/error.hpp"

namespace wick {

std::string slot_name(int slot) {
  return is_z_slot(slot) ? "z" + std::to_string(slot + 1)
                         : "w" + std::to_string(slot - kMaxDim + 1);
}

int total_degree(const Exponent& e) {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

namespace {

bool divides(const Exponent& small, const Exponent& big) {
  for (int s = 0; s < kSlots; ++s)
    if (small[s] > big[s]) return false;
  return true;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int s = 0; s < kSlots; ++s) r[s] = static_cast<std::uint16_t>(a[s] + b[s]);
  return r;
}

Exponent operator-(const Exponent& a, const Exponent& b) {
  Exponent r{};
  for (int s = 0; s < kSlots; ++s) r[s] = static_cast<std::uint16_t>(a[s] - b[s]);
  return r;
}

// Sorts descending and merges equal exponents, dropping zeros.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exp > b.exp; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Scalar c = std::move(terms[i].coef);
    while (j < terms.size() && terms[j].exp == terms[i].exp) {
      c += terms[j].coef;
      ++j;
    }
    if (!c.is_zero()) {
      terms[out].exp = terms[i].exp;
      terms[out].coef = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

// Merge of two canonical term lists; sign = +1 or -1 for b.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp > b[j].exp)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp > a[i].exp) {
      r.push_back(negate_b ? Term{b[j].exp, -b[j].coef} : b[j]);
      ++j;
    } else {
      Scalar c = negate_b ? a[i].coef - b[j].coef : a[i].coef + b[j].coef;
      if (!c.is_zero()) r.push_back(Term{a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

bool is_negative(const Scalar& c) {
  if (c.is_real()) return sgn(c.re()) < 0;
  if (sgn(c.re()) == 0) return sgn(c.im()) < 0;
  return false;
}

std::string monomial_string(const Exponent& e) {
  std::string out;
  for (int s = 0; s < kSlots; ++s) {
    if (e[s] == 0) continue;
    if (!out.empty()) out += "*";
    out += slot_name(s);
    if (e[s] > 1) out += "^" + std::to_string(e[s]);
  }
  return out;
}

// Rendering of a term whose coefficient is known to be "positive".
std::string term_string(const Exponent& e, const Scalar& c) {
  std::string mono = monomial_string(e);
  if (mono.empty()) return c.to_string();
  if (c.is_one()) return mono;
  return c.to_string() + "*" + mono;
}

}  // namespace

Polynomial::Polynomial(const Scalar& c) {
  if (!c.is_zero()) terms_.push_back(Term{Exponent{}, c});
}

Polynomial Polynomial::monomial(const Exponent& e, Scalar c) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.push_back(Term{e, std::move(c)});
  return p;
}

Polynomial Polynomial::variable(int slot) {
  Exponent e{};
  e[slot] = 1;
  return monomial(e);
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponent{});
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Exponent{} && terms_[0].coef.is_one();
}

Scalar Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().exp == Exponent{}) return terms_.back().coef;
  return Scalar(0);
}

int Polynomial::degree_in(int slot) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exp[slot]);
  return d;
}

int Polynomial::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, wick::total_degree(t.exp));
  return d;
}

unsigned Polynomial::used_slots() const {
  unsigned mask = 0;
  for (const auto& t : terms_)
    for (int s = 0; s < kSlots; ++s)
      if (t.exp[s] != 0) mask |= 1u << s;
  return mask;
}

Polynomial Polynomial::derivative(int slot) const {
  Polynomial r;
  for (const auto& t : terms_) {
    if (t.exp[slot] == 0) continue;
    Term d{t.exp, t.coef * Scalar(static_cast<long>(t.exp[slot]))};
    --d.exp[slot];
    r.terms_.push_back(std::move(d));
  }
  // Lowering one slot by one keeps the relative lex order of surviving terms.
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coef.is_one()) return *this;
  Scalar inv = Scalar(1) / terms_.front().coef;
  Polynomial r = *this;
  r *= inv;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.push_back(Term{x.exp + y.exp, x.coef * y.coef});
  Polynomial r;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a monomial preserves order.
    r.terms_ = std::move(out);
  } else {
    canonicalize(out);
    r.terms_ = std::move(out);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp || !(a.terms_[i].coef == b.terms_[i].coef))
      return false;
  return true;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw MathError("zero divisor");
  if (is_zero()) return Polynomial();
  if (d.is_constant()) {
    Polynomial r = *this;
    r *= Scalar(1) / d.terms_[0].coef;
    return r;
  }
  const Term& ld = d.terms_.front();
  Polynomial rem = *this;
  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& lt = rem.terms_.front();
    if (!divides(ld.exp, lt.exp)) return std::nullopt;
    Term q{lt.exp - ld.exp, lt.coef / ld.coef};
    rem -= Polynomial::monomial(q.exp, q.coef) * d;
    quotient.push_back(std::move(q));
  }
  Polynomial r;
  r.terms_ = std::move(quotient);
  return r;
}

std::vector<Polynomial> Polynomial::coefficients_in(int slot) const {
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(std::max(degree_in(slot), 0)) + 1);
  for (const auto& t : terms_) {
    Term c = t;
    c.exp[slot] = 0;
    buckets[t.exp[slot]].push_back(std::move(c));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    Polynomial p;
    // Removing one slot's exponent keeps lex order within a bucket.
    p.terms_ = std::move(b);
    out.push_back(std::move(p));
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = is_negative(t.coef);
    Scalar mag = neg ? -t.coef : t.coef;
    std::string body = term_string(t.exp, mag);
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// gcd: degree bounds from univariate images, then a subresultant PRS in the
// variable with the smallest bound.

namespace {

using Univariate = std::vector<Scalar>;  // coefficient of v^d at index d

void trim(Univariate& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed).
Univariate univariate_rem(Univariate a, const Univariate& b) {
  trim(a);
  const Scalar inv = Scalar(1) / b.back();
  while (a.size() >= b.size()) {
    const Scalar q = a.back() * inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= q * b[k];
    a.pop_back();
    trim(a);
  }
  return a;
}

int univariate_gcd_degree(Univariate a, Univariate b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Univariate r = univariate_rem(a, b);
    a = std::move(b);
    b = std::move(r);
    // Keep coefficients small by making the divisor monic.
    if (!b.empty()) {
      const Scalar inv = Scalar(1) / b.back();
      for (auto& c : b) c *= inv;
    }
  }
  return static_cast<int>(a.size()) - 1;
}

// Image of p with every slot except v replaced by points[slot].
Univariate evaluate_except(const Polynomial& p, int v, const std::array<long, kSlots>& points) {
  Univariate out(static_cast<std::size_t>(std::max(p.degree_in(v), 0)) + 1);
  for (const auto& t : p.terms()) {
    mpq_class f = 1;
    for (int s = 0; s < kSlots; ++s) {
      if (s == v || t.exp[s] == 0) continue;
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(points[s]), t.exp[s]);
      f *= pw;
    }
    out[t.exp[v]] += t.coef * Scalar(f);
  }
  return out;
}

// Upper bound for deg_v gcd(a, b) from an evaluation keeping both degrees.
int gcd_degree_bound(const Polynomial& a, const Polynomial& b, int v) {
  static constexpr long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  const int da = a.degree_in(v), db = b.degree_in(v);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::array<long, kSlots> pts{};
    for (int s = 0; s < kSlots; ++s) pts[s] = kPrimes[(s + 3 * attempt) % 16] + 2 * attempt;
    Univariate ia = evaluate_except(a, v, pts), ib = evaluate_except(b, v, pts);
    trim(ia);
    trim(ib);
    if (static_cast<int>(ia.size()) - 1 != da || static_cast<int>(ib.size()) - 1 != db) continue;
    return univariate_gcd_degree(std::move(ia), std::move(ib));
  }
  return std::min(da, db);
}

Polynomial leading_coefficient_in(const Polynomial& p, int slot, int degree) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (t.exp[slot] != degree) continue;
    Term c = t;
    c.exp[slot] = 0;
    out.push_back(std::move(c));
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial content_in(const Polynomial& p, int slot) {
  auto coeffs = p.coefficients_in(slot);
  // Small coefficients first: the running gcd shrinks fastest that way.
  std::sort(coeffs.begin(), coeffs.end(), [](const Polynomial& x, const Polynomial& y) { return x.size() < y.size(); });
  Polynomial g;
  for (auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divide_exact(b);
  if (!q) throw InternalError("gcd: inexact division");
  return *std::move(q);
}

Polynomial primitive_part(const Polynomial& p, int slot) { return exact_quotient(p, content_in(p, slot)).monic(); }

// lc(b)^(deg a - deg b + 1) * a reduced modulo b in the variable `slot`.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int slot) {
  const int db = b.degree_in(slot);
  const Polynomial lcb = leading_coefficient_in(b, slot, db);
  Polynomial r = a;
  int e = a.degree_in(slot) - db + 1;
  int dr;
  while (!r.is_zero() && (dr = r.degree_in(slot)) >= db) {
    Polynomial lcr = leading_coefficient_in(r, slot, dr);
    Exponent shift{};
    shift[slot] = static_cast<std::uint16_t>(dr - db);
    r = lcb * r - lcr * Polynomial::monomial(shift) * b;
    --e;
  }
  if (e > 0 && !r.is_zero()) r *= lcb.pow(static_cast<unsigned>(e));
  return r;
}

// Subresultant PRS; a and b primitive in `slot` with deg a >= deg b >= 1.
Polynomial subresultant_gcd(Polynomial a, Polynomial b, int slot) {
  Polynomial g(1), h(1);
  while (true) {
    const int delta = a.degree_in(slot) - b.degree_in(slot);
    Polynomial r = pseudo_remainder(a, b, slot);
    if (r.is_zero()) return primitive_part(b, slot);
    if (r.degree_in(slot) == 0) return Polynomial(1);
    a = std::move(b);
    b = exact_quotient(r, g * h.pow(static_cast<unsigned>(delta)));
    g = leading_coefficient_in(a, slot, a.degree_in(slot));
    if (delta == 0) continue;
    h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
}

Polynomial monomial_gcd(const Polynomial& m, const Polynomial& p) {
  Exponent e = m.leading_term().exp;
  for (const auto& t : p.terms())
    for (int s = 0; s < kSlots; ++s) e[s] = std::min(e[s], t.exp[s]);
  return Polynomial::monomial(e);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.is_monomial()) return monomial_gcd(a, b);
  if (b.is_monomial()) return monomial_gcd(b, a);
  if (a.monic() == b.monic()) return a.monic();
  if (b.size() <= a.size()) {
    if (a.divide_exact(b)) return b.monic();
  } else if (b.divide_exact(a)) {
    return a.monic();
  }

  const unsigned ua = a.used_slots();
  const unsigned ub = b.used_slots();
  // A variable present in only one operand cannot occur in the gcd.
  for (int v = 0; v < kSlots; ++v) {
    if (((ua >> v) & 1u) && !((ub >> v) & 1u)) return gcd(content_in(a, v), b);
    if (((ub >> v) & 1u) && !((ua >> v) & 1u)) return gcd(a, content_in(b, v));
  }

  int best = -1, best_bound = 0;
  for (int v = 0; v < kSlots; ++v) {
    if (!((ua >> v) & 1u)) continue;
    const int bound = gcd_degree_bound(a, b, v);
    if (bound == 0) return gcd(content_in(a, v), content_in(b, v));
    if (best < 0 || bound < best_bound) {
      best = v;
      best_bound = bound;
    }
  }

  const int v = best;
  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial pa = exact_quotient(a, ca);
  Polynomial pb = exact_quotient(b, cb);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  return (c * subresultant_gcd(std::move(pa), std::move(pb), v)).monic();
}

}  // namespace wick
