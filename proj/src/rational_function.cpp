#include "wick/rational_function.hpp"

#include <utility>

#include "wick/error.hpp"

namespace wick {

namespace {

Polynomial quotient(const Polynomial& a, const Polynomial& b) {
  if (b.is_one()) return a;
  auto q = a.divide_exact(b);
  if (!q) throw InternalError("gcd does not divide operand");
  return *std::move(q);
}

}  // namespace

const Polynomial& RationalFunction::one() {
  static const Polynomial p(1);
  return p;
}

void RationalFunction::set_den(Polynomial d) {
  if (d.is_one()) {
    den_ = Polynomial();
  } else {
    den_ = std::move(d);
  }
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)) {
  if (den.is_zero()) throw MathError("zero divisor");
  if (num_.is_zero()) return;
  if (!den.is_constant()) {
    Polynomial g = gcd(num_, den);
    if (!g.is_one()) {
      num_ = quotient(num_, g);
      den = quotient(den, g);
    }
  }
  const Scalar lc = den.leading_term().coef;
  if (!lc.is_one()) {
    Scalar inv = Scalar(1) / lc;
    num_ *= inv;
    den *= inv;
  }
  set_den(std::move(den));
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (num_.is_zero()) {
      den_ = Polynomial();
    } else if (!den_.is_zero()) {
      Polynomial g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = quotient(num_, g);
        set_den(quotient(den_, g));
      }
    }
    return *this;
  }
  if (den_.is_zero()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  if (o.den_.is_zero()) {
    num_ += o.num_ * den_;
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  Polynomial b1 = quotient(den_, g);
  Polynomial d1 = quotient(o.den_, g);
  Polynomial t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial();
    return *this;
  }
  Polynomial g2 = gcd(t, g);
  num_ = quotient(t, g2);
  set_den(b1 * quotient(o.den_, g2));
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial();
    return *this;
  }
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ *= o.num_;
    return *this;
  }
  const Polynomial& od = o.den();
  const Polynomial& d = den();
  Polynomial g1 = gcd(num_, od);
  Polynomial g2 = gcd(o.num_, d);
  Polynomial nd = quotient(d, g2) * quotient(od, g1);
  num_ = quotient(num_, g1) * quotient(o.num_, g2);
  set_den(std::move(nd));
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial();
  } else {
    num_ *= c;
  }
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw MathError("zero divisor");
  RationalFunction inv;
  inv.num_ = o.den();
  Polynomial d = o.num_;
  const Scalar lc = d.leading_term().coef;
  if (!lc.is_one()) {
    Scalar s = Scalar(1) / lc;
    inv.num_ *= s;
    d *= s;
  }
  inv.set_den(std::move(d));
  return *this *= inv;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::pow(unsigned k) const {
  RationalFunction r;
  r.num_ = num_.pow(k);
  if (!den_.is_zero()) r.den_ = den_.pow(k);
  if (k == 0) r.den_ = Polynomial();
  return r;
}

RationalFunction RationalFunction::derivative(int slot) const {
  if (!((used_slots() >> slot) & 1u)) return RationalFunction();
  if (den_.is_zero()) return RationalFunction(num_.derivative(slot));
  Polynomial dd = den_.derivative(slot);
  if (dd.is_zero()) {
    return RationalFunction(num_.derivative(slot), den_);
  }
  // (n/d)' = (n' d - n d') / d^2; with g = gcd(d, d') the fraction
  // (n' (d/g) - n (d'/g)) / (d (d/g)) needs only a gcd against d.
  Polynomial g = gcd(den_, dd);
  Polynomial dg = quotient(den_, g);
  Polynomial top = num_.derivative(slot) * dg - num_ * quotient(dd, g);
  return RationalFunction(std::move(top), den_ * dg);
}

RationalFunction RationalFunction::derivative(const Exponent& e) const {
  if (den_.is_zero()) {
    Polynomial p = num_;
    for (int s = 0; s < kSlots; ++s)
      for (int k = 0; k < e[s] && !p.is_zero(); ++k) p = p.derivative(s);
    return RationalFunction(std::move(p));
  }
  RationalFunction r = *this;
  for (int s = 0; s < kSlots; ++s)
    for (int k = 0; k < e[s]; ++k) {
      if (r.is_zero()) return r;
      r = r.derivative(s);
    }
  return r;
}

namespace {

RationalFunction evaluate(const Polynomial& p, std::span<const RationalFunction> images,
                          std::vector<std::vector<RationalFunction>>& powers) {
  RationalFunction sum;
  for (const auto& t : p.terms()) {
    RationalFunction term(t.coef);
    for (int s = 0; s < kSlots; ++s) {
      const int e = t.exp[s];
      if (e == 0) continue;
      if (static_cast<std::size_t>(s) >= images.size())
        throw InputError("substitution image missing for " + slot_name(s));
      auto& cache = powers[s];
      if (cache.empty()) cache.push_back(RationalFunction(1));
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[s]);
      term *= cache[e];
    }
    sum += term;
  }
  return sum;
}

}  // namespace

RationalFunction RationalFunction::substitute(std::span<const RationalFunction> images) const {
  std::vector<std::vector<RationalFunction>> powers(kSlots);
  RationalFunction n = evaluate(num_, images, powers);
  RationalFunction d = evaluate(den(), images, powers);
  if (d.is_zero()) throw MathError("singular substitution");
  return n / d;
}

std::string RationalFunction::to_string() const {
  std::string n = num_.to_string();
  if (den_.is_zero()) return n;
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  bool wrap = den_.size() > 1;
  if (!wrap) {
    int factors = 0;
    for (auto e : den_.leading_term().exp)
      if (e != 0) ++factors;
    wrap = factors > 1;
  }
  if (wrap) d = "(" + d + ")";
  return n + "/" + d;
}

bool RationalFunction::needs_parentheses() const {
  return !den_.is_zero() || num_.size() > 1 ||
         (num_.size() == 1 && num_.leading_term().coef.is_compound());
}

bool equals_by_cross_multiplication(const RationalFunction& a, const RationalFunction& b) {
  return (a.num() * b.den() - b.num() * a.den()).is_zero();
}

std::vector<RationalFunction> identity_images() {
  std::vector<RationalFunction> v;
  v.reserve(kSlots);
  for (int s = 0; s < kSlots; ++s) v.push_back(RationalFunction::variable(s));
  return v;
}

}  // namespace wick
