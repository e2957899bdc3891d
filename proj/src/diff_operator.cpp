#include "wick/diff_operator.hpp"

#include <algorithm>

namespace wick {

DiffOperator DiffOperator::multiplication(const RationalFunction& f) {
  DiffOperator d;
  if (!f.is_zero()) d.terms_.emplace(Exponent{}, f);
  return d;
}

void DiffOperator::add(const Exponent& e, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void DiffOperator::set(const Exponent& e, RationalFunction c) {
  if (c.is_zero()) {
    terms_.erase(e);
  } else {
    terms_[e] = std::move(c);
  }
}

RationalFunction DiffOperator::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RationalFunction() : it->second;
}

int DiffOperator::w_order() const {
  int order = -1;
  for (const auto& [e, c] : terms_) {
    int k = 0;
    for (int s = kMaxDim; s < kSlots; ++s) k += e[s];
    order = std::max(order, k);
  }
  return order;
}

int DiffOperator::z_order() const {
  int order = -1;
  for (const auto& [e, c] : terms_) {
    int k = 0;
    for (int s = 0; s < kMaxDim; ++s) k += e[s];
    order = std::max(order, k);
  }
  return order;
}

RationalFunction DiffOperator::apply(const RationalFunction& a) const {
  if (a.is_polynomial()) {
    // Sum the polynomial part without intermediate reductions.
    Polynomial poly;
    RationalFunction rest;
    for (const auto& [e, c] : terms_) {
      RationalFunction d = a.derivative(e);
      if (d.is_zero()) continue;
      if (c.is_polynomial()) {
        poly += c.num() * d.num();
      } else {
        rest += c * d;
      }
    }
    return rest + RationalFunction(std::move(poly));
  }
  RationalFunction out;
  for (const auto& [e, c] : terms_) {
    RationalFunction d = a.derivative(e);
    if (d.is_zero()) continue;
    out += c * d;
  }
  return out;
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

DiffOperator& DiffOperator::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

DiffOperator DiffOperator::operator-() const {
  DiffOperator r = *this;
  r *= Scalar(-1);
  return r;
}

std::string DiffOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.to_string() + ")";
    for (int s = 0; s < kSlots; ++s) {
      if (it->first[s] == 0) continue;
      out += "*d" + slot_name(s);
      if (it->first[s] > 1) out += "^" + std::to_string(it->first[s]);
    }
  }
  return out;
}

long multi_binomial(const Exponent& big, const Exponent& small) {
  long r = 1;
  for (int s = 0; s < kSlots; ++s) {
    long n = big[s], k = small[s];
    if (k > n) return 0;
    long b = 1;
    for (long j = 1; j <= k; ++j) b = b * (n - k + j) / j;
    r *= b;
  }
  return r;
}

}  // namespace wick
