#pragma once

#include <algorithm>
#include <cassert>
#include <vector>

#include "wick/error.hpp"

namespace wick {

/// Truncated formal power series c_0 + c_1 v + ... + c_N v^N in the
/// deformation parameter. Every operation discards orders above N; binary
/// operations on series of different orders truncate to the smaller one.
template <class T>
class Series {
 public:
  Series() : coeffs_(1) {}
  explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1) { assert(order >= 0); }
  Series(int order, T constant) : Series(order) { coeffs_[0] = std::move(constant); }
  Series(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {  // NOLINT(google-explicit-constructor)
    if (coeffs_.empty()) coeffs_.resize(1);
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  T& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<T>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return c.is_zero(); });
  }

  Series truncated(int order) const {
    Series r(order);
    for (int k = 0; k <= std::min(order, this->order()); ++k) r[k] = coeffs_[k];
    return r;
  }

  /// Multiplication by v^k (orders shifted past N drop out).
  Series shifted(int k) const {
    Series r(order());
    for (int j = 0; j + k <= order(); ++j) r[j + k] = coeffs_[j];
    return r;
  }

  /// Division by v; requires a vanishing constant term. Result has order N-1.
  Series divided_by_nu() const {
    if (!coeffs_[0].is_zero()) throw MathError("series not divisible by v");
    if (order() == 0) return Series(0);
    return Series(std::vector<T>(coeffs_.begin() + 1, coeffs_.end()));
  }

  Series& operator+=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) coeffs_[k] += o[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) coeffs_[k] -= o[k];
    return *this;
  }
  template <class S>
  Series& scale(const S& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const {
    Series r = *this;
    for (auto& x : r.coeffs_) x = -x;
    return r;
  }

  /// Cauchy product modulo v^{N+1}.
  friend Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b[j].is_zero()) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) {
    const int n = std::max(a.order(), b.order());
    for (int k = 0; k <= n; ++k) {
      const bool za = k > a.order() || a[k].is_zero();
      const bool zb = k > b.order() || b[k].is_zero();
      if (za && zb) continue;
      if (za != zb || !(a[k] == b[k])) return false;
    }
    return true;
  }

 private:
  void shrink_to(int order) {
    if (order < this->order()) coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<T> coeffs_;
};

}  // namespace wick
