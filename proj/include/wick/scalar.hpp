#pragma once

#include <gmpxx.h>

#include <string>

namespace wick {

/// Gaussian rational re + i*im with both parts exact and canonical.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  static Scalar fraction(long num, long den);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Grammar-compatible rendering: `3/2`, `-i`, `2*i`, `(1 + 2*i)`.
  std::string to_string() const;
  /// True when the rendering needs parentheses as a product factor.
  bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace wick
