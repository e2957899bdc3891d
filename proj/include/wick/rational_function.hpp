#pragma once

#include <span>
#include <string>
#include <vector>

#include "wick/polynomial.hpp"

namespace wick {

/// Quotient of polynomials in z1..zn, w1..wn.
///
/// Values are kept reduced: gcd(num, den) = 1 and den is monic in the
/// descending lex order. The representation is therefore unique and
/// structural equality coincides with the cross-multiplication test
/// num1*den2 == num2*den1, which `equals_by_cross_multiplication` exposes
/// for callers that hold values built elsewhere.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Scalar& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  /// Reduces num/den; throws MathError("zero divisor") for den = 0.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(int slot) { return Polynomial::variable(slot); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_.is_zero() ? one() : den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_zero(); }
  bool is_polynomial() const { return den_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_zero(); }
  /// Value when constant; meaningless otherwise.
  Scalar constant_value() const { return num_.constant_value(); }
  unsigned used_slots() const { return num_.used_slots() | den_.used_slots(); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction& operator*=(const Scalar& c);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend RationalFunction operator*(RationalFunction a, const Scalar& c) { return a *= c; }
  friend RationalFunction operator*(const Scalar& c, RationalFunction a) { return a *= c; }
  RationalFunction operator-() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(unsigned k) const;
  RationalFunction derivative(int slot) const;
  /// Partial derivative of multi-order `e` (applied slot by slot).
  RationalFunction derivative(const Exponent& e) const;

  /// Replaces slot s by images[s] for every slot s < images.size();
  /// throws MathError("singular substitution") when the image denominator
  /// vanishes identically.
  RationalFunction substitute(std::span<const RationalFunction> images) const;

  /// Canonical text, e.g. `(2*z1*w1 + 1)/(z1^2*w1 + 1)`.
  std::string to_string() const;
  /// True when to_string() must be parenthesised as a product factor.
  bool needs_parentheses() const;

 private:
  static const Polynomial& one();
  /// Stores d, keeping the denominator 1 implicit.
  void set_den(Polynomial d);

  Polynomial num_;
  // Empty for the denominator 1, which avoids allocating it for every value.
  Polynomial den_;
};

bool equals_by_cross_multiplication(const RationalFunction& a, const RationalFunction& b);

/// Identity images for substitution: slot s maps to its own variable.
std::vector<RationalFunction> identity_images();

}  // namespace wick
