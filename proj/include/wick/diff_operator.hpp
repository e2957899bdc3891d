#pragma once

#include <map>
#include <string>

#include "wick/rational_function.hpp"

namespace wick {

/// Linear differential operator sum_e coef_e * d^e, where the multi-index e
/// holds z-orders in the z slots and w-orders in the w slots.
class DiffOperator {
 public:
  DiffOperator() = default;

  static DiffOperator multiplication(const RationalFunction& f);
  static DiffOperator identity() { return multiplication(RationalFunction(1)); }

  /// Adds c to the coefficient of d^e (removing it if it cancels).
  void add(const Exponent& e, const RationalFunction& c);
  void set(const Exponent& e, RationalFunction c);
  RationalFunction coefficient(const Exponent& e) const;

  const std::map<Exponent, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Highest total derivative order in the w slots (-1 for the zero operator).
  int w_order() const;
  int z_order() const;

  RationalFunction apply(const RationalFunction& a) const;

  DiffOperator& operator+=(const DiffOperator& o);
  DiffOperator& operator-=(const DiffOperator& o);
  DiffOperator& operator*=(const Scalar& c);
  DiffOperator operator-() const;
  friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
  friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Exponent, RationalFunction> terms_;
};

/// Binomial coefficient of multi-indices: prod_s C(big_s, small_s).
long multi_binomial(const Exponent& big, const Exponent& small);

}  // namespace wick
