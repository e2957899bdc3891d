#pragma once

#include <string>
#include <vector>

#include "wick/rational_function.hpp"

namespace wick {

/// X = chi^k d/dz_k + chibar^l d/dw_l on an n-dimensional chart.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(int dimension);
  VectorField(std::vector<RationalFunction> hol, std::vector<RationalFunction> antihol);

  int dimension() const { return static_cast<int>(hol_.size()); }
  const std::vector<RationalFunction>& hol() const { return hol_; }
  const std::vector<RationalFunction>& antihol() const { return antihol_; }

  /// Component along the coordinate vector field of `slot`.
  const RationalFunction& component(int slot) const;
  RationalFunction& component(int slot);

  bool is_zero() const;

  /// X(f) = sum_s X^s d_s f.
  RationalFunction apply(const RationalFunction& f) const;

  /// I X = i*chi - i*chibar.
  VectorField complex_structure() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(const Scalar& c);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Scalar& c, VectorField a) { return a *= c; }
  friend bool operator==(const VectorField& a, const VectorField& b) {
    return a.hol_ == b.hol_ && a.antihol_ == b.antihol_;
  }

  std::string to_string() const;

 private:
  std::vector<RationalFunction> hol_;
  std::vector<RationalFunction> antihol_;
};

/// Lie bracket [X, Y]^s = X(Y^s) - Y(X^s).
VectorField bracket(const VectorField& x, const VectorField& y);

}  // namespace wick
