#pragma once

#include <vector>

#include "wick/form.hpp"
#include "wick/rational_function.hpp"

namespace wick {

/// Formal conjugate: swaps z_k <-> w_k and conjugates coefficients.
RationalFunction mirror(const RationalFunction& f);

/// Holomorphic chart map z -> F(z) together with its mirrored
/// antiholomorphic part and a verified inverse. Because only holomorphic
/// pairs are representable, pull-back preserves the complex structure.
class ChartMap {
 public:
  /// `images` F^1..F^n in z-variables only, `inverse_images` G^1..G^n.
  /// Throws InputError when an image depends on a w-variable or when
  /// F(G(z)) and G(F(z)) are not the identity.
  ChartMap(std::vector<RationalFunction> images, std::vector<RationalFunction> inverse_images);

  static ChartMap identity(int dimension);

  int dimension() const { return static_cast<int>(hol_.size()); }
  const std::vector<RationalFunction>& hol_images() const { return hol_; }
  std::vector<RationalFunction> antihol_images() const;
  ChartMap inverse() const;
  /// (this o other)^* = other^* o this^*: the map z -> this(other(z)).
  ChartMap compose(const ChartMap& other) const;

  /// Substitution images for all slots.
  std::vector<RationalFunction> substitution() const;

  RationalFunction pullback(const RationalFunction& f) const;
  Form pullback(const Form& f) const;

 private:
  ChartMap() = default;
  std::vector<RationalFunction> hol_;
  std::vector<RationalFunction> inv_;
};

}  // namespace wick
