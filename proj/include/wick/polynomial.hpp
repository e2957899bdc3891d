#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wick/scalar.hpp"

namespace wick {

/// Largest supported chart dimension n.
inline constexpr int kMaxDim = 4;
/// Exponent slots: z1..z4 occupy 0..3, w1..w4 occupy 4..7.
inline constexpr int kSlots = 2 * kMaxDim;

using Exponent = std::array<std::uint16_t, kSlots>;

inline constexpr int z_slot(int k) { return k - 1; }
inline constexpr int w_slot(int l) { return kMaxDim + l - 1; }
inline constexpr bool is_z_slot(int s) { return s < kMaxDim; }
/// Slot of the formal conjugate variable (z_k <-> w_k).
inline constexpr int mirror_slot(int s) { return s < kMaxDim ? s + kMaxDim : s - kMaxDim; }

std::string slot_name(int slot);
int total_degree(const Exponent& e);

struct Term {
  Exponent exp{};
  Scalar coef;
};

/// Sparse multivariate polynomial over Gaussian rationals. Terms are kept in
/// strictly descending lexicographic order of exponent vectors with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c) : Polynomial(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Scalar& c);

  static Polynomial monomial(const Exponent& e, Scalar c = Scalar(1));
  static Polynomial variable(int slot);
  /// Takes arbitrary terms; sorts, merges and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Constant term value (zero polynomial gives 0).
  Scalar constant_value() const;
  const Term& leading_term() const { return terms_.front(); }

  int degree_in(int slot) const;
  int total_degree() const;
  /// Bitmask of slots with positive exponent in some term.
  unsigned used_slots() const;

  Polynomial derivative(int slot) const;
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;

  /// Exact quotient, or nullopt when `d` does not divide this polynomial.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;

  /// Terms of this polynomial grouped by power of `slot` (slot exponent removed).
  std::vector<Polynomial> coefficients_in(int slot) const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (leading coefficient 1); gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace wick
