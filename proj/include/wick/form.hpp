#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "wick/linear_solve.hpp"
#include "wick/rational_function.hpp"
#include "wick/vector_field.hpp"

namespace wick {

/// Differential form with rational coefficients in the complex coordinate
/// coframe. A basis element is a set of slots (bit s = dz_{s+1} for s < 4,
/// dw_{s-3} otherwise) wedged in ascending slot order, i.e. dz^K ^ dw^L with
/// K and L sorted. Terms of different types (p,q) may coexist; the type
/// queries report what is present.
class Form {
 public:
  using Mask = std::uint8_t;

  Form() = default;

  static Form function(const RationalFunction& f);
  static Form basis(Mask mask, RationalFunction coef);
  /// The coordinate 1-form of a slot.
  static Form differential(int slot);
  /// sum_{k,l} f[k][l] dz_{k+1} ^ dw_{l+1}.
  static Form type11(const Matrix<RationalFunction>& f);

  const std::map<Mask, RationalFunction>& terms() const { return terms_; }
  RationalFunction coefficient(Mask mask) const;
  /// Coefficient of dz_k ^ dw_l (1-based indices).
  RationalFunction coefficient11(int k, int l) const;
  /// Coefficient of the 1-form d(slot).
  RationalFunction component(int slot) const;

  bool is_zero() const { return terms_.empty(); }
  /// True when every term has type (p,q); the zero form has every type.
  bool is_type(int p, int q) const;
  /// True when every term has total degree k.
  bool is_degree(int k) const;
  bool has_degree_zero_terms() const;

  void add(Mask mask, const RationalFunction& c);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  Form& operator*=(const RationalFunction& f);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(const Scalar& c, Form a) { return a *= c; }
  friend Form operator*(const RationalFunction& f, Form a) { return a *= f; }
  Form operator-() const;
  friend bool operator==(const Form& a, const Form& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  std::map<Mask, RationalFunction> terms_;
};

std::string basis_name(Form::Mask mask);
std::pair<int, int> mask_type(Form::Mask mask);

Form wedge(const Form& a, const Form& b);

/// d = del + delbar.
Form exterior_d(const Form& f);
/// Holomorphic part del (raises p).
Form dolbeault_del(const Form& f);
/// Antiholomorphic part delbar (raises q).
Form dolbeault_delbar(const Form& f);

/// Contraction in the first slot. Throws InputError for forms with
/// degree-0 terms.
Form interior_product(const VectorField& x, const Form& f);

/// Cartan formula i_X d + d i_X (functions f map to X(f)).
Form lie_derivative(const VectorField& x, const Form& f);

/// F(X, Y) for a 2-form F.
RationalFunction evaluate(const Form& two_form, const VectorField& x, const VectorField& y);

}  // namespace wick
