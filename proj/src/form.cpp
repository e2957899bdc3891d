#include "wick/form.hpp"

#include <bit>

#include "wick/error.hpp"

namespace wick {

namespace {

int sign_of(int swaps) { return (swaps & 1) ? -1 : 1; }

// Sign of e^s ^ e^mask rewritten in ascending order (0 if s in mask).
int insertion_sign(int slot, unsigned mask) {
  if ((mask >> slot) & 1u) return 0;
  return sign_of(std::popcount(mask & ((1u << slot) - 1u)));
}

// Contraction of d(slot) against e^mask; degree-0 masks give zero.
Form contract(const VectorField& x, const Form& f) {
  Form out;
  for (const auto& [mask, c] : f.terms()) {
    for (int s = 0; s < kSlots; ++s) {
      if (!((mask >> s) & 1u)) continue;
      if (is_z_slot(s) ? s >= x.dimension() : s - kMaxDim >= x.dimension()) continue;
      const RationalFunction& xs = x.component(s);
      if (xs.is_zero()) continue;
      const int sign = sign_of(std::popcount(static_cast<unsigned>(mask) & ((1u << s) - 1u)));
      RationalFunction v = xs * c;
      if (sign < 0) v = -v;
      out.add(static_cast<Form::Mask>(mask & ~(1u << s)), v);
    }
  }
  return out;
}

Form differentiate(const Form& f, bool holomorphic, bool antiholomorphic) {
  Form out;
  for (const auto& [mask, c] : f.terms()) {
    const unsigned used = c.used_slots();
    for (int s = 0; s < kSlots; ++s) {
      if (!((used >> s) & 1u)) continue;
      if (is_z_slot(s) ? !holomorphic : !antiholomorphic) continue;
      const int sign = insertion_sign(s, mask);
      if (sign == 0) continue;
      RationalFunction d = c.derivative(s);
      if (d.is_zero()) continue;
      if (sign < 0) d = -d;
      out.add(static_cast<Form::Mask>(mask | (1u << s)), d);
    }
  }
  return out;
}

}  // namespace

std::pair<int, int> mask_type(Form::Mask mask) {
  const unsigned m = mask;
  return {std::popcount(m & 0x0Fu), std::popcount(m & 0xF0u)};
}

std::string basis_name(Form::Mask mask) {
  if (mask == 0) return "1";
  std::string out;
  for (int s = 0; s < kSlots; ++s) {
    if (!((mask >> s) & 1u)) continue;
    if (!out.empty()) out += "^";
    out += "d" + slot_name(s);
  }
  return out;
}

Form Form::function(const RationalFunction& f) { return basis(0, f); }

Form Form::basis(Mask mask, RationalFunction coef) {
  Form r;
  if (!coef.is_zero()) r.terms_.emplace(mask, std::move(coef));
  return r;
}

Form Form::differential(int slot) { return basis(static_cast<Mask>(1u << slot), RationalFunction(1)); }

Form Form::type11(const Matrix<RationalFunction>& f) {
  Form r;
  for (std::size_t k = 0; k < f.size(); ++k)
    for (std::size_t l = 0; l < f[k].size(); ++l)
      r.add(static_cast<Mask>((1u << z_slot(static_cast<int>(k) + 1)) |
                              (1u << w_slot(static_cast<int>(l) + 1))),
            f[k][l]);
  return r;
}

RationalFunction Form::coefficient(Mask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? RationalFunction() : it->second;
}

RationalFunction Form::coefficient11(int k, int l) const {
  return coefficient(static_cast<Mask>((1u << z_slot(k)) | (1u << w_slot(l))));
}

RationalFunction Form::component(int slot) const { return coefficient(static_cast<Mask>(1u << slot)); }

bool Form::is_type(int p, int q) const {
  for (const auto& [mask, c] : terms_)
    if (mask_type(mask) != std::make_pair(p, q)) return false;
  return true;
}

bool Form::is_degree(int k) const {
  for (const auto& [mask, c] : terms_)
    if (std::popcount(static_cast<unsigned>(mask)) != k) return false;
  return true;
}

bool Form::has_degree_zero_terms() const { return terms_.count(0) != 0; }

void Form::add(Mask mask, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mask);
  if (it == terms_.end()) {
    terms_.emplace(mask, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Form& Form::operator+=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

Form& Form::operator*=(const RationalFunction& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= f;
  return *this;
}

Form Form::operator-() const {
  Form r = *this;
  r *= Scalar(-1);
  return r;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mask, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (mask != 0) out += " " + basis_name(mask);
  }
  return out;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const unsigned ua = ma, ub = mb;
      if (ua & ub) continue;
      int swaps = 0;
      for (int s = 0; s < kSlots; ++s)
        if ((ub >> s) & 1u) swaps += std::popcount(ua >> (s + 1));
      RationalFunction c = ca * cb;
      if (swaps & 1) c = -c;
      out.add(static_cast<Form::Mask>(ua | ub), c);
    }
  }
  return out;
}

Form exterior_d(const Form& f) { return differentiate(f, true, true); }
Form dolbeault_del(const Form& f) { return differentiate(f, true, false); }
Form dolbeault_delbar(const Form& f) { return differentiate(f, false, true); }

Form interior_product(const VectorField& x, const Form& f) {
  if (f.has_degree_zero_terms()) throw InputError("interior product of a degree-0 form");
  return contract(x, f);
}

Form lie_derivative(const VectorField& x, const Form& f) {
  return contract(x, exterior_d(f)) + exterior_d(contract(x, f));
}

RationalFunction evaluate(const Form& two_form, const VectorField& x, const VectorField& y) {
  if (!two_form.is_degree(2)) throw InputError("evaluate: form is not a 2-form");
  return contract(y, contract(x, two_form)).coefficient(0);
}

}  // namespace wick
