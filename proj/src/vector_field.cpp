#include "wick/vector_field.hpp"

#include "wick/error.hpp"

namespace wick {

VectorField::VectorField(int dimension)
    : hol_(static_cast<std::size_t>(dimension)), antihol_(static_cast<std::size_t>(dimension)) {}

VectorField::VectorField(std::vector<RationalFunction> hol, std::vector<RationalFunction> antihol)
    : hol_(std::move(hol)), antihol_(std::move(antihol)) {
  if (hol_.size() != antihol_.size())
    throw InputError("vector field: hol and antihol component counts differ");
  if (hol_.size() > static_cast<std::size_t>(kMaxDim))
    throw InputError("vector field: dimension too large");
}

const RationalFunction& VectorField::component(int slot) const {
  return is_z_slot(slot) ? hol_.at(static_cast<std::size_t>(slot))
                         : antihol_.at(static_cast<std::size_t>(slot - kMaxDim));
}

RationalFunction& VectorField::component(int slot) {
  return is_z_slot(slot) ? hol_.at(static_cast<std::size_t>(slot))
                         : antihol_.at(static_cast<std::size_t>(slot - kMaxDim));
}

bool VectorField::is_zero() const {
  for (const auto& c : hol_)
    if (!c.is_zero()) return false;
  for (const auto& c : antihol_)
    if (!c.is_zero()) return false;
  return true;
}

RationalFunction VectorField::apply(const RationalFunction& f) const {
  RationalFunction out;
  for (int k = 0; k < dimension(); ++k) {
    if (!hol_[k].is_zero()) out += hol_[k] * f.derivative(z_slot(k + 1));
    if (!antihol_[k].is_zero()) out += antihol_[k] * f.derivative(w_slot(k + 1));
  }
  return out;
}

VectorField VectorField::complex_structure() const {
  VectorField r = *this;
  const Scalar i = Scalar::imaginary_unit();
  for (auto& c : r.hol_) c *= i;
  for (auto& c : r.antihol_) c *= -i;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  if (o.dimension() != dimension()) throw InputError("vector field dimension mismatch");
  for (int k = 0; k < dimension(); ++k) {
    hol_[k] += o.hol_[k];
    antihol_[k] += o.antihol_[k];
  }
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  if (o.dimension() != dimension()) throw InputError("vector field dimension mismatch");
  for (int k = 0; k < dimension(); ++k) {
    hol_[k] -= o.hol_[k];
    antihol_[k] -= o.antihol_[k];
  }
  return *this;
}

VectorField& VectorField::operator*=(const Scalar& c) {
  for (auto& x : hol_) x *= c;
  for (auto& x : antihol_) x *= c;
  return *this;
}

std::string VectorField::to_string() const {
  std::string out;
  auto piece = [&](const RationalFunction& c, int slot) {
    if (c.is_zero()) return;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*d" + slot_name(slot);
  };
  for (int k = 0; k < dimension(); ++k) piece(hol_[k], z_slot(k + 1));
  for (int k = 0; k < dimension(); ++k) piece(antihol_[k], w_slot(k + 1));
  return out.empty() ? "0" : out;
}

VectorField bracket(const VectorField& x, const VectorField& y) {
  if (x.dimension() != y.dimension()) throw InputError("vector field dimension mismatch");
  VectorField r(x.dimension());
  for (int k = 1; k <= x.dimension(); ++k) {
    for (int s : {z_slot(k), w_slot(k)}) r.component(s) = x.apply(y.component(s)) - y.apply(x.component(s));
  }
  return r;
}

}  // namespace wick
