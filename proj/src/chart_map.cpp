#include "wick/chart_map.hpp"

#include "wick/error.hpp"

namespace wick {

namespace {

Polynomial mirror_poly(const Polynomial& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Term m{Exponent{}, t.coef.conj()};
    for (int s = 0; s < kSlots; ++s) m.exp[mirror_slot(s)] = t.exp[s];
    terms.push_back(std::move(m));
  }
  return Polynomial::from_terms(std::move(terms));
}

constexpr unsigned kWMask = 0xF0u;

std::vector<RationalFunction> images_for(const std::vector<RationalFunction>& hol) {
  auto img = identity_images();
  for (std::size_t k = 0; k < hol.size(); ++k) {
    const int l = static_cast<int>(k) + 1;
    img[z_slot(l)] = hol[k];
    img[w_slot(l)] = mirror(hol[k]);
  }
  return img;
}

}  // namespace

RationalFunction mirror(const RationalFunction& f) {
  return RationalFunction(mirror_poly(f.num()), mirror_poly(f.den()));
}

ChartMap::ChartMap(std::vector<RationalFunction> images, std::vector<RationalFunction> inverse_images)
    : hol_(std::move(images)), inv_(std::move(inverse_images)) {
  if (hol_.empty() || hol_.size() > static_cast<std::size_t>(kMaxDim))
    throw InputError("chart map: bad dimension");
  if (hol_.size() != inv_.size()) throw InputError("chart map: inverse has wrong dimension");
  for (std::size_t k = 0; k < hol_.size(); ++k) {
    if (hol_[k].used_slots() & kWMask)
      throw InputError("chart map: image " + std::to_string(k + 1) + " is not holomorphic");
    if (inv_[k].used_slots() & kWMask)
      throw InputError("chart map: inverse image " + std::to_string(k + 1) + " is not holomorphic");
  }
  const auto fwd = images_for(hol_);
  const auto back = images_for(inv_);
  for (std::size_t k = 0; k < hol_.size(); ++k) {
    const auto z = RationalFunction::variable(z_slot(static_cast<int>(k) + 1));
    try {
      if (!(hol_[k].substitute(back) == z) || !(inv_[k].substitute(fwd) == z))
        throw InputError("chart map: inverse does not compose to the identity in component " +
                         std::to_string(k + 1));
    } catch (const MathError&) {
      throw InputError("chart map: composition with the inverse is singular");
    }
  }
}

ChartMap ChartMap::identity(int dimension) {
  ChartMap m;
  for (int k = 1; k <= dimension; ++k) {
    m.hol_.push_back(RationalFunction::variable(z_slot(k)));
    m.inv_.push_back(RationalFunction::variable(z_slot(k)));
  }
  return m;
}

std::vector<RationalFunction> ChartMap::antihol_images() const {
  std::vector<RationalFunction> out;
  for (const auto& f : hol_) out.push_back(mirror(f));
  return out;
}

ChartMap ChartMap::inverse() const {
  ChartMap m;
  m.hol_ = inv_;
  m.inv_ = hol_;
  return m;
}

ChartMap ChartMap::compose(const ChartMap& other) const {
  if (other.dimension() != dimension()) throw InputError("chart map: dimension mismatch");
  const auto inner = other.substitution();
  ChartMap m;
  for (const auto& f : hol_) m.hol_.push_back(f.substitute(inner));
  // (F o G)^{-1} = G^{-1} o F^{-1}
  const auto finv = inverse().substitution();
  for (const auto& g : other.inv_) m.inv_.push_back(g.substitute(finv));
  return m;
}

std::vector<RationalFunction> ChartMap::substitution() const { return images_for(hol_); }

RationalFunction ChartMap::pullback(const RationalFunction& f) const { return f.substitute(substitution()); }

Form ChartMap::pullback(const Form& f) const {
  const auto img = substitution();
  std::vector<Form> pulled(kSlots);
  for (int s = 0; s < kSlots; ++s) {
    const int k = is_z_slot(s) ? s : s - kMaxDim;
    if (k >= dimension()) continue;
    pulled[s] = exterior_d(Form::function(img[s]));
  }
  Form out;
  for (const auto& [mask, c] : f.terms()) {
    Form term = Form::function(c.substitute(img));
    for (int s = 0; s < kSlots; ++s) {
      if (!((mask >> s) & 1u)) continue;
      term = wedge(term, pulled[s]);
    }
    out += term;
  }
  return out;
}

}  // namespace wick
