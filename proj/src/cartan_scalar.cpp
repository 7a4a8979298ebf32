#include "stepalg/cartan_scalar.hpp"

#include <stdexcept>

namespace stepalg {

CartanScalar CartanScalar::inverse_affine(const AffineForm& f) {
  if (f.is_zero()) throw std::domain_error("inverse of zero affine form");
  AffineForm g = f;
  Rat scale = g.make_primitive();  // f = scale * g
  CartanScalar r;
  if (g.is_constant()) {
    // Purely constant form.
    r.num_ = Poly::constant(f.rank(), 1 / (scale * g.constant_term()));
    return r;
  }
  r.num_ = Poly::constant(f.rank(), 1 / scale);
  r.den_[g] = 1;
  return r;
}

void CartanScalar::multiply_den(const AffineForm& f, int exp) {
  auto [it, fresh] = den_.emplace(f, exp);
  if (!fresh) it->second += exp;
}

Poly CartanScalar::den_expanded() const {
  Poly p = Poly::constant(num_.rank(), 1);
  for (const auto& [f, e] : den_)
    for (int k = 0; k < e; ++k) p = p * Poly::from_affine(f);
  return p;
}

void CartanScalar::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  // Cancel denominator factors dividing the numerator exactly.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = den_.begin(); it != den_.end(); ++it) {
      if (auto q = num_.divide_by_affine(it->first)) {
        num_ = std::move(*q);
        if (--it->second == 0) den_.erase(it);
        changed = true;
        break;
      }
    }
  }
}

CartanScalar& CartanScalar::operator*=(const CartanScalar& o) {
  num_ = num_ * o.num_;
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  for (const auto& [f, e] : o.den_) multiply_den(f, e);
  normalize();
  return *this;
}

CartanScalar& CartanScalar::operator+=(const CartanScalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  // Bring to the common denominator lcm(den, o.den): multiply each
  // numerator by the factors it is missing.
  Poly left = num_, right = o.num_;
  std::map<AffineForm, int> common = den_;
  for (const auto& [f, e] : o.den_) {
    auto it = common.find(f);
    if (it == common.end())
      common[f] = e;
    else
      it->second = std::max(it->second, e);
  }
  for (const auto& [f, e] : common) {
    auto mine = den_.find(f);
    int have = mine == den_.end() ? 0 : mine->second;
    for (int k = have; k < e; ++k) left = left * Poly::from_affine(f);
    auto theirs = o.den_.find(f);
    have = theirs == o.den_.end() ? 0 : theirs->second;
    for (int k = have; k < e; ++k) right = right * Poly::from_affine(f);
  }
  num_ = left + right;
  den_ = std::move(common);
  normalize();
  return *this;
}

CartanScalar& CartanScalar::operator-=(const CartanScalar& o) {
  return *this += -o;
}

CartanScalar CartanScalar::inv() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  CartanScalar r;
  r.num_ = den_expanded();
  if (num_.is_constant()) {
    r.num_ *= 1 / num_.constant_value();
    return r;
  }
  auto aff = num_.as_affine();
  if (!aff)
    throw std::domain_error(
        "inverse requires a constant or affine numerator; got degree " +
        std::to_string(num_.total_degree()));
  AffineForm g = *aff;
  Rat scale = g.make_primitive();
  r.num_ *= 1 / scale;
  r.den_[g] = 1;
  r.normalize();
  return r;
}

CartanScalar CartanScalar::shifted(const std::vector<Rat>& pairings) const {
  CartanScalar r;
  r.num_ = num_.shifted(pairings);
  for (const auto& [f, e] : den_) {
    AffineForm g = f;
    Rat bump = 0;
    for (int i = 0; i < g.rank(); ++i)
      bump += g.linear()[static_cast<std::size_t>(i)] * pairings.at(static_cast<std::size_t>(i));
    g += AffineForm::constant(g.rank(), bump);
    // Shifting a primitive integer form by a rational constant can break
    // primitivity; rescale and fold the factor into the numerator.
    Rat s = g.make_primitive();
    for (int k = 0; k < e; ++k) r.num_ *= 1 / s;
    r.multiply_den(g, e);
  }
  r.normalize();
  return r;
}

CartanScalar CartanScalar::shifted(const RootSystem& rs, const Weight& mu) const {
  std::vector<Rat> pairings;
  pairings.reserve(static_cast<std::size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i)
    pairings.push_back(dot(rs.simple_root(i), mu));
  return shifted(pairings);
}

Rat CartanScalar::evaluate(const std::vector<Rat>& vals) const {
  Rat d = 1;
  for (const auto& [f, e] : den_) {
    Rat v = f.evaluate(vals);
    if (stepalg::is_zero(v)) throw std::domain_error("denominator vanishes at evaluation point");
    for (int k = 0; k < e; ++k) d *= v;
  }
  return num_.evaluate(vals) / d;
}

std::ostream& operator<<(std::ostream& os, const CartanScalar& s) {
  if (s.den_.empty()) return os << s.num_;
  os << '(' << s.num_ << ")/(";
  bool first = true;
  for (const auto& [f, e] : s.den_) {
    if (!first) os << '*';
    os << '(' << f << ')';
    if (e > 1) os << '^' << e;
    first = false;
  }
  return os << ')';
}

}  // namespace stepalg
