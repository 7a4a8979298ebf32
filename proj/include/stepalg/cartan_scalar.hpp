#pragma once

#include <map>
#include <ostream>

#include "stepalg/polynomial.hpp"

namespace stepalg {

// A rational expression in the Cartan coordinates, kept as
//
//     numerator polynomial / product of affine-form factors.
//
// The denominator is stored as a multiset of primitive affine forms with
// positive integer exponents and is never expanded; normalization cancels
// any factor that divides the numerator exactly, so equal values built
// along different arithmetic paths compare equal structurally.  This is
// the coefficient field of the classical mode: every denominator that
// arises in the constructions (eta differences, projector factors) is a
// product of affine forms, and inversion is only ever applied to values
// whose numerator is constant or affine — inv throws otherwise rather
// than attempt general multivariate factoring.
class CartanScalar {
 public:
  CartanScalar() = default;
  explicit CartanScalar(int rank) : num_(rank) {}
  /* implicit */ CartanScalar(Poly num) : num_(std::move(num)) { normalize(); }

  static CartanScalar constant(int rank, Rat c) {
    return CartanScalar(Poly::constant(rank, std::move(c)));
  }
  static CartanScalar one(int rank) { return constant(rank, 1); }
  static CartanScalar zero(int rank) { return CartanScalar(rank); }
  static CartanScalar from_affine(const AffineForm& f) {
    return CartanScalar(Poly::from_affine(f));
  }
  // 1 / f for a nonzero affine form f.
  static CartanScalar inverse_affine(const AffineForm& f);

  int rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.empty() && num_.is_constant() && num_.constant_value() == 1; }
  const Poly& numerator() const { return num_; }
  const std::map<AffineForm, int>& denominator_factors() const { return den_; }

  CartanScalar& operator+=(const CartanScalar& o);
  CartanScalar& operator-=(const CartanScalar& o);
  CartanScalar& operator*=(const CartanScalar& o);
  friend CartanScalar operator+(CartanScalar a, const CartanScalar& b) { return a += b; }
  friend CartanScalar operator-(CartanScalar a, const CartanScalar& b) { return a -= b; }
  friend CartanScalar operator*(CartanScalar a, const CartanScalar& b) { return a *= b; }
  friend CartanScalar operator-(CartanScalar a) {
    a.num_ *= Rat(-1);
    return a;
  }
  CartanScalar& operator*=(const Rat& c) {
    num_ *= c;
    if (num_.is_zero()) den_.clear();
    return *this;
  }
  friend CartanScalar operator*(CartanScalar a, const Rat& c) { return a *= c; }
  friend CartanScalar operator*(const Rat& c, CartanScalar a) { return a *= c; }

  // Multiplicative inverse.  Requires a nonzero value whose numerator
  // (after normalization) has total degree <= 1; throws std::domain_error
  // otherwise.  See the class comment for why this restriction suffices.
  CartanScalar inv() const;
  friend CartanScalar operator/(CartanScalar a, const CartanScalar& b) { return a *= b.inv(); }

  friend bool operator==(const CartanScalar& a, const CartanScalar& b) {
    if (a.num_ == b.num_ && a.den_ == b.den_) return true;
    return (a - b).is_zero();
  }
  friend bool operator!=(const CartanScalar& a, const CartanScalar& b) { return !(a == b); }
  friend bool operator<(const CartanScalar& a, const CartanScalar& b) {
    if (a.den_ != b.den_) return a.den_ < b.den_;
    return a.num_ < b.num_;
  }

  // Translation action: h_{alpha_i} -> h_{alpha_i} + pairings[i].
  CartanScalar shifted(const std::vector<Rat>& pairings) const;
  CartanScalar shifted(const RootSystem& rs, const Weight& mu) const;

  // Evaluation under h_{alpha_i} -> vals[i]; throws if a denominator
  // factor vanishes there.
  Rat evaluate(const std::vector<Rat>& vals) const;

  friend std::ostream& operator<<(std::ostream& os, const CartanScalar& s);

 private:
  void normalize();
  void multiply_den(const AffineForm& f, int exp);  // f must be primitive
  Poly den_expanded() const;

  Poly num_;
  std::map<AffineForm, int> den_;  // primitive affine form -> exponent >= 1
};

}  // namespace stepalg
