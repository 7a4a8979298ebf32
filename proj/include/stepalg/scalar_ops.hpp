#pragma once

#include "stepalg/cartan_scalar.hpp"
#include "stepalg/q_scalar.hpp"

namespace stepalg {

enum class ScalarMode { classical, quantum };

// Cartan factor attached to one step of a descending route:
//   quantum   B = q^{-d} / [d]_q,
//   classical B = 1 / d,
// where d is the eta difference of the two nodes.  The quantum factor
// times (q^{2d} - 1)/(q - q^{-1}) is exactly 1, which the tests verify.
inline CartanScalar b_factor_classical(const AffineForm& d) {
  return CartanScalar::inverse_affine(d);
}

inline QScalar b_factor_quantum(const AffineForm& d) {
  return QScalar::q_power(-d) * q_bracket(d).inv();
}

// Closed form of 1/B in the quantum mode: (q^{2d} - 1)/(q - q^{-1}).
inline QScalar b_factor_quantum_inverse(const AffineForm& d) {
  const int n = d.rank();
  AffineForm one_form = AffineForm::constant(n, 1);
  QLaurent num = QLaurent::q_power(d * Rat(2)) - QLaurent::one(n);
  QLaurent den = QLaurent::q_power(one_form) - QLaurent::q_power(-one_form);
  return QScalar(std::move(num), std::move(den));
}

// Uniform scalar interface for the route calculus, which is generic over
// the mode.  bracket(f) is [f]_q resp. the form itself; exp_factor(f) is
// q^f resp. 1 (the classical limit of every pure exponential).
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<CartanScalar> {
  static constexpr ScalarMode mode = ScalarMode::classical;
  static CartanScalar zero(int rank) { return CartanScalar::zero(rank); }
  static CartanScalar one(int rank) { return CartanScalar::one(rank); }
  static CartanScalar bracket(const AffineForm& f) { return CartanScalar::from_affine(f); }
  static CartanScalar exp_factor(const AffineForm& f) { return CartanScalar::one(f.rank()); }
  static CartanScalar b_factor(const AffineForm& d) { return b_factor_classical(d); }
  static CartanScalar shifted(const CartanScalar& s, const RootSystem& rs, const Weight& mu) {
    return s.shifted(rs, mu);
  }
};

// The scalar identities behind the chain cancellations, as functions of
// free eta-values.  Both must vanish identically in either mode:
//
//   two_chain:   -q^{-a}          + [a] B(a)           with a = eta_l - eta_r,
//   three_chain: -q^{-a} B(d1) + [a] B(d1) B(d2) + q^{a} B(d2)
//                with d1 = eta_i - eta_l, d2 = eta_i - eta_r, a = d2 - d1.
template <class S>
S two_chain_factor(const AffineForm& a) {
  using Ops = ScalarOps<S>;
  return Ops::bracket(a) * Ops::b_factor(a) - Ops::exp_factor(-a);
}

template <class S>
S three_chain_factor(const AffineForm& d1, const AffineForm& d2) {
  using Ops = ScalarOps<S>;
  const AffineForm a = d2 - d1;
  const S b1 = Ops::b_factor(d1), b2 = Ops::b_factor(d2);
  return Ops::bracket(a) * b1 * b2 - Ops::exp_factor(-a) * b1 + Ops::exp_factor(a) * b2;
}

template <>
struct ScalarOps<QScalar> {
  static constexpr ScalarMode mode = ScalarMode::quantum;
  static QScalar zero(int rank) { return QScalar::zero(rank); }
  static QScalar one(int rank) { return QScalar::one(rank); }
  static QScalar bracket(const AffineForm& f) { return q_bracket(f); }
  static QScalar exp_factor(const AffineForm& f) { return QScalar::q_power(f); }
  static QScalar b_factor(const AffineForm& d) { return b_factor_quantum(d); }
  static QScalar shifted(const QScalar& s, const RootSystem& rs, const Weight& mu) {
    return s.shifted(rs, mu);
  }
};

}  // namespace stepalg
