#pragma once

#include <map>
#include <ostream>

#include "stepalg/affine_form.hpp"

namespace stepalg {

// Exact symbolic coefficients for the quantum mode.
//
// A QLaurent is a finite sum  sum_eta  c_eta * q^eta  where each exponent
// eta is an affine form in the Cartan coordinates (the constant form 1
// recovers plain powers of q).  Formally this is the group algebra of the
// additive group of affine forms: exponents add under multiplication and,
// because that group is torsion-free and totally ordered, the algebra has
// no zero divisors — so the fractions below form a field and equality is
// decidable by cross multiplication.  Each distinct exponent plays the
// role of one ledger entry q^{AffineForm}; the ledger of an element is
// simply the set of exponents it mentions (see exponents()).
class QLaurent {
 public:
  QLaurent() = default;
  explicit QLaurent(int rank) : rank_(rank) {}

  static QLaurent zero(int rank) { return QLaurent(rank); }
  static QLaurent one(int rank) { return q_power(AffineForm(rank)); }
  static QLaurent constant(int rank, const Rat& c) {
    QLaurent x(rank);
    if (!stepalg::is_zero(c)) x.terms_[AffineForm(rank)] = c;
    return x;
  }
  // q^eta with an arbitrary affine-form exponent.
  static QLaurent q_power(const AffineForm& eta, Rat coeff = 1) {
    QLaurent x(eta.rank());
    if (!stepalg::is_zero(coeff)) x.terms_[eta] = std::move(coeff);
    return x;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<AffineForm, Rat>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  std::vector<AffineForm> exponents() const {
    std::vector<AffineForm> es;
    es.reserve(terms_.size());
    for (const auto& [e, c] : terms_) es.push_back(e);
    return es;
  }

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
  friend QLaurent operator-(QLaurent a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
  }
  QLaurent& operator*=(const QLaurent& o) { return *this = *this * o; }
  QLaurent& operator*=(const Rat& c);

  friend bool operator==(const QLaurent& a, const QLaurent& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

  // tau_mu on every exponent.
  QLaurent shifted(const RootSystem& rs, const Weight& mu) const;

  // Specializes q -> numeric value is deliberately not provided: the
  // classical limit is a separate scalar type, not an evaluation.

  friend std::ostream& operator<<(std::ostream& os, const QLaurent& x);

 private:
  int rank_ = 0;
  std::map<AffineForm, Rat> terms_;
};

// Field of fractions of QLaurent.  Values are kept with a monic-like
// normalized denominator (leading exponent shifted to zero, leading
// coefficient one) so equal values usually compare structurally; the
// equality operator falls back to cross multiplication, which is exact.
class QScalar {
 public:
  QScalar() = default;
  explicit QScalar(int rank)
      : num_(QLaurent::zero(rank)), den_(QLaurent::one(rank)) {}
  /* implicit */ QScalar(QLaurent num)
      : num_(std::move(num)), den_(QLaurent::one(num_.rank())) {}
  QScalar(QLaurent num, QLaurent den);

  static QScalar zero(int rank) { return QScalar(rank); }
  static QScalar one(int rank) { return QScalar(QLaurent::one(rank)); }
  static QScalar constant(int rank, const Rat& c) {
    return QScalar(QLaurent::constant(rank, c));
  }
  static QScalar q_power(const AffineForm& eta) {
    return QScalar(QLaurent::q_power(eta));
  }

  int rank() const { return num_.rank(); }
  bool is_zero() const { return num_.is_zero(); }
  const QLaurent& numerator() const { return num_; }
  const QLaurent& denominator() const { return den_; }

  QScalar& operator+=(const QScalar& o);
  QScalar& operator-=(const QScalar& o);
  QScalar& operator*=(const QScalar& o);
  friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
  friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
  friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
  friend QScalar operator-(QScalar a) {
    a.num_ = -a.num_;
    return a;
  }
  QScalar& operator*=(const Rat& c);
  friend QScalar operator*(QScalar a, const Rat& c) { return a *= c; }
  friend QScalar operator*(const Rat& c, QScalar a) { return a *= c; }

  QScalar inv() const;  // throws std::domain_error on zero
  friend QScalar operator/(QScalar a, const QScalar& b) { return a *= b.inv(); }

  friend bool operator==(const QScalar& a, const QScalar& b);
  friend bool operator!=(const QScalar& a, const QScalar& b) { return !(a == b); }

  QScalar shifted(const RootSystem& rs, const Weight& mu) const;

  friend std::ostream& operator<<(std::ostream& os, const QScalar& s);

 private:
  void normalize();
  QLaurent num_, den_;
};

// [eta]_q = (q^eta - q^{-eta}) / (q - q^{-1}).
QScalar q_bracket(const AffineForm& eta);

}  // namespace stepalg
