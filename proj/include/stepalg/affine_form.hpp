#pragma once

#include <ostream>
#include <vector>

#include "stepalg/root_system.hpp"

namespace stepalg {

// An affine-linear expression in the Cartan coordinates
//
//     c_1 h_{alpha_1} + ... + c_n h_{alpha_n} + c_0
//
// over the simple-coroot basis of the ambient algebra.  These appear as
// eta-values attached to weights, as denominators of Cartan coefficients
// and as exponents of q in the quantum mode.  The translation
// tau_mu h_nu = h_nu + (nu, mu) acts on a form by bumping the constant
// term by the pairing of its linear part with mu.
class AffineForm {
 public:
  AffineForm() = default;
  explicit AffineForm(int rank) : lin_(static_cast<std::size_t>(rank)) {}
  AffineForm(std::vector<Rat> lin, Rat cst)
      : lin_(std::move(lin)), cst_(std::move(cst)) {}

  static AffineForm constant(int rank, Rat c) {
    AffineForm f(rank);
    f.cst_ = std::move(c);
    return f;
  }
  // The coordinate form h_{alpha_i} (0-based index).
  static AffineForm coordinate(int rank, int i) {
    AffineForm f(rank);
    f.lin_.at(static_cast<std::size_t>(i)) = 1;
    return f;
  }
  // h_mu expanded over the basis: h_mu = sum c_i h_{alpha_i} with
  // mu = sum c_i alpha_i (mu must lie in the root span).
  static AffineForm h_of(const RootSystem& rs, const Weight& mu) {
    return AffineForm(rs.simple_coords(mu), 0);
  }

  int rank() const { return static_cast<int>(lin_.size()); }
  const std::vector<Rat>& linear() const { return lin_; }
  const Rat& constant_term() const { return cst_; }
  bool is_constant() const {
    for (const auto& c : lin_)
      if (!stepalg::is_zero(c)) return false;
    return true;
  }
  bool is_zero() const { return is_constant() && stepalg::is_zero(cst_); }

  AffineForm& operator+=(const AffineForm& o) {
    check_rank(o);
    for (std::size_t i = 0; i < lin_.size(); ++i) lin_[i] += o.lin_[i];
    cst_ += o.cst_;
    return *this;
  }
  AffineForm& operator-=(const AffineForm& o) {
    check_rank(o);
    for (std::size_t i = 0; i < lin_.size(); ++i) lin_[i] -= o.lin_[i];
    cst_ -= o.cst_;
    return *this;
  }
  AffineForm& operator*=(const Rat& c) {
    for (auto& x : lin_) x *= c;
    cst_ *= c;
    return *this;
  }
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rat& c) { return a *= c; }
  friend AffineForm operator*(const Rat& c, AffineForm a) { return a *= c; }
  friend AffineForm operator-(AffineForm a) { return a *= Rat(-1); }

  // tau_mu shift: the linear part is untouched, the constant gains
  // sum_i c_i (alpha_i, mu).
  AffineForm shifted(const RootSystem& rs, const Weight& mu) const {
    AffineForm r = *this;
    for (std::size_t i = 0; i < lin_.size(); ++i)
      if (!stepalg::is_zero(lin_[i]))
        r.cst_ += lin_[i] * dot(rs.simple_root(static_cast<int>(i)), mu);
    return r;
  }

  // Value under an assignment h_{alpha_i} -> vals[i].
  Rat evaluate(const std::vector<Rat>& vals) const {
    Rat v = cst_;
    for (std::size_t i = 0; i < lin_.size(); ++i) v += lin_[i] * vals.at(i);
    return v;
  }

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.lin_ == b.lin_ && a.cst_ == b.cst_;
  }
  friend bool operator!=(const AffineForm& a, const AffineForm& b) {
    return !(a == b);
  }
  friend bool operator<(const AffineForm& a, const AffineForm& b) {
    if (a.lin_.size() != b.lin_.size()) return a.lin_.size() < b.lin_.size();
    for (std::size_t i = 0; i < a.lin_.size(); ++i) {
      int c = cmp(a.lin_[i], b.lin_[i]);
      if (c != 0) return c < 0;
    }
    return cmp(a.cst_, b.cst_) < 0;
  }

  // Scales the form so all coefficients are coprime integers and the
  // first nonzero one (linear part first, then constant) is positive.
  // Returns the factor the original equals: *this_old = factor * result.
  Rat make_primitive();

  friend std::ostream& operator<<(std::ostream& os, const AffineForm& f);

 private:
  void check_rank(const AffineForm& o) const {
    if (lin_.size() != o.lin_.size())
      throw std::invalid_argument("affine form rank mismatch");
  }
  std::vector<Rat> lin_;
  Rat cst_ = 0;
};

// eta_mu = h_mu + (mu, rho) - (mu, mu)/2, the standard shifted Cartan
// value attached to a weight in the root span.
AffineForm eta_form(const RootSystem& rs, const Weight& mu);

}  // namespace stepalg
