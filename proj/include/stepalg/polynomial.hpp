#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "stepalg/affine_form.hpp"
#include "stepalg/rational.hpp"

namespace stepalg {

// Sparse multivariate polynomial with exact rational coefficients over
// the Cartan coordinates h_{alpha_1}, ..., h_{alpha_n}.  Monomials are
// dense exponent vectors of fixed length n; the zero polynomial is the
// empty map.  Degrees and variable counts stay tiny in this library, so
// a std::map keyed by exponent vector is both canonical and fast enough.
class Poly {
 public:
  using Mono = std::vector<int>;

  Poly() = default;
  explicit Poly(int rank) : rank_(rank) {}

  static Poly constant(int rank, Rat c) {
    Poly p(rank);
    if (!stepalg::is_zero(c)) p.terms_[Mono(static_cast<std::size_t>(rank), 0)] = std::move(c);
    return p;
  }
  static Poly variable(int rank, int i, int power = 1) {
    Poly p(rank);
    Mono m(static_cast<std::size_t>(rank), 0);
    m.at(static_cast<std::size_t>(i)) = power;
    p.terms_[std::move(m)] = 1;
    return p;
  }
  static Poly from_affine(const AffineForm& f) {
    Poly p(f.rank());
    for (int i = 0; i < f.rank(); ++i) {
      const Rat& c = f.linear()[static_cast<std::size_t>(i)];
      if (!stepalg::is_zero(c)) p += variable(f.rank(), i) * c;
    }
    if (!stepalg::is_zero(f.constant_term()))
      p += constant(f.rank(), f.constant_term());
    return p;
  }

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Rat>& terms() const { return terms_; }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Rat constant_value() const {
    if (terms_.empty()) return 0;
    Mono z(static_cast<std::size_t>(rank_), 0);
    auto it = terms_.find(z);
    return it == terms_.end() ? Rat(0) : it->second;
  }
  int total_degree() const;  // -1 for the zero polynomial

  // nullopt unless the polynomial has total degree <= 1.
  std::optional<AffineForm> as_affine() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  friend bool operator<(const Poly& a, const Poly& b) {
    if (a.rank_ != b.rank_) return a.rank_ < b.rank_;
    return a.terms_ < b.terms_;
  }

  // Substitution h_i -> h_i + shift[i] for every variable; implements the
  // translation action on coefficients.
  Poly shifted(const std::vector<Rat>& shift) const;

  Rat evaluate(const std::vector<Rat>& vals) const;

  // Exact division by an affine form; nullopt if not divisible.
  std::optional<Poly> divide_by_affine(const AffineForm& f) const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p);

  static int total_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }

 private:
  int rank_ = 0;
  std::map<Mono, Rat> terms_;
};

}  // namespace stepalg
