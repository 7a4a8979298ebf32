#pragma once

#include <vector>
#include <ostream>
#include <stdexcept>

#include "stepalg/rational.hpp"

namespace stepalg {

// A weight of gl_{n+1}/sl_{n+1} written in the orthonormal epsilon
// coordinates, i.e. a vector (c_1, ..., c_{n+1}) standing for
// sum_k c_k * eps_k.  The invariant pairing is the plain dot product,
// which restricts to the trace form on sl and gives (alpha, alpha) = 2
// for every root.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  static Weight zero(std::size_t dim) { return Weight(std::vector<Rat>(dim)); }

  std::size_t dim() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (!stepalg::is_zero(c)) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_dim(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Weight& operator*=(const Rat& c) {
    for (auto& x : coords_) x *= c;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Weight a, const Rat& c) { return a *= c; }
  friend Weight operator*(const Rat& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) {
    for (auto& x : a.coords_) x = -x;
    return a;
  }

  // Invariant pairing (dot product in epsilon coordinates).
  friend Rat dot(const Weight& a, const Weight& b) {
    a.check_dim(b);
    Rat s = 0;
    for (std::size_t i = 0; i < a.coords_.size(); ++i)
      s += a.coords_[i] * b.coords_[i];
    return s;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  // Lexicographic order on coordinates; used for deterministic tie-breaks.
  friend bool operator<(const Weight& a, const Weight& b) {
    a.check_dim(b);
    for (std::size_t i = 0; i < a.coords_.size(); ++i) {
      int c = cmp(a.coords_[i], b.coords_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
    os << '(';
    for (std::size_t i = 0; i < w.coords_.size(); ++i) {
      if (i) os << ',';
      os << w.coords_[i];
    }
    return os << ')';
  }

 private:
  void check_dim(const Weight& o) const {
    if (coords_.size() != o.coords_.size())
      throw std::invalid_argument("weight dimension mismatch");
  }
  std::vector<Rat> coords_;
};

}  // namespace stepalg
