#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stepalg/weight.hpp"

namespace stepalg {

// Root data for a simple Lie algebra of type A_n (sl_{n+1}) in epsilon
// coordinates.  Simple roots are alpha_i = eps_i - eps_{i+1}; positive
// roots are eps_i - eps_j with i < j; rho is the half sum of positive
// roots.  The class also provides the expansion of a weight in the
// root-lattice span over the simple roots, which underpins both the
// Cartan-variable bookkeeping and height computation.
class RootSystem {
 public:
  static RootSystem build(char series, int rank);

  char series() const { return series_; }
  int rank() const { return rank_; }
  std::size_t dim() const { return static_cast<std::size_t>(rank_) + 1; }

  const std::vector<Weight>& simple_roots() const { return simple_; }
  const Weight& simple_root(int i) const { return simple_.at(i); }
  const std::vector<Weight>& positive_roots() const { return positive_; }
  const Weight& rho() const { return rho_; }

  bool is_positive_root(const Weight& w) const;
  bool is_root(const Weight& w) const;

  // Expansion of mu over the simple roots; requires mu to lie in the
  // rational span of the roots (coordinates summing to zero).
  std::vector<Rat> simple_coords(const Weight& mu) const;

  // Sum of the simple-root coefficients; defined for any mu in the root
  // span (may be negative or fractional).
  Rat height_rat(const Weight& mu) const;

  Weight eps(int i) const;                 // basis weight eps_i (0-based)
  Weight root_eps(int i, int j) const;     // eps_i - eps_j (0-based)

  // Matrix-unit indices (i, j), 0-based, such that the root equals
  // eps_i - eps_j; nullopt if w is not of that shape.
  std::optional<std::pair<int, int>> matrix_unit_indices(const Weight& w) const;

 private:
  char series_ = 'A';
  int rank_ = 0;
  std::vector<Weight> simple_;
  std::vector<Weight> positive_;
  Weight rho_;
};

RootSystem build_root_system(char series, int rank);

// Height of mu as a non-negative integer combination of simple roots.
// Throws std::domain_error if any coefficient is negative or fractional.
int height(const RootSystem& rs, const Weight& mu);

}  // namespace stepalg
