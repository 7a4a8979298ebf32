#pragma once

#include <vector>

#include "stepalg/root_system.hpp"

namespace stepalg {

// One orbit of complement positive roots under adding/subtracting simple
// roots of the Levi subalgebra — the weights of one irreducible summand
// of the complement as a module.  Roots are kept sorted ascending by
// (height, lex).
struct QuasiRootClass {
  std::vector<Weight> roots;
};

// A Levi pair g ⊂ a: the ambient A-series algebra together with the
// subset of simple roots generating the reductive subalgebra.  Derived
// data: positive roots of g, complement positive roots, and their
// partition into quasi-root classes.  The Cartan splits as
// h_g ⊕ center; we record which coordinate forms h_{alpha_i} belong to
// the subalgebra side (the Levi indices).
class LeviPair {
 public:
  LeviPair(RootSystem ambient, std::vector<int> levi_indices_1based);

  const RootSystem& ambient() const { return rs_; }
  // Sorted, 0-based simple-root indices of g.
  const std::vector<int>& levi_indices() const { return levi_; }
  bool in_levi(int simple_index_0based) const;

  const std::vector<Weight>& g_simple_roots() const { return g_simple_; }
  const std::vector<Weight>& g_positive_roots() const { return g_positive_; }
  const std::vector<Weight>& complement_positive_roots() const {
    return complement_;
  }
  const std::vector<QuasiRootClass>& classes() const { return classes_; }

  bool is_g_positive_root(const Weight& w) const;
  bool is_complement_positive_root(const Weight& w) const;

 private:
  RootSystem rs_;
  std::vector<int> levi_;        // 0-based, sorted
  std::vector<Weight> g_simple_;
  std::vector<Weight> g_positive_;
  std::vector<Weight> complement_;
  std::vector<QuasiRootClass> classes_;
};

// subset: 1-based simple-root indices, as on the command line.
LeviPair levi_pair(const RootSystem& rs, const std::vector<int>& subset_1based);

}  // namespace stepalg
