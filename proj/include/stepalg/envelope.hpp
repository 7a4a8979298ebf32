#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "stepalg/cartan_scalar.hpp"
#include "stepalg/levi.hpp"

namespace stepalg {

// PBW sort classes, ordered.  Monomials are sorted with negative
// subalgebra generators leftmost and positive subalgebra generators
// rightmost, so the two one-sided ideals used throughout are spanned by
// monomials with a g_minus head resp. a g_plus tail.
enum class SortClass { g_minus = 0, complement_minus = 1, complement_plus = 2, g_plus = 3 };

const char* to_string(SortClass c);

// A root vector of the ambient algebra in the matrix-unit realization:
// weight eps_row - eps_col, written E[row+1,col+1].
struct GeneratorSymbol {
  int id = -1;
  Weight weight;            // signed root
  SortClass cls{};
  int row = 0, col = 0;     // matrix-unit indices, 0-based
  std::string label;
};

// A normal-ordered product of generators: (id, power) with strictly
// ascending ids.  Cartan elements never appear here; they live in the
// coefficients.
using PBWMonomial = std::vector<std::pair<int, int>>;

// Result of a Lie bracket of two basis root vectors: at most one root
// vector plus a Cartan form.
struct BracketResult {
  int root_id = -1;  // -1 when absent
  Rat root_coeff;
  AffineForm cartan;  // zero form when absent
};

class AlgebraElement;

// Shared immutable(ish) context: the Levi pair, the generator table in
// PBW order, the bracket table derived from matrix units, and the
// straightening memo.  The memo is an idempotent cache guarded by a
// mutex; concurrent lookups of the same word insert equal values.
class AlgebraContext : public std::enable_shared_from_this<AlgebraContext> {
 public:
  static std::shared_ptr<const AlgebraContext> make(LeviPair lp);

  const LeviPair& levi() const { return lp_; }
  const RootSystem& roots() const { return lp_.ambient(); }
  int rank() const { return lp_.ambient().rank(); }

  const std::vector<GeneratorSymbol>& symbols() const { return symbols_; }
  const GeneratorSymbol& symbol(int id) const { return symbols_.at(static_cast<std::size_t>(id)); }
  // id of the generator with the given signed root; -1 if absent.
  int id_of_root(const Weight& signed_root) const;
  int id_of_label(const std::string& label) const;

  BracketResult bracket(int x, int y) const;

  // Structure constant of [e_alpha, e_mu] -> e_{mu+alpha} (signed roots);
  // zero when the bracket has no such component.
  Rat structure_constant(const Weight& alpha, const Weight& mu) const;

  AlgebraElement zero_element() const;
  AlgebraElement one_element() const;
  AlgebraElement generator(int id) const;
  AlgebraElement scalar_element(CartanScalar c) const;
  // Product of the listed generators in the given order, normal-ordered.
  AlgebraElement word_element(const std::vector<int>& ids) const;

  // Normal form of a product of generators given by ids (not necessarily
  // ordered).  Coefficients sit to the right of their monomials.
  std::map<PBWMonomial, CartanScalar> straighten(const std::vector<int>& word) const;

  Weight word_weight(const std::vector<int>& word) const;
  Weight monomial_weight(const PBWMonomial& m) const;

  // Rewrite steps performed since construction (monotone; for the
  // termination monitor in tests).
  long straighten_steps() const { return steps_; }
  static long inversions(const std::vector<int>& word);

 private:
  explicit AlgebraContext(LeviPair lp) : lp_(std::move(lp)) {}
  std::map<PBWMonomial, CartanScalar> straighten_uncached(const std::vector<int>& word) const;

  LeviPair lp_;
  std::vector<GeneratorSymbol> symbols_;
  std::map<Weight, int> by_root_;
  mutable std::mutex memo_mutex_;
  mutable std::map<std::vector<int>, std::map<PBWMonomial, CartanScalar>> memo_;
  mutable long steps_ = 0;
};

// An element of the enveloping algebra in PBW normal form: a finite sum
// of monomials with Cartan-scalar coefficients written on the right.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  AlgebraElement(std::shared_ptr<const AlgebraContext> ctx,
                 std::map<PBWMonomial, CartanScalar> terms)
      : ctx_(std::move(ctx)), terms_(std::move(terms)) {
    prune();
  }

  const std::shared_ptr<const AlgebraContext>& context() const { return ctx_; }
  const std::map<PBWMonomial, CartanScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(AlgebraElement a);

  // Right multiplication by a Cartan scalar (coefficients commute).
  AlgebraElement& operator*=(const CartanScalar& c);
  friend AlgebraElement operator*(AlgebraElement a, const CartanScalar& c) { return a *= c; }
  AlgebraElement& operator*=(const Rat& c);
  friend AlgebraElement operator*(AlgebraElement a, const Rat& c) { return a *= c; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return (a - b).is_zero();
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const AlgebraElement& a);

 private:
  void prune();
  friend AlgebraElement multiply(const AlgebraElement&, const AlgebraElement&);
  std::shared_ptr<const AlgebraContext> ctx_;
  std::map<PBWMonomial, CartanScalar> terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

// Left multiplication by e_alpha for a simple root alpha of the
// subalgebra; throws std::invalid_argument otherwise.
AlgebraElement act_raising(const Weight& alpha, const AlgebraElement& a);

// Quotient map representatives: drop monomials ending in a g_plus
// generator (the left ideal A·g_plus), resp. also those starting with a
// g_minus generator (the double coset reduction).
AlgebraElement reduce_mod_jplus(const AlgebraElement& a);
AlgebraElement double_coset_reduce(const AlgebraElement& a);

// Maximal monomial of a nonzero element under the given strict order
// ("less"); throws std::domain_error on zero input.
std::pair<PBWMonomial, CartanScalar> leading_term(
    const AlgebraElement& a,
    const std::function<bool(const PBWMonomial&, const PBWMonomial&)>& less);

// Degree-then-lex order used as the default leading-term order.
bool monomial_graded_lex_less(const PBWMonomial& a, const PBWMonomial& b);

}  // namespace stepalg
