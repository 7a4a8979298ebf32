#pragma once

#include <optional>

#include "stepalg/envelope.hpp"
#include "stepalg/route_calculus.hpp"

namespace stepalg {

enum class Side { minus, plus };
const char* to_string(Side s);

// One irreducible constituent of the complement, realized inside the
// ambient algebra.  The diagram is attached to the span of the root
// vectors e_{nu_i} (node weights nu = +mu on the minus side, -mu on the
// plus side, mu running over one quasi-root class); the dual basis
// psi_i = e_{-nu_i} provides the vectors the step-algebra generators
// normalize.  phi entries combine the raising matrix of the realization
// with the matching lowering generator f_beta of the subalgebra.
class ComplementModel {
 public:
  ComplementModel(std::shared_ptr<const AlgebraContext> ctx, int class_index, Side side);

  const std::shared_ptr<const AlgebraContext>& context() const { return ctx_; }
  Side side() const { return side_; }
  int class_index() const { return class_index_; }
  const QuasiRootClass& quasi_class() const;
  const HasseDiagram& diagram() const { return diagram_; }
  int node_count() const { return diagram_.size(); }

  const Weight& node_weight(int node) const { return diagram_.weight(node); }
  const std::string& node_label(int node) const { return diagram_.label(node); }
  int psi_id(int node) const { return psi_ids_.at(static_cast<std::size_t>(node)); }
  AlgebraElement psi(int node) const { return ctx_->generator(psi_id(node)); }
  // Node whose dual vector is the given generator id; -1 if none.
  int node_of_psi(int id) const;

  // phi_{ij} = pi^beta_{ij} f_beta for beta = nu_i - nu_j a positive root
  // of the subalgebra; zero element otherwise.
  AlgebraElement phi(int i, int j) const;
  // The pair (matrix entry, f-generator id); nullopt when phi_{ij} = 0.
  std::optional<std::pair<Rat, int>> phi_entry(int i, int j) const;

 private:
  std::shared_ptr<const AlgebraContext> ctx_;
  int class_index_;
  Side side_;
  HasseDiagram diagram_;
  std::vector<int> psi_ids_;
};

ComplementModel build_complement_model(std::shared_ptr<const AlgebraContext> ctx,
                                       int class_index, Side side);
// All models of a Levi pair: classes × sides, minus before plus.
std::vector<ComplementModel> all_complement_models(
    const std::shared_ptr<const AlgebraContext>& ctx);

// phi- and psi-products of routes, evaluated in the enveloping algebra.
// p_phi multiplies the phi entries along the route (1 for length zero);
// p_psi appends the dual vector of the bottom node and reduces modulo
// the positive-side ideal.
AlgebraElement p_phi(const ComplementModel& m, const Route& r);
AlgebraElement p_psi(const ComplementModel& m, const Route& r);
// Product of the phi matrix entries along the route (0 if any step has
// none); p_phi equals the route's bare lowering word times this.
Rat route_pi_product(const ComplementModel& m, const Route& r);
AlgebraElement p_phi_psi(const ComplementModel& m, const TensorVector<CartanScalar>& t);

// The localization intertwiner identity for one raising generator and
// one route: the route-calculus side p_phipsi(sum_{(l,r)} pi_lr nabla_{l,r})
// against the direct envelope action of e_alpha.  Returns the two sides.
std::pair<AlgebraElement, AlgebraElement> intertwine_sides(
    const ComplementModel& m, int alpha_index, const Route& r);
bool intertwine_check(const ComplementModel& m, int alpha_index, const Route& r);

// A normalized generator attached to a node: the element of the double
// coset quotient together with its route expansion (route, Cartan
// coefficient of the tilde normalization).
struct MickelssonGenerator {
  int node = -1;
  AlgebraElement element;
  std::vector<std::pair<Route, CartanScalar>> routes;
};

// Route-calculus construction: psi_i plus the sum of tilde-normalized
// route products over all routes descending from the node.
MickelssonGenerator canonical_element(const ComplementModel& m, int node);

// Closed-formula construction: sum over ordered tuples of positive
// subalgebra roots whose partial sums stay inside the class, with
// structure-constant numerators and eta-difference denominators.  Kept
// independent of the route machinery so the two can be cross-checked.
MickelssonGenerator levi_generator(const ComplementModel& m, int node);

// The reduced product of the route's bare word — the lowering generator
// of each consecutive node difference, then the bottom dual vector —
// with no structure-constant prefactors.  p_psi of the same route equals
// this times the product of the route's phi matrix entries.
AlgebraElement route_word_element(const ComplementModel& m, const Route& r);

// Typed view of the constants N^±: the coefficient in
// [e_alpha, e_{sign mu}] = N e_{sign mu + alpha}; zero when the target is
// not a complement root vector.
Rat structure_n(const AlgebraContext& ctx, Side side_of_vector,
                const Weight& alpha, const Weight& mu);

struct InvarianceWitness {
  Weight alpha;
  AlgebraElement remainder;
};

// Checks that every subalgebra raising generator kills the element in
// the quotient; returns the first failing witness, if any.
std::optional<InvarianceWitness> verify_invariance(const AlgebraElement& z);

// Order on PBW monomials graded by the complement factors and refined by
// the node rank of each complement factor in the model, with a full
// lexicographic fallback; under this order a generator's leading term is
// its own psi vector.
std::function<bool(const PBWMonomial&, const PBWMonomial&)> complement_node_order(
    const ComplementModel& m);

// Leading-term triangularity for a family of generators: each leading
// term must be the node's psi with coefficient 1, and all leading
// monomials must be distinct.
bool pbw_leading_check(const ComplementModel& m,
                       const std::vector<MickelssonGenerator>& gens);

}  // namespace stepalg
