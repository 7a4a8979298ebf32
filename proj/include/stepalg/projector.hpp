#pragma once

#include "stepalg/envelope.hpp"

namespace stepalg {

// Extremal projector of the subalgebra, used as an independent oracle
// for the normalized generators: the projector applied to a dual vector
// psi_i must reproduce the route-calculus element exactly.
//
// One factor per positive subalgebra root beta has the shape
//
//     sum_k f_beta^k e_beta^k c_k(h),   c_0 = 1,
//
// with the c_k determined degree by degree from the requirement that
// e_beta annihilate the factor from the left, then translated so that
// every denominator reads h_beta + (rho, beta) + k with rho the
// half-sum of the subalgebra's positive roots.  The translation is what
// makes the *product* of the factors along a normal ordering of the
// positive roots (composite roots between their summands) a projector;
// it is trivial for simple roots.  Implemented for subalgebras of
// rank <= 2, which covers every ordering-sensitive case with at most
// one composite root.

// Coefficients c_0..c_order of the factor for beta: the recursion
// denominators are read off the straightened words e f^k e^k and then
// half-sum translated.  Throws std::invalid_argument when beta is not a
// positive root of the subalgebra.
std::vector<CartanScalar> solve_factor(const AlgebraContext& ctx, const Weight& beta,
                                       int order);

// The factor truncated at the given order, as an element with Cartan
// fraction coefficients.
AlgebraElement projector_factor_element(const std::shared_ptr<const AlgebraContext>& ctx,
                                        const Weight& beta, int order);

// Smallest K with e_beta^K a = 0 modulo the positive ideal.  The factor
// for beta truncated at that K acts exactly on a.  Throws
// std::runtime_error if the depth exceeds 64 (not locally nilpotent).
int raising_depth(const Weight& beta, const AlgebraElement& a);

// One factor applied to a reduced element, truncated at its raising
// depth (exact, see above).
AlgebraElement apply_projector_factor(const Weight& beta, const AlgebraElement& a);

// A normal ordering of the subalgebra's positive roots, and the
// predicate defining it.  Defined for subalgebras of rank <= 2.
std::vector<Weight> normal_order_g_positive(const LeviPair& lp);
bool is_normal_ordering(const LeviPair& lp, const std::vector<Weight>& order);

// The projector applied to an element of the quotient: factors in normal
// order, rightmost first.  Throws std::domain_error when the subalgebra
// has rank > 2.
AlgebraElement projector_apply(const AlgebraElement& a);
AlgebraElement projector_apply_with_order(const AlgebraElement& a,
                                          const std::vector<Weight>& order);

}  // namespace stepalg
