#include "stepalg/projector.hpp"

#include <algorithm>
#include <stdexcept>

namespace stepalg {

namespace {

CartanScalar coefficient_of(const std::map<PBWMonomial, CartanScalar>& terms,
                            const PBWMonomial& mono, int rank) {
  auto it = terms.find(mono);
  return it == terms.end() ? CartanScalar::zero(rank) : it->second;
}

std::vector<int> power_word(int e_id, int f_id, int fs, int es) {
  std::vector<int> w{e_id};
  w.insert(w.end(), static_cast<std::size_t>(fs), f_id);
  w.insert(w.end(), static_cast<std::size_t>(es), e_id);
  return w;
}

}  // namespace

std::vector<CartanScalar> solve_factor(const AlgebraContext& ctx, const Weight& beta,
                                       int order) {
  if (!ctx.levi().is_g_positive_root(beta))
    throw std::invalid_argument("solve_factor: not a positive subalgebra root");
  const int e_id = ctx.id_of_root(beta);
  const int f_id = ctx.id_of_root(-beta);
  const int rank = ctx.rank();

  // A factor solved from e f^k e^k alone is annihilated by its own
  // raising operator, but the normal-order *product* only projects when
  // each factor's argument carries the half-sum pairing (rho_g, beta):
  // for a simple root that pairing is 1 and nothing changes, for a
  // composite root the argument moves up.  The translation below adds
  // (rho_g, beta) - 1 to h_beta inside every recursion denominator.
  const RootSystem& rs = ctx.roots();
  Weight rho_g = Weight::zero(rs.dim());
  for (const Weight& b : ctx.levi().g_positive_roots()) rho_g += b;
  rho_g *= Rat(1, 2);
  const Weight mu = beta * ((dot(rho_g, beta) - 1) / 2);

  std::vector<CartanScalar> c{CartanScalar::one(rank)};
  for (int k = 1; k <= order; ++k) {
    PBWMonomial target;
    if (k > 1) target.emplace_back(f_id, k - 1);
    target.emplace_back(e_id, k);
    // Coefficient of f^{k-1} e^k in e f^k e^k (the bracket part) and in
    // e f^{k-1} e^{k-1} (the plain swap, coefficient 1).
    const CartanScalar a_k =
        coefficient_of(ctx.straighten(power_word(e_id, f_id, k, k)), target, rank)
            .shifted(rs, mu);
    const CartanScalar gamma =
        coefficient_of(ctx.straighten(power_word(e_id, f_id, k - 1, k - 1)), target, rank);
    if (!(gamma == CartanScalar::one(rank)))
      throw std::logic_error("solve_factor: unexpected swap coefficient");
    if (a_k.is_zero()) throw std::logic_error("solve_factor: singular recursion");
    c.push_back(-(c.back() * a_k.inv()));
  }
  return c;
}

AlgebraElement projector_factor_element(const std::shared_ptr<const AlgebraContext>& ctx,
                                        const Weight& beta, int order) {
  const std::vector<CartanScalar> c = solve_factor(*ctx, beta, order);
  const int e_id = ctx->id_of_root(beta);
  const int f_id = ctx->id_of_root(-beta);
  std::map<PBWMonomial, CartanScalar> terms;
  for (int k = 0; k <= order; ++k) {
    PBWMonomial mono;
    if (k > 0) {
      mono.emplace_back(f_id, k);
      mono.emplace_back(e_id, k);
    }
    terms.emplace(std::move(mono), c.at(static_cast<std::size_t>(k)));
  }
  return AlgebraElement(ctx, std::move(terms));
}

int raising_depth(const Weight& beta, const AlgebraElement& a) {
  const auto& ctx = a.context();
  const AlgebraElement e = ctx->generator(ctx->id_of_root(beta));
  AlgebraElement r = reduce_mod_jplus(a);
  int depth = 0;
  while (!r.is_zero()) {
    if (++depth > 64) throw std::runtime_error("raising_depth: no nilpotency bound");
    r = reduce_mod_jplus(multiply(e, r));
  }
  return depth;
}

AlgebraElement apply_projector_factor(const Weight& beta, const AlgebraElement& a) {
  const auto& ctx = a.context();
  const int depth = raising_depth(beta, a);
  return reduce_mod_jplus(multiply(projector_factor_element(ctx, beta, depth), a));
}

std::vector<Weight> normal_order_g_positive(const LeviPair& lp) {
  std::vector<Weight> roots = lp.g_positive_roots();
  const RootSystem& rs = lp.ambient();
  std::sort(roots.begin(), roots.end(), [&](const Weight& x, const Weight& y) {
    const Rat hx = rs.height_rat(x), hy = rs.height_rat(y);
    if (hx != hy) return hx < hy;
    return x < y;
  });
  if (roots.size() <= 2) return roots;
  if (roots.size() == 3)
    // Two simples and their sum: put the composite in the middle.
    return {roots[0], roots[2], roots[1]};
  throw std::domain_error("normal_order_g_positive: subalgebra rank > 2");
}

bool is_normal_ordering(const LeviPair& lp, const std::vector<Weight>& order) {
  const std::vector<Weight>& pos = lp.g_positive_roots();
  if (order.size() != pos.size()) return false;
  for (const Weight& b : order)
    if (!lp.is_g_positive_root(b)) return false;
  for (std::size_t p = 0; p < order.size(); ++p)
    for (std::size_t q = p + 1; q < order.size(); ++q) {
      if (order[p] == order[q]) return false;
      const Weight sum = order[p] + order[q];
      if (!lp.is_g_positive_root(sum)) continue;
      const auto it = std::find(order.begin(), order.end(), sum);
      const std::size_t s = static_cast<std::size_t>(it - order.begin());
      if (!(p < s && s < q)) return false;
    }
  return true;
}

AlgebraElement projector_apply_with_order(const AlgebraElement& a,
                                          const std::vector<Weight>& order) {
  const auto& ctx = a.context();
  if (!is_normal_ordering(ctx->levi(), order))
    throw std::invalid_argument("projector_apply: not a normal ordering");
  AlgebraElement r = reduce_mod_jplus(a);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    r = apply_projector_factor(*it, r);
  return r;
}

AlgebraElement projector_apply(const AlgebraElement& a) {
  const auto& ctx = a.context();
  if (ctx->levi().levi_indices().size() > 2)
    throw std::domain_error("projector_apply: subalgebra rank > 2");
  return projector_apply_with_order(a, normal_order_g_positive(ctx->levi()));
}

}  // namespace stepalg
