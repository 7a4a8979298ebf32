#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stepalg/generators.hpp"
#include "stepalg/projector.hpp"

using namespace stepalg;

namespace {

std::shared_ptr<const AlgebraContext> make_ctx(int rank, std::vector<int> levi) {
  return AlgebraContext::make(levi_pair(build_root_system('A', rank), levi));
}

CartanScalar inv_aff(std::vector<long> lin, long cst) {
  std::vector<Rat> l;
  l.reserve(lin.size());
  for (long v : lin) l.emplace_back(v);
  return CartanScalar::inverse_affine(AffineForm(std::move(l), Rat(cst)));
}

}  // namespace

TEST_CASE("factor coefficients for a simple root") {
  auto ctx = make_ctx(2, {1});
  const Weight alpha = ctx->roots().simple_root(0);

  std::vector<CartanScalar> c = solve_factor(*ctx, alpha, 3);
  REQUIRE(c.size() == 4);
  CHECK(c[0].is_one());
  CHECK(c[1] == inv_aff({1, 0}, 2) * rat(-1));
  CHECK(c[2] == inv_aff({1, 0}, 2) * inv_aff({1, 0}, 3) * rat(1, 2));
  CHECK(c[3] == inv_aff({1, 0}, 2) * inv_aff({1, 0}, 3) * inv_aff({1, 0}, 4) *
                    rat(-1, 6));

  CHECK_THROWS_AS(solve_factor(*ctx, ctx->roots().simple_root(1), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_factor(*ctx, -alpha, 1), std::invalid_argument);
}

TEST_CASE("the composite-root factor carries the half-sum translation") {
  auto ctx = make_ctx(3, {1, 2});
  const RootSystem& rs = ctx->roots();

  // Simple roots of the subalgebra pair to 1 with its half-sum: plain
  // denominators h + 1 + k.
  std::vector<CartanScalar> cs = solve_factor(*ctx, rs.simple_root(0), 1);
  CHECK(cs[1] == inv_aff({1, 0, 0}, 2) * rat(-1));

  // The composite root pairs to 2: denominators h + 2 + k.
  std::vector<CartanScalar> cc = solve_factor(*ctx, rs.root_eps(0, 2), 2);
  CHECK(cc[1] == inv_aff({1, 1, 0}, 3) * rat(-1));
  CHECK(cc[2] == inv_aff({1, 1, 0}, 3) * inv_aff({1, 1, 0}, 4) * rat(1, 2));
}

TEST_CASE("factor elements and raising depth") {
  auto ctx = make_ctx(2, {1});
  const Weight alpha = ctx->roots().simple_root(0);
  int e12 = ctx->id_of_label("E[1,2]");
  int e21 = ctx->id_of_label("E[2,1]");
  int e31 = ctx->id_of_label("E[3,1]");
  int e32 = ctx->id_of_label("E[3,2]");

  AlgebraElement factor = projector_factor_element(ctx, alpha, 2);
  REQUIRE(factor.term_count() == 3);
  PBWMonomial fe{{e21, 1}, {e12, 1}};
  CHECK(factor.terms().at(fe) == inv_aff({1, 0}, 2) * rat(-1));
  PBWMonomial f2e2{{e21, 2}, {e12, 2}};
  CHECK(factor.terms().count(f2e2) == 1);

  CHECK(raising_depth(alpha, ctx->generator(e32)) == 1);
  CHECK(raising_depth(alpha, ctx->generator(e31)) == 2);
  CHECK(raising_depth(alpha, ctx->one_element()) == 1);
  CHECK(raising_depth(alpha, ctx->zero_element()) == 0);

  // One factor suffices for a rank-one subalgebra: it reproduces the
  // normalized generator from the bare dual vector.
  ComplementModel m = build_complement_model(ctx, 0, Side::minus);
  AlgebraElement projected = apply_projector_factor(alpha, ctx->generator(e31));
  CHECK(projected == canonical_element(m, 1).element);
  CHECK(apply_projector_factor(alpha, projected) == projected);
}

TEST_CASE("normal orderings of the subalgebra roots") {
  LeviPair lp = levi_pair(build_root_system('A', 3), {1, 2});
  const RootSystem& rs = lp.ambient();

  std::vector<Weight> order = normal_order_g_positive(lp);
  std::vector<Weight> expected = {rs.simple_root(1), rs.root_eps(0, 2),
                                  rs.simple_root(0)};
  CHECK(order == expected);
  CHECK(is_normal_ordering(lp, order));
  CHECK(is_normal_ordering(
      lp, {rs.simple_root(0), rs.root_eps(0, 2), rs.simple_root(1)}));
  CHECK_FALSE(is_normal_ordering(
      lp, {rs.simple_root(0), rs.simple_root(1), rs.root_eps(0, 2)}));
  CHECK_FALSE(is_normal_ordering(lp, {rs.simple_root(0)}));

  LeviPair single = levi_pair(build_root_system('A', 2), {1});
  CHECK(normal_order_g_positive(single) ==
        std::vector<Weight>{single.ambient().simple_root(0)});

  LeviPair rank3 = levi_pair(build_root_system('A', 4), {1, 2, 3});
  CHECK_THROWS_AS(normal_order_g_positive(rank3), std::domain_error);
}

TEST_CASE("projector reproduces the route construction and is idempotent") {
  for (auto [rank, levi] :
       std::vector<std::pair<int, std::vector<int>>>{{2, {1}}, {3, {1, 2}}, {3, {2}}}) {
    auto ctx = make_ctx(rank, levi);
    for (const ComplementModel& m : all_complement_models(ctx))
      for (int node = 0; node < m.node_count(); ++node) {
        MickelssonGenerator z = canonical_element(m, node);
        CAPTURE(rank);
        CAPTURE(node);
        AlgebraElement projected = projector_apply(m.psi(node));
        CHECK(projected == z.element);
        CHECK(projector_apply(z.element) == z.element);
      }
  }
}

TEST_CASE("both normal orderings give the same projector") {
  auto ctx = make_ctx(3, {1, 2});
  const RootSystem& rs = ctx->roots();
  std::vector<Weight> fwd = {rs.simple_root(1), rs.root_eps(0, 2),
                             rs.simple_root(0)};
  std::vector<Weight> rev = {rs.simple_root(0), rs.root_eps(0, 2),
                             rs.simple_root(1)};
  for (const ComplementModel& m : all_complement_models(ctx))
    for (int node = 0; node < m.node_count(); ++node)
      CHECK(projector_apply_with_order(m.psi(node), fwd) ==
            projector_apply_with_order(m.psi(node), rev));

  CHECK_THROWS_AS(
      projector_apply_with_order(ctx->one_element(),
                                 {rs.simple_root(0), rs.simple_root(1),
                                  rs.root_eps(0, 2)}),
      std::invalid_argument);

  auto big = make_ctx(4, {1, 2, 3});
  CHECK_THROWS_AS(projector_apply(big->one_element()), std::domain_error);
}
