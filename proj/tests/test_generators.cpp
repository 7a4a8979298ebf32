#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stepalg/generators.hpp"

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

TEST_CASE("complement models realize the classes on both sides") {
  auto ctx = make_ctx(2, {1});
  ComplementModel minus = build_complement_model(ctx, 0, Side::minus);
  ComplementModel plus = build_complement_model(ctx, 0, Side::plus);
  const RootSystem& rs = ctx->roots();

  REQUIRE(minus.node_count() == 2);
  REQUIRE(plus.node_count() == 2);
  CHECK(minus.side() == Side::minus);
  CHECK(minus.class_index() == 0);
  CHECK(minus.quasi_class().roots.size() == 2);

  // Node weights ascend; the minus side carries +mu, the plus side -mu.
  CHECK(minus.node_weight(0) == rs.simple_root(1));
  CHECK(minus.node_weight(1) == rs.root_eps(0, 2));
  CHECK(plus.node_weight(0) == -rs.root_eps(0, 2));
  CHECK(plus.node_weight(1) == -rs.simple_root(1));
  CHECK(minus.node_label(1) == "E[1,3]");
  CHECK(plus.node_label(1) == "E[3,2]");

  // Dual vectors and their reverse lookup.
  CHECK(minus.psi(1) == ctx->generator(ctx->id_of_label("E[3,1]")));
  CHECK(plus.psi(1) == ctx->generator(ctx->id_of_label("E[2,3]")));
  CHECK(minus.node_of_psi(minus.psi_id(0)) == 0);
  CHECK(minus.node_of_psi(ctx->id_of_label("E[1,2]")) == -1);

  // phi entries: matrix entry times the lowering generator.
  auto entry = minus.phi_entry(1, 0);
  REQUIRE(entry.has_value());
  CHECK(entry->first == 1);
  CHECK(entry->second == ctx->id_of_label("E[2,1]"));
  CHECK(minus.phi(1, 0) == ctx->generator(ctx->id_of_label("E[2,1]")));
  CHECK_FALSE(minus.phi_entry(0, 1).has_value());
  CHECK(minus.phi(0, 1).is_zero());

  auto pentry = plus.phi_entry(1, 0);
  REQUIRE(pentry.has_value());
  CHECK(pentry->first == -1);

  CHECK_THROWS_AS(build_complement_model(ctx, 5, Side::minus),
                  std::out_of_range);
  CHECK(all_complement_models(ctx).size() == 2);
  CHECK(all_complement_models(make_ctx(3, {2})).size() == 6);
}

TEST_CASE("normalized generators of sl(3) match the hand computation") {
  auto ctx = make_ctx(2, {1});
  ComplementModel minus = build_complement_model(ctx, 0, Side::minus);
  ComplementModel plus = build_complement_model(ctx, 0, Side::plus);

  int e21 = ctx->id_of_label("E[2,1]");
  int e31 = ctx->id_of_label("E[3,1]");
  int e32 = ctx->id_of_label("E[3,2]");
  int e13 = ctx->id_of_label("E[1,3]");
  int e23 = ctx->id_of_label("E[2,3]");

  // Bottom nodes carry only the trivial route: z = psi.
  MickelssonGenerator bottom = canonical_element(minus, 0);
  CHECK(bottom.element == ctx->generator(e32));
  REQUIRE(bottom.routes.size() == 1);
  CHECK(bottom.routes[0].first == Route{{0}});
  CHECK(bottom.routes[0].second == CartanScalar::one(2));

  // Top node, minus side: z = E31 + E21 E32 / (h1 + 1).
  MickelssonGenerator zc = canonical_element(minus, 1);
  AlgebraElement expected = ctx->generator(e31) +
                            ctx->word_element({e21, e32}) * inv_aff({1, 0}, 1);
  CHECK(zc.element == expected);
  REQUIRE(zc.routes.size() == 2);
  CHECK(zc.routes[0].first == Route{{1}});
  CHECK(zc.routes[0].second == CartanScalar::one(2));
  CHECK(zc.routes[1].first == Route{{1, 0}});
  CHECK(zc.routes[1].second == inv_aff({1, 0}, 1));

  // Top node, plus side: z = E23 - E21 E13 / (h1 + 1).
  MickelssonGenerator zp = canonical_element(plus, 1);
  AlgebraElement pexpected =
      ctx->generator(e23) +
      ctx->word_element({e21, e13}) * (inv_aff({1, 0}, 1) * rat(-1));
  CHECK(zp.element == pexpected);
  REQUIRE(zp.routes.size() == 2);
  CHECK(zp.routes[1].second == inv_aff({1, 0}, 1) * rat(-1));

  // The closed formula reproduces the same data on its own code path.
  for (const ComplementModel* m : {&minus, &plus})
    for (int node = 0; node < m->node_count(); ++node) {
      MickelssonGenerator a = canonical_element(*m, node);
      MickelssonGenerator b = levi_generator(*m, node);
      CHECK(a.element == b.element);
      CHECK(a.routes == b.routes);
    }
}

TEST_CASE("construction agreement on the larger pairs") {
  for (auto [rank, levi] :
       std::vector<std::pair<int, std::vector<int>>>{{3, {1, 2}}, {3, {2}}}) {
    auto ctx = make_ctx(rank, levi);
    for (const ComplementModel& m : all_complement_models(ctx))
      for (int node = 0; node < m.node_count(); ++node) {
        MickelssonGenerator a = canonical_element(m, node);
        MickelssonGenerator b = levi_generator(m, node);
        CAPTURE(rank);
        CAPTURE(node);
        CHECK(a.element == b.element);
        REQUIRE(a.routes.size() == b.routes.size());
        for (std::size_t t = 0; t < a.routes.size(); ++t) {
          CHECK(a.routes[t].first == b.routes[t].first);
          CHECK(a.routes[t].second == b.routes[t].second);
        }
      }
  }
}

TEST_CASE("generators are invariant; corrupted elements are caught") {
  auto ctx = make_ctx(3, {1, 2});
  for (const ComplementModel& m : all_complement_models(ctx))
    for (int node = 0; node < m.node_count(); ++node) {
      MickelssonGenerator z = canonical_element(m, node);
      CHECK_FALSE(verify_invariance(z.element).has_value());
    }

  // The bare dual vector of a non-bottom node is not invariant.
  ComplementModel m = build_complement_model(ctx, 0, Side::minus);
  auto witness = verify_invariance(m.psi(2));
  REQUIRE(witness.has_value());
  CHECK_FALSE(witness->remainder.is_zero());
  CHECK(ctx->levi().is_g_positive_root(witness->alpha));
}

TEST_CASE("psi products factor through the bare route words") {
  auto ctx = make_ctx(3, {1, 2});
  ComplementModel m = build_complement_model(ctx, 0, Side::minus);
  for (const Route& r : enumerate_routes(m.diagram(), 2)) {
    AlgebraElement direct = p_psi(m, r);
    Rat pi = route_pi_product(m, r);
    CHECK(direct == route_word_element(m, r) * pi);
  }
  // Known entries: both steps of the full chain have entry one on the
  // minus side, so pi is one.
  CHECK(route_pi_product(m, Route{{2, 1, 0}}) == 1);
  CHECK(p_phi(m, Route{{2}}) == ctx->one_element());
}

TEST_CASE("nonzero phi entries only point down the diagram") {
  for (auto [rank, levi] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1}}, {3, {1, 2}}, {3, {2}}}) {
    auto ctx = make_ctx(rank, levi);
    for (const ComplementModel& m : all_complement_models(ctx))
      for (int i = 0; i < m.node_count(); ++i)
        for (int j = 0; j < m.node_count(); ++j) {
          if (i == j) continue;
          if (m.phi_entry(i, j).has_value()) CHECK(m.diagram().above(i, j));
        }
  }
}

TEST_CASE("intertwining of the localized action with raising operators") {
  auto ctx = make_ctx(3, {1, 2});
  for (const ComplementModel& m : all_complement_models(ctx))
    for (int ai : ctx->levi().levi_indices())
      for (int top = 0; top < m.node_count(); ++top)
        for (const Route& r : enumerate_routes(m.diagram(), top)) {
          CAPTURE(ai);
          CAPTURE(top);
          CHECK(intertwine_check(m, ai, r));
          auto [lhs, rhs] = intertwine_sides(m, ai, r);
          CHECK(lhs == rhs);
        }
}

TEST_CASE("typed structure constants for both sides") {
  auto ctx = make_ctx(2, {1});
  const RootSystem& rs = ctx->roots();
  const Weight alpha = rs.simple_root(0);
  CHECK(structure_n(*ctx, Side::minus, alpha, rs.simple_root(1)) == 1);
  CHECK(structure_n(*ctx, Side::plus, alpha, rs.root_eps(0, 2)) == -1);
  CHECK(structure_n(*ctx, Side::minus, alpha, rs.root_eps(0, 2)) == 0);
}

TEST_CASE("leading terms are the dual vectors, distinct per node") {
  for (auto [rank, levi] : std::vector<std::pair<int, std::vector<int>>>{
           {2, {1}}, {3, {1, 2}}, {3, {2}}}) {
    auto ctx = make_ctx(rank, levi);
    for (const ComplementModel& m : all_complement_models(ctx)) {
      std::vector<MickelssonGenerator> gens;
      for (int node = 0; node < m.node_count(); ++node)
        gens.push_back(canonical_element(m, node));
      CHECK(pbw_leading_check(m, gens));

      // Under the model's order the correction terms stay below psi.
      auto less = complement_node_order(m);
      for (int node = 0; node < m.node_count(); ++node) {
        PBWMonomial psi_mono{{m.psi_id(node), 1}};
        for (const auto& [mono, coeff] : gens[static_cast<std::size_t>(node)]
                                             .element.terms()) {
          if (mono == psi_mono) continue;
          CHECK(less(mono, psi_mono));
        }
      }
    }
  }

  // A family whose element leads with the wrong dual vector fails.
  auto ctx = make_ctx(2, {1});
  ComplementModel m = build_complement_model(ctx, 0, Side::minus);
  MickelssonGenerator good = canonical_element(m, 0);
  MickelssonGenerator bad = canonical_element(m, 0);
  bad.node = 1;
  CHECK_FALSE(pbw_leading_check(m, {good, bad}));
}
