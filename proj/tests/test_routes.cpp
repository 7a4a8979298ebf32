#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "stepalg/generators.hpp"
#include "stepalg/route_calculus.hpp"

using namespace stepalg;

namespace {

GradedModule diamond(const RootSystem& rs) {
  GradedModule m;
  m.labels = {"v0", "v1", "v2", "v3"};
  m.weights = {Weight::zero(rs.dim()), rs.simple_root(0), rs.simple_root(1),
               rs.simple_root(0) + rs.simple_root(1)};
  m.action[0][{1, 0}] = 1;
  m.action[1][{2, 0}] = 1;
  m.action[1][{3, 1}] = 1;
  m.action[0][{3, 2}] = -1;
  return m;
}

// The three-node chain of the full complement class for sl(4) over the
// subalgebra on the first two nodes.
ComplementModel chain_model() {
  auto ctx = AlgebraContext::make(levi_pair(build_root_system('A', 3), {1, 2}));
  return build_complement_model(ctx, 0, Side::minus);
}

AffineForm aff(std::vector<long> lin, long cst) {
  std::vector<Rat> l;
  l.reserve(lin.size());
  for (long v : lin) l.emplace_back(v);
  return AffineForm(std::move(l), Rat(cst));
}

std::vector<std::vector<Route>> chain_members(const std::vector<Chain>& cs) {
  std::vector<std::vector<Route>> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(c.members);
  return out;
}

}  // namespace

TEST_CASE("eta values of the chain nodes") {
  ComplementModel m = chain_model();
  const RootSystem& rs = m.context()->roots();
  const HasseDiagram& d = m.diagram();

  CHECK(node_eta(d, rs, 0) == aff({0, 0, 1}, 0));
  CHECK(node_eta(d, rs, 1) == aff({0, 1, 1}, 1));
  CHECK(node_eta(d, rs, 2) == aff({1, 1, 1}, 2));
}

TEST_CASE("derivative of a route with respect to a simple pair") {
  ComplementModel m = chain_model();
  const RootSystem& rs = m.context()->roots();
  const HasseDiagram& d = m.diagram();

  // The lower arrow (1, 0) hits the (1,0) factor of the full route: the
  // route splits and the bracket of the arrow's root appears.
  auto der = partial_op<CartanScalar>(d, rs, 1, 0, Route{{2, 1, 0}});
  REQUIRE(der.terms.size() == 1);
  auto key = std::make_pair(Route{{2, 1}}, Route{{0}});
  REQUIRE(der.terms.count(key) == 1);
  CHECK(der.terms.at(key) == CartanScalar::from_affine(aff({0, 1, 0}, 0)));

  // A route that skips the lower node: the upper insertion case.
  auto der2 = partial_op<CartanScalar>(d, rs, 1, 0, Route{{2, 0}});
  REQUIRE(der2.terms.size() == 1);
  REQUIRE(der2.terms.count(key) == 1);
  CHECK(der2.terms.at(key) == CartanScalar::one(3));  // classical q-power

  // Routes not involving the pair at all have zero derivative.
  CHECK(partial_op<CartanScalar>(d, rs, 1, 0, Route{{2, 1}}).is_zero());
  CHECK(partial_op<CartanScalar>(d, rs, 1, 0, Route{{2}}).is_zero());

  // Quantum mode: the split term carries the q-bracket of the same
  // argument, the insertion terms carry pure q-powers.
  auto qder = partial_op<QScalar>(d, rs, 1, 0, Route{{2, 1, 0}});
  REQUIRE(qder.terms.count(key) == 1);
  CHECK(qder.terms.at(key) == q_bracket(aff({0, 1, 0}, 0)));
  auto qder2 = partial_op<QScalar>(d, rs, 1, 0, Route{{2, 0}});
  CHECK(qder2.terms.at(key) == QScalar::q_power(aff({0, 1, 0}, 0)));
}

TEST_CASE("localized action: the boundary term at the minimal node") {
  ComplementModel m = chain_model();
  const RootSystem& rs = m.context()->roots();
  const HasseDiagram& d = m.diagram();

  // nabla on the zero-length route at l itself.
  auto nab = nabla_op<CartanScalar>(d, rs, 1, 0, Route{{1}});
  auto key = std::make_pair(Route{{1}}, Route{{0}});
  REQUIRE(nab.terms.size() == 1);
  CHECK(nab.terms.at(key) == -CartanScalar::one(3));

  auto qnab = nabla_op<QScalar>(d, rs, 1, 0, Route{{1}});
  // eta_1 - eta_0 = h2 + 1.
  CHECK(qnab.terms.at(key) == -QScalar::q_power(-aff({0, 1, 0}, 1)));

  // The derivative part of nabla is the partial, retranslated by the
  // minimal node of the route.
  auto nab3 = nabla_op<CartanScalar>(d, rs, 1, 0, Route{{2, 1, 0}});
  auto key3 = std::make_pair(Route{{2, 1}}, Route{{0}});
  REQUIRE(nab3.terms.size() == 1);
  CHECK(nab3.terms.at(key3) == CartanScalar::from_affine(aff({0, 1, 0}, 1)));
}

TEST_CASE("tilde normalization multiplies the step factors") {
  ComplementModel m = chain_model();
  const RootSystem& rs = m.context()->roots();
  const HasseDiagram& d = m.diagram();

  CHECK(tilde_factor<CartanScalar>(d, rs, Route{{2}}) == CartanScalar::one(3));
  CHECK(tilde_factor<CartanScalar>(d, rs, Route{{2, 1}}) ==
        CartanScalar::inverse_affine(aff({1, 0, 0}, 1)));
  CHECK(tilde_factor<CartanScalar>(d, rs, Route{{2, 1, 0}}) ==
        CartanScalar::inverse_affine(aff({1, 0, 0}, 1)) *
            CartanScalar::inverse_affine(aff({1, 1, 0}, 2)));

  CHECK(tilde_factor<QScalar>(d, rs, Route{{2, 1}}) ==
        b_factor_quantum(aff({1, 0, 0}, 1)));
}

TEST_CASE("chain classification partitions the routes of a chain") {
  ComplementModel m = chain_model();
  const HasseDiagram& d = m.diagram();

  // Lower pair (1, 0): one spectator, one boundary chain, one full chain.
  auto cs = classify_chains(d, 1, 0, 2);
  REQUIRE(cs.size() == 2);
  auto members = chain_members(cs);
  CHECK(std::count(members.begin(), members.end(),
                   std::vector<Route>{Route{{2}}}) == 1);
  CHECK(std::count(members.begin(), members.end(),
                   std::vector<Route>{Route{{2, 0}}, Route{{2, 1}},
                                      Route{{2, 1, 0}}}) == 1);
  for (const auto& c : cs) {
    if (c.members.size() == 1) CHECK(c.kind == 1);
    if (c.members.size() == 3) CHECK(c.kind == 3);
  }

  auto cs_top_l = classify_chains(d, 1, 0, 1);
  REQUIRE(cs_top_l.size() == 1);
  CHECK(cs_top_l[0].kind == 2);
  CHECK(cs_top_l[0].members ==
        std::vector<Route>{Route{{1}}, Route{{1, 0}}});

  auto cs_top_r = classify_chains(d, 1, 0, 0);
  REQUIRE(cs_top_r.size() == 1);
  CHECK(cs_top_r[0].kind == 1);

  // Upper pair (2, 1): two boundary chains from the top.
  auto cs2 = classify_chains(d, 2, 1, 2);
  REQUIRE(cs2.size() == 2);
  for (const auto& c : cs2) CHECK(c.kind == 2);
  auto members2 = chain_members(cs2);
  CHECK(std::count(members2.begin(), members2.end(),
                   std::vector<Route>{Route{{2}}, Route{{2, 1}}}) == 1);
  CHECK(std::count(members2.begin(), members2.end(),
                   std::vector<Route>{Route{{2, 0}}, Route{{2, 1, 0}}}) == 1);

  CHECK_THROWS_AS(classify_chains(d, 0, 1, 2), std::invalid_argument);
}

TEST_CASE("chains on a diamond include unmergeable spectators") {
  RootSystem rs = build_root_system('A', 2);
  HasseDiagram d = build_diagram(diamond(rs));

  auto cs = classify_chains(d, 1, 0, 3);
  // (3) and (3,2) never touch the pair; (3,2,0) touches r but the union
  // passes through the incomparable node 1, so it is killed alone too.
  auto members = chain_members(cs);
  CHECK(std::count(members.begin(), members.end(),
                   std::vector<Route>{Route{{3}}}) == 1);
  CHECK(std::count(members.begin(), members.end(),
                   std::vector<Route>{Route{{3, 2}}}) == 1);
  CHECK(std::count(members.begin(), members.end(),
                   std::vector<Route>{Route{{3, 2, 0}}}) == 1);
  CHECK(std::count(members.begin(), members.end(),
                   std::vector<Route>{Route{{3, 0}}, Route{{3, 1}},
                                      Route{{3, 1, 0}}}) == 1);
  REQUIRE(cs.size() == 4);

  // Every chain is one orbit: covering all routes from the top, no route
  // in two chains.
  std::vector<Route> covered;
  for (const auto& c : cs)
    covered.insert(covered.end(), c.members.begin(), c.members.end());
  std::sort(covered.begin(), covered.end());
  CHECK(std::adjacent_find(covered.begin(), covered.end()) == covered.end());
  std::vector<Route> all = enumerate_routes(d, 3);
  std::sort(all.begin(), all.end());
  CHECK(covered == all);
}

TEST_CASE("every chain is killed by its pair, in both modes") {
  // The real three-node chain ...
  {
    ComplementModel m = chain_model();
    const RootSystem& rs = m.context()->roots();
    const HasseDiagram& d = m.diagram();
    for (int ai : m.context()->levi().levi_indices())
      for (const SimplePair& p : simple_pairs(d, ai))
        for (int top = 0; top < d.size(); ++top)
          for (const Chain& c : classify_chains(d, p.l, p.r, top)) {
            CAPTURE(p.l);
            CAPTURE(p.r);
            CAPTURE(top);
            CHECK(verify_chain_killed<CartanScalar>(d, rs, c));
            CHECK(verify_chain_killed<QScalar>(d, rs, c));
          }
  }
  // ... and the hand-built diamond with consistent weights.
  {
    RootSystem rs = build_root_system('A', 2);
    HasseDiagram d = build_diagram(diamond(rs));
    for (int ai = 0; ai < 2; ++ai)
      for (const SimplePair& p : simple_pairs(d, ai))
        for (int top = 0; top < d.size(); ++top)
          for (const Chain& c : classify_chains(d, p.l, p.r, top)) {
            CAPTURE(p.l);
            CAPTURE(p.r);
            CAPTURE(top);
            CHECK(verify_chain_killed<CartanScalar>(d, rs, c));
            CHECK(verify_chain_killed<QScalar>(d, rs, c));
          }
  }
}
