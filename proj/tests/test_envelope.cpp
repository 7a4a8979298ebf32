#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "stepalg/envelope.hpp"

using namespace stepalg;

namespace {

std::shared_ptr<const AlgebraContext> make_ctx(int rank, std::vector<int> levi) {
  return AlgebraContext::make(levi_pair(build_root_system('A', rank), levi));
}

CartanScalar affine_scalar(int /*rank*/, std::vector<long> lin, long cst) {
  std::vector<Rat> l;
  l.reserve(lin.size());
  for (long v : lin) l.emplace_back(v);
  return CartanScalar::from_affine(AffineForm(std::move(l), Rat(cst)));
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
  return multiply(a, b) - multiply(b, a);
}

}  // namespace

TEST_CASE("generator table of sl(3) with the first node as subalgebra") {
  auto ctx = make_ctx(2, {1});
  const RootSystem& rs = ctx->roots();

  REQUIRE(ctx->symbols().size() == 6);
  // Ids ascend through the sort classes.
  for (std::size_t i = 0; i + 1 < ctx->symbols().size(); ++i)
    CHECK(ctx->symbols()[i].cls <= ctx->symbols()[i + 1].cls);

  int e12 = ctx->id_of_label("E[1,2]");
  int e21 = ctx->id_of_label("E[2,1]");
  int e13 = ctx->id_of_label("E[1,3]");
  REQUIRE(e12 >= 0);
  REQUIRE(e21 >= 0);
  REQUIRE(e13 >= 0);
  CHECK(ctx->symbol(e12).cls == SortClass::g_plus);
  CHECK(ctx->symbol(e21).cls == SortClass::g_minus);
  CHECK(ctx->symbol(e13).cls == SortClass::complement_plus);
  CHECK(ctx->symbol(e12).weight == rs.simple_root(0));
  CHECK(ctx->id_of_root(rs.root_eps(1, 0)) == e21);
  CHECK(ctx->id_of_root(rs.eps(0)) == -1);
  CHECK(ctx->id_of_label("E[9,9]") == -1);

  // Bracket of a raising/lowering pair lands in the Cartan.
  BracketResult br = ctx->bracket(e12, e21);
  CHECK(br.root_id == -1);
  CHECK(br.cartan == AffineForm::coordinate(2, 0));

  // Root-root brackets give the structure constants of matrix units.
  int e23 = ctx->id_of_label("E[2,3]");
  BracketResult br2 = ctx->bracket(e12, e23);
  CHECK(br2.root_id == e13);
  CHECK(br2.root_coeff == 1);
  CHECK(br2.cartan.is_zero());

  CHECK(ctx->structure_constant(rs.simple_root(0), rs.simple_root(1)) == 1);
  CHECK(ctx->structure_constant(rs.simple_root(0), -rs.root_eps(0, 2)) == -1);
  CHECK(ctx->structure_constant(rs.simple_root(0), rs.simple_root(0)) == 0);
}

TEST_CASE("straightening matches the hand-worked sl(3) products") {
  auto ctx = make_ctx(2, {1});
  int e12 = ctx->id_of_label("E[1,2]");
  int e21 = ctx->id_of_label("E[2,1]");
  int e13 = ctx->id_of_label("E[1,3]");
  int e23 = ctx->id_of_label("E[2,3]");

  // e12 e21 = e21 e12 + h_{alpha_1}.
  AlgebraElement lhs = multiply(ctx->generator(e12), ctx->generator(e21));
  AlgebraElement rhs = ctx->word_element({e21, e12}) +
                       ctx->scalar_element(affine_scalar(2, {1, 0}, 0));
  CHECK(lhs == rhs);

  // Left action of the subalgebra raising generator.
  AlgebraElement acted = act_raising(ctx->roots().simple_root(0), ctx->generator(e23));
  CHECK(acted == ctx->generator(e13) + ctx->word_element({e23, e12}));
  CHECK(reduce_mod_jplus(acted) == ctx->generator(e13));
  CHECK_THROWS_AS(act_raising(ctx->roots().simple_root(1), ctx->generator(e23)),
                  std::invalid_argument);

  // Anything ending in a subalgebra raising generator dies in the quotient.
  for (int x : {e21, e13, e23})
    CHECK(reduce_mod_jplus(multiply(ctx->generator(x), ctx->generator(e12))).is_zero());

  // The double-coset reduction also drops lowering heads but keeps scalars.
  AlgebraElement mixed = lhs;  // e21 e12 + h
  AlgebraElement dc = double_coset_reduce(mixed);
  CHECK(dc == ctx->scalar_element(affine_scalar(2, {1, 0}, 0)));

  // Scalars cross monomials through the translation by the weight.
  AlgebraElement crossed =
      multiply(ctx->scalar_element(affine_scalar(2, {1, 0}, 0)), ctx->generator(e21));
  CHECK(crossed == ctx->generator(e21) * affine_scalar(2, {1, 0}, -2));

  std::ostringstream os;
  os << lhs;
  CHECK(os.str() == "(h1) + E[2,1]E[1,2]");
  std::ostringstream zs;
  zs << ctx->zero_element();
  CHECK(zs.str() == "0");
}

TEST_CASE("straightening is memoized and deterministic") {
  auto ctx = make_ctx(2, {1});
  int e12 = ctx->id_of_label("E[1,2]");
  int e21 = ctx->id_of_label("E[2,1]");
  int e31 = ctx->id_of_label("E[3,1]");

  std::vector<int> word = {e12, e31, e21, e12};
  auto first = ctx->straighten(word);
  long steps_after_first = ctx->straighten_steps();
  auto second = ctx->straighten(word);
  CHECK(first == second);
  CHECK(ctx->straighten_steps() == steps_after_first);

  CHECK(AlgebraContext::inversions({3, 2, 1}) == 3);
  CHECK(AlgebraContext::inversions({1, 2, 3}) == 0);
  CHECK(ctx->word_weight(word) ==
        ctx->roots().simple_root(0) - ctx->roots().root_eps(0, 2));
}

TEST_CASE("weights of words and monomials agree with the table") {
  auto ctx = make_ctx(3, {1, 2});
  int e41 = ctx->id_of_label("E[4,1]");
  int e21 = ctx->id_of_label("E[2,1]");
  PBWMonomial m{{std::min(e21, e41), 1}, {std::max(e21, e41), 1}};
  CHECK(ctx->monomial_weight(m) ==
        ctx->symbol(e41).weight + ctx->symbol(e21).weight);
}

TEST_CASE("leading terms under the graded lexicographic order") {
  auto ctx = make_ctx(2, {1});
  int e12 = ctx->id_of_label("E[1,2]");
  int e21 = ctx->id_of_label("E[2,1]");
  AlgebraElement x = multiply(ctx->generator(e12), ctx->generator(e21));
  auto [mono, coeff] = leading_term(x, monomial_graded_lex_less);
  PBWMonomial expected{{e21, 1}, {e12, 1}};
  CHECK(mono == expected);
  CHECK(coeff.is_one());
  CHECK_THROWS_AS(leading_term(ctx->zero_element(), monomial_graded_lex_less),
                  std::domain_error);
  // Degree dominates, ties break lexicographically on the id sequence.
  CHECK(monomial_graded_lex_less({{e12, 1}}, expected));
  CHECK(monomial_graded_lex_less({{e21, 1}}, {{e12, 1}}));
}

TEST_CASE("products are associative on random triples") {
  auto ctx = make_ctx(2, {1});
  const int n_ids = static_cast<int>(ctx->symbols().size());
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> pick(0, n_ids - 1);

  for (int trial = 0; trial < 60; ++trial) {
    AlgebraElement a = ctx->word_element({pick(rng), pick(rng)});
    AlgebraElement b = ctx->generator(pick(rng));
    AlgebraElement c = ctx->word_element({pick(rng), pick(rng)});
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
  }
}

TEST_CASE("commutators satisfy the Jacobi identity, Cartan included") {
  auto ctx = make_ctx(2, {1});
  std::vector<AlgebraElement> basis;
  for (const auto& s : ctx->symbols()) basis.push_back(ctx->generator(s.id));
  for (int i = 0; i < ctx->rank(); ++i)
    basis.push_back(ctx->scalar_element(
        CartanScalar::from_affine(AffineForm::coordinate(ctx->rank(), i))));

  for (const auto& x : basis)
    for (const auto& y : basis)
      for (const auto& z : basis) {
        AlgebraElement j = commutator(x, commutator(y, z)) +
                           commutator(y, commutator(z, x)) +
                           commutator(z, commutator(x, y));
        CHECK(j.is_zero());
      }
}

TEST_CASE("rewrite effort stays within the inversion-recursion budget") {
  // S(1) = 0, S(L) = (L(L-1)/2) (1 + S(L-1)): each swap lowers the
  // inversion count at fixed length and spawns one strictly shorter
  // bracket word.
  std::vector<long> budget(8, 0);
  for (std::size_t L = 2; L < budget.size(); ++L)
    budget[L] = static_cast<long>(L * (L - 1) / 2) * (1 + budget[L - 1]);

  LeviPair lp = levi_pair(build_root_system('A', 3), {1, 2});
  std::mt19937_64 rng(777);
  for (int len = 2; len <= 5; ++len) {
    for (int trial = 0; trial < 12; ++trial) {
      auto fresh = AlgebraContext::make(lp);
      std::uniform_int_distribution<int> pick(
          0, static_cast<int>(fresh->symbols().size()) - 1);
      std::vector<int> word;
      for (int k = 0; k < len; ++k) word.push_back(pick(rng));
      long before = fresh->straighten_steps();
      fresh->straighten(word);
      long used = fresh->straighten_steps() - before;
      CAPTURE(len);
      CAPTURE(used);
      CHECK(used <= budget[static_cast<std::size_t>(len)]);
    }
  }
}
