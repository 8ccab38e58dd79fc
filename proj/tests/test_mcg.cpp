#include <random>

#include "doctest.h"
#include "tmcg/bv.hpp"
#include "tmcg/errors.hpp"

using namespace tmcg;

namespace {
  BElement random_b(std::mt19937& rng, int len) {
    auto const& g = b_generators();
    BElement const* letters[8] = {&g.t, &g.pi, &g.beta, &g.alpha,
                                  &g.t_inv, &g.pi_inv, &g.beta_inv, &g.alpha_inv};
    BElement x;
    for (int i = 0; i < len; ++i) {
      x = b_multiply(x, *letters[rng() % 8]);
    }
    return x;
  }

  BVElement random_bv(std::mt19937& rng, int len) {
    auto const& g = bv_generators();
    BVElement const* letters[4] = {&g.A, &g.B, &g.C, &g.pi0};
    BVElement x;
    for (int i = 0; i < len; ++i) {
      BVElement const& y = *letters[rng() % 4];
      x = bv_multiply(x, rng() % 2 ? y : bv_invert(y));
    }
    return x;
  }
}  // namespace

TEST_CASE("generators of B in braid coordinates") {
  auto const& g = b_generators();
  Tree const  y;
  CHECK(b_equal(g.t, BElement(braid_map(y, FramedBraidWord::parse("n=2: s1 s1 f1 f2")))));
  CHECK(b_equal(g.pi, BElement(braid_map(y, FramedBraidWord::parse("n=2: s1")))));
  CHECK(is_identity(project_v(g.t)));
  CHECK(project_v(g.beta) == generator_images().beta);
  CHECK(project_v(g.alpha) == generator_images().alpha);
  CHECK_FALSE(b_is_identity(b_power(g.pi, 2)));
  CHECK(is_identity(power_v(project_v(g.pi), 2)));
  CHECK(b_is_identity(b_multiply(g.pi, g.pi_inv)));
}

TEST_CASE("framing sign is pinned by a twist relator") {
  CHECK(b_is_identity(BElement::parse("(a p)^3 = t2'")));
  CHECK_FALSE(b_is_identity(BElement::parse("(a p)^3 = t2")));
  CHECK(b_is_identity(BElement::parse("p^2 = t t1' t2'")));
}

TEST_CASE("projection, inversion and the section over T") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    auto a = random_b(rng, 1 + static_cast<int>(rng() % 8));
    auto b = random_b(rng, 1 + static_cast<int>(rng() % 8));
    CHECK(project_v(b_multiply(a, b)) == multiply_v(project_v(a), project_v(b)));
    CHECK(b_is_identity(b_multiply(a, b_invert(a))));
    auto nf = a.normal_form();
    CHECK(b_equal(a, BElement(from_normal_form(nf))));
  }
  auto const x = project_v(BElement::parse("a b a^2 b'"));
  CHECK(project_v(t_section(x)) == x);
  CHECK_THROWS_AS(t_section(project_v(BElement::parse("p"))), DomainError);
}

TEST_CASE("rooted trees") {
  auto t = RootedTree::parse("((,),)");
  CHECK(t.leaves() == 3);
  CHECK(t.to_string() == "((,),)");
  CHECK(t.is_caret(0));
  CHECK_FALSE(t.is_caret(1));
  CHECK(t.contract(0) == RootedTree());
  CHECK_THROWS(RootedTree().contract(0));
}

TEST_CASE("braided pairs") {
  auto const& g = bv_generators();
  CHECK_FALSE(bv_is_identity(bv_power(g.pi0, 2)));
  CHECK(is_identity(power_v(project_v(g.pi0), 2)));
  CHECK(is_identity(power_v(project_v(g.C), 3)));
  CHECK(bv_equal(bv_power(g.C, 3),
                 iota_embed(BraidWord::parse("n=3: s1 s2 s1 s2 s1 s2"), g.C.source)));
  CHECK_FALSE(bv_equal(g.pi0, bv_invert(g.pi0)));
  CHECK(bv_is_identity(bv_parse("[A B', A' B A]")));
  auto const big = g.C.expand_source_at(1).expand_source_at(0);
  CHECK(bv_equal(big, g.C));
  CHECK(bv_reduce(big) == g.C);
  auto const s = RootedTree::parse("(,(,))");
  CHECK(bv_equal(iota_embed(BraidWord::parse("n=3: s1"), s), g.pi0));
  CHECK(bv_equal(iota_embed(BraidWord::parse("n=3: s1 s2 s1"), s),
                 iota_embed(BraidWord::parse("n=3: s2 s1 s2"), s)));
  CHECK_THROWS_AS(iota_embed(BraidWord::parse("n=2: s1"), s), DimensionError);
}

TEST_CASE("embedding of braided pairs into B") {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto a = random_bv(rng, 1 + static_cast<int>(rng() % 6));
    auto b = random_bv(rng, 1 + static_cast<int>(rng() % 6));
    CHECK(b_equal(embed_bv(bv_multiply(a, b)), b_multiply(embed_bv(a), embed_bv(b))));
    CHECK(project_v(embed_bv(a)) == project_v(a));
    auto c = bv_multiply(a, bv_multiply(bv_parse("[A B', A' B A]"), bv_invert(b)));
    CHECK(bv_equal(c, bv_multiply(a, bv_invert(b))));
    CHECK(b_equal(embed_bv(c), embed_bv(bv_multiply(a, bv_invert(b)))));
  }
  CHECK(b_equal(embed_bv(bv_generators().pi0), BElement::parse("b' a p a' b")));
}

TEST_CASE("the last V table relator compares an element of F with one outside T") {
  auto const lhs = project_v(parse_word("a^2 b a^2 b^2 a^3 b^2 a^2 b^2 a^2"));
  auto const rhs = project_v(parse_word("(a^3 b^2 a^2 b a^2 p^b)^2"));
  CHECK_FALSE(is_identity(lhs));
  CHECK(classify(lhs).in_F);
  CHECK_FALSE(classify(rhs).in_T);
}
