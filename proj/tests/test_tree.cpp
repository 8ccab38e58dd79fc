#include "doctest.h"
#include "tmcg/errors.hpp"
#include "tmcg/tree.hpp"
#include "tmcg/velement.hpp"

using namespace tmcg;

TEST_CASE("tree parse and render round trip") {
  for (auto s : {"(,,)", "((,),,(,))", "(,((,),),)"}) {
    CHECK(Tree::parse(s).to_string() == s);
  }
  CHECK_THROWS_AS(Tree::parse("(,)"), ParseError);
}

TEST_CASE("expansion labels children consecutively") {
  Tree t = Tree().expand_at(1);
  CHECK(t.level() == 4);
  CHECK(t.leaf(1) == LeafAddress(2, "L"));
  CHECK(t.leaf(2) == LeafAddress(2, "R"));
  CHECK(t.is_caret(1));
  CHECK_FALSE(t.is_caret(0));
  CHECK(t.contract(1) == Tree());
}

TEST_CASE("outer leaf follows the reference end") {
  Tree t = Tree().expand_at(2).expand_at(2);
  CHECK(t.leaf(t.outer_leaf_index()) == LeafAddress(3, "LL"));
}

TEST_CASE("merge is the smallest common refinement") {
  Tree a = Tree().expand_at(0);
  Tree b = Tree().expand_at(2);
  Tree m = a.merge(b);
  CHECK(m.level() == 5);
  CHECK(a.is_subtree_of(m));
  CHECK(b.is_subtree_of(m));
  CHECK_FALSE(m.is_subtree_of(a));
}

TEST_CASE("V generators have the expected orders") {
  auto const& g = generator_images();
  CHECK(is_identity(power_v(g.pi, 2)));
  CHECK(is_identity(power_v(g.beta, 3)));
  CHECK(is_identity(power_v(g.alpha, 4)));
  CHECK(is_identity(power_v(multiply_v(g.beta, g.alpha), 5)));
  CHECK_FALSE(is_identity(power_v(multiply_v(g.beta, g.alpha), 4)));
}

TEST_CASE("reduction and refinement agree") {
  Symbol s(Tree(), Tree(), {1, 2, 0});
  Symbol e = s.expand_source_at(0).expand_source_at(3);
  CHECK(VElement(e) == VElement(s));
  CHECK(Symbol::parse(s.to_string()) == s);
}

TEST_CASE("membership in T and F") {
  auto const& g = generator_images();
  CHECK(classify(g.beta).in_T);
  CHECK_FALSE(classify(g.beta).in_F);
  CHECK_FALSE(classify(g.pi).in_T);
  auto x = multiply_v(g.alpha, g.beta);
  CHECK(classify(x).in_T);
}
