#include <random>

#include "doctest.h"
#include "tmcg/braid.hpp"
#include "tmcg/braid_oracle.hpp"
#include "tmcg/errors.hpp"

using namespace tmcg;

namespace {
  FramedBraidWord W(char const* s) {
    return FramedBraidWord::parse(s);
  }

  FramedBraidWord random_word(std::mt19937& rng, int n, int len, bool framed) {
    FramedBraidWord w(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int k = 0; k < len; ++k) {
      int e = coin(rng) ? 1 : -1;
      if (n > 1 && (!framed || coin(rng))) {
        w.push(BraidLetter::sigma(std::uniform_int_distribution<int>(1, n - 1)(rng), e));
      } else {
        w.push(BraidLetter::frame(std::uniform_int_distribution<int>(1, n)(rng), e));
      }
    }
    return w;
  }
}  // namespace

TEST_CASE("braid text round trip and errors") {
  CHECK(W("n=4: s1 s2' f3").to_string() == "n=4: s1 s2' f3");
  CHECK(W("n=3:").empty());
  CHECK_THROWS_AS(W("n=2: s2"), ParseError);
  CHECK_THROWS_AS(W("s1"), ParseError);
}

TEST_CASE("permutations") {
  CHECK(perm_of(W("n=2:")) == std::vector<int>{0, 1});
  CHECK(perm_of(W("n=2: s1")) == std::vector<int>{1, 0});
  auto p = perm_of(W("n=3: s1 s2"));
  CHECK(p == std::vector<int>{2, 0, 1});
}

TEST_CASE("equality oracle") {
  CHECK(equal_braids(W("n=3: s1 s2 s1"), W("n=3: s2 s1 s2")));
  CHECK(equal_braids(W("n=3: s1 s1'"), W("n=3:")));
  CHECK_FALSE(equal_braids(W("n=2: s1 s1"), W("n=2:")));
  CHECK_THROWS_AS(equal_braids(W("n=2:"), W("n=3:")), DimensionError);
}

TEST_CASE("framings follow strand identities") {
  auto w = W("n=2: f1 s1 f1");
  CHECK(framing_vector(w) == std::vector<long>{1, 1});
  CHECK(framing_vector(compose_framed(W("n=2: f1"), W("n=2: f2 f2"))) == std::vector<long>{1, 2});
}

TEST_CASE("cabling examples") {
  CHECK(cable(W("n=1:"), 1) == W("n=2:"));
  CHECK(equal_braids(cable(W("n=1: f1"), 1), W("n=2: s1 s1 f1 f2")));
  auto c = cable(W("n=2: s1"), 1);
  CHECK(c.strands() == 3);
  CHECK(perm_of(c) == std::vector<int>{1, 2, 0});
  CHECK(equal_braids(delete_strand(c, 1), W("n=2: s1")));
  CHECK(equal_braids(delete_strand(c, 2), W("n=2: s1")));
  CHECK(is_trivial_braid(delete_strand(W("n=3: s2 s2"), 3)));
  CHECK_THROWS_AS(cable(W("n=2:"), 3), DimensionError);
}

TEST_CASE("cable is multiplicative and retracts") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int  n = std::uniform_int_distribution<int>(1, 5)(rng);
    int  k = std::uniform_int_distribution<int>(1, n)(rng);
    auto a = random_word(rng, n, 8, true);
    auto b = random_word(rng, n, 8, true);
    int  k2 = perm_of(a)[static_cast<std::size_t>(k - 1)] + 1;
    CHECK(equal_braids(cable(compose_framed(a, b), k),
                       compose_framed(cable(a, k), cable(b, k2))));
    CHECK(equal_braids(delete_strand(cable(a, k), k), a));
    CHECK(equal_braids(delete_strand(cable(a, k), k + 1), a));
  }
}

TEST_CASE("equality is a congruence") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = random_word(rng, 4, 6, true);
    // b is a rewritten copy of a: insert a cancelling pair and apply a braid relation
    FramedBraidWord b = compose_framed(a, W("n=4: s1 s2 s1 s2' s1' s2'"));
    auto c = random_word(rng, 4, 5, true);
    CHECK(equal_braids(compose_framed(a, c), compose_framed(b, c)));
    CHECK(equal_braids(compose_framed(c, a), compose_framed(c, b)));
    int total = 0;
    for (long f : framing_vector(a)) total += static_cast<int>(f);
    int conj = 0;
    for (long f : framing_vector(compose_framed(compose_framed(c, a), c.inverse()))) conj += static_cast<int>(f);
    CHECK(total == conj);
  }
}

TEST_CASE("rewriting oracle agrees on two strands") {
  auto r = oracle::compare_with_rewriting(2, 5, 7);
  CHECK(r.mismatches == 0);
  CHECK(r.key_classes == r.ball_classes);
}
