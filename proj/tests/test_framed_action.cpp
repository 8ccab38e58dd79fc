#include <random>

#include "doctest.h"
#include "tmcg/framed_action.hpp"

using namespace tmcg;

namespace {
  FramedBraidWord random_word(std::mt19937& rng, int n, int len) {
    FramedBraidWord w(n);
    std::uniform_int_distribution<int> coin(0, 2);
    for (int k = 0; k < len; ++k) {
      int e = coin(rng) % 2 ? 1 : -1;
      if (n > 1 && coin(rng)) {
        w.push(BraidLetter::sigma(std::uniform_int_distribution<int>(1, n - 1)(rng), e));
      } else {
        w.push(BraidLetter::frame(std::uniform_int_distribution<int>(1, n)(rng), e));
      }
    }
    return w;
  }
}  // namespace

TEST_CASE("letters and inverses") {
  for (int k = 1; k <= 4; ++k) {
    for (int i = 1; i < k; ++i) {
      auto s = PositionalMap::letter(k, BraidLetter::sigma(i, 1));
      auto t = PositionalMap::letter(k, BraidLetter::sigma(i, -1));
      CHECK(compose(s, t).is_identity());
      CHECK(compose(t, s).is_identity());
    }
    for (int j = 1; j <= k; ++j) {
      auto s = PositionalMap::letter(k, BraidLetter::frame(j, 1));
      auto t = PositionalMap::letter(k, BraidLetter::frame(j, -1));
      CHECK(compose(s, t).is_identity());
    }
  }
}

TEST_CASE("positional action agrees with the braid oracle") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    int  n = std::uniform_int_distribution<int>(1, 5)(rng);
    auto a = random_word(rng, n, 10);
    auto b = random_word(rng, n, 10);
    bool same_map = PositionalMap::of_word(a) == PositionalMap::of_word(b);
    CHECK(same_map == equal_braids(a, b));
    CHECK(PositionalMap::of_word(compose_framed(a, a.inverse())).is_identity());
    auto ab = PositionalMap::of_word(compose_framed(a, b));
    CHECK(ab == compose(PositionalMap::of_word(b), PositionalMap::of_word(a)));
  }
}

TEST_CASE("braid extraction reproduces the map") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    int  n = std::uniform_int_distribution<int>(1, 6)(rng);
    auto a = random_word(rng, n, 14);
    auto m = PositionalMap::of_word(a);
    auto w = braid_word_of(m, 100000);
    CHECK(equal_braids(w, a));
  }
}
