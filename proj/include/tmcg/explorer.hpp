#pragma once

#include <string_view>
#include <vector>

#include "tmcg/belement.hpp"

namespace tmcg {

  // Moves act on the right: the word W_n ... W_1 evaluates to w_1 ... w_n,
  // so eval(W W') = eval(W') eval(W).
  BElement eval_move_word(BWord const& moves);
  BElement eval_move_word(std::string_view text);

  struct BallSummary {
    int                      radius = 0;
    std::size_t              nodes  = 0;
    std::size_t              edges  = 0;
    std::vector<std::size_t> spheres;
  };

  // Ball in the Cayley graph of T for right multiplication by alpha, beta
  // and their inverses. Throws ResourceError beyond max_radius.
  BallSummary cayley_ball(int radius, int max_radius = 6, int jobs = 1, bool inverted = false);

  // Sphere sizes from all reduced words, deduplicated by pairwise equality.
  std::vector<std::size_t> brute_force_spheres(int radius);

  // Alternating products of alpha^2 with beta or beta^2 having at most
  // max_len syllables; true when none is trivial, both in V and in B.
  bool psl2_probe(int max_len);

}  // namespace tmcg
