#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tmcg/braid.hpp"

namespace tmcg::oracle {

  // Equivalence of crossing words by exhaustive rewriting inside a bounded
  // ball: free insertion/deletion of s s', the braid relation in both sign
  // forms and far commutation, on all words of length <= max_length.
  class BraidRewritingBall {
   public:
    BraidRewritingBall(int strands, int max_length);

    int strands() const noexcept {
      return _n;
    }
    int max_length() const noexcept {
      return _max;
    }

    // Class id of an unframed word of length <= max_length.
    std::uint32_t class_of(FramedBraidWord const& w);

   private:
    std::uint32_t index(std::vector<int> const& code) const;
    std::uint32_t find(std::uint32_t x);
    void          unite(std::uint32_t a, std::uint32_t b);

    int                        _n;
    int                        _max;
    int                        _alphabet;
    std::vector<std::uint64_t> _offset;  // first index of each length
    std::vector<std::uint32_t> _parent;
  };

  // Pushes every framing letter to the end using f_j s_i = s_i f_{s_i(j)}.
  // Returns the crossing word and the framing per final position.
  std::pair<FramedBraidWord, std::vector<long>> push_framings_right(
      FramedBraidWord const& w);

  struct OracleReport {
    int           strands      = 0;
    std::uint64_t words        = 0;
    std::uint64_t key_classes  = 0;
    std::uint64_t ball_classes = 0;
    std::uint64_t mismatches   = 0;
    std::string   example;  // first disagreement, if any
  };

  // Compares equal_braids with the rewriting oracle on every framed word of
  // length <= max_word on the given strand count.
  OracleReport compare_with_rewriting(int strands, int max_word, int ball_length);

}  // namespace tmcg::oracle
