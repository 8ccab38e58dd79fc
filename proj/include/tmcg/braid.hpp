#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tmcg/free_group.hpp"

namespace tmcg {

  // sigma_i^{+-1} crosses positions i, i+1; f_j^{+-1} frames whatever strand
  // currently sits at position j. Indices are 1-based.
  struct BraidLetter {
    enum class Kind : std::uint8_t { Cross, Frame };
    Kind kind     = Kind::Cross;
    int  index    = 1;
    int  exponent = 1;  // +1 or -1

    static BraidLetter sigma(int i, int e = 1) {
      return {Kind::Cross, i, e};
    }
    static BraidLetter frame(int j, int e = 1) {
      return {Kind::Frame, j, e};
    }
    BraidLetter inverse() const {
      return {kind, index, -exponent};
    }
    bool operator==(BraidLetter const&) const = default;
  };

  // A framed braid word read left to right in time order. Unframed words
  // (plain braid words) are the special case without Frame letters.
  class FramedBraidWord {
   public:
    FramedBraidWord() = default;
    explicit FramedBraidWord(int strands, std::vector<BraidLetter> letters = {});

    int strands() const noexcept {
      return _n;
    }
    std::vector<BraidLetter> const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    bool has_framing() const;

    FramedBraidWord& push(BraidLetter l);
    FramedBraidWord& append(FramedBraidWord const& w);

    FramedBraidWord inverse() const;

    // "n=3: s1 s2' f3"; the empty word prints as "n=3:".
    std::string            to_string() const;
    static FramedBraidWord parse(std::string_view text);

    // Literal letter-by-letter equality; use equal_braids for group equality.
    bool operator==(FramedBraidWord const&) const = default;

   private:
    int                      _n = 1;
    std::vector<BraidLetter> _letters;
  };

  using BraidWord = FramedBraidWord;

  // perm[s] = final position of the strand starting at position s (0-based).
  std::vector<int> perm_of(FramedBraidWord const& w);

  // Total framing per strand identity (indexed by starting position).
  std::vector<long> framing_vector(FramedBraidWord const& w);

  // Canonical value in Z^n x| B_n: Artin images of x_1..x_n plus framings.
  struct BraidKey {
    std::vector<free::Word> images;
    std::vector<long>       framing;
    bool operator==(BraidKey const&) const = default;
  };

  BraidKey braid_key(FramedBraidWord const& w);

  // Hash of a key for use in unordered containers.
  std::size_t hash_key(BraidKey const& k);

  bool equal_braids(FramedBraidWord const& a, FramedBraidWord const& b);
  bool is_trivial_braid(FramedBraidWord const& w);
  bool is_pure(FramedBraidWord const& w);

  // a followed by b.
  FramedBraidWord compose_framed(FramedBraidWord const& a, FramedBraidWord const& b);

  // Doubles the strand identity k (1-based start position): the two children
  // start at positions k, k+1 and later identities shift up by one. A framing
  // f^e on the doubled strand becomes sigma^{2e} f^e f^e on the children.
  FramedBraidWord cable(FramedBraidWord const& w, int k);

  // Removes the strand with identity k together with its crossings and
  // framings.
  FramedBraidWord delete_strand(FramedBraidWord const& w, int k);

}  // namespace tmcg
