#pragma once

#include <string>
#include <string_view>

#include "tmcg/free_group.hpp"

namespace tmcg {

  // Generator indices of B; V, T and F words use the same letters.
  enum class Gen : int { t = 0, pi = 1, beta = 2, alpha = 3 };

  // A freely reduced word over t, pi, beta, alpha.
  struct BWord {
    free::Word letters;

    static BWord gen(Gen g, int e = 1) {
      return {{free::gen(static_cast<int>(g), e)}};
    }

    BWord inverse() const {
      return {free::inverse(letters)};
    }
    BWord power(int e) const {
      return {free::power(letters, e)};
    }
    friend BWord operator*(BWord const& a, BWord const& b) {
      return {free::multiply(a.letters, b.letters)};
    }
    bool empty() const noexcept {
      return letters.empty();
    }

    // Letters t p b a with ' for inverses; "e" for the empty word.
    std::string to_string() const;

    bool operator==(BWord const&) const = default;
  };

  // Parses the relator grammar over the four letters of `alphabet`, which
  // stand for t, pi, beta, alpha in that order:
  //   word   := term*                       juxtaposition is the product
  //   term   := primary ( "'" | "^" int | "^" primary )*
  //   primary:= letter | "(" word ")" | "[" word "," word "]" | "e" | "1"
  // [x,y] = x'y'xy, x^y = y'xy, and "lhs = rhs" denotes lhs rhs'.
  // With `sugar`, t1 = b t b', t2 = b' t b, t3 = a^2 t1 a^2, t4 = a^2 t2 a^2.
  BWord parse_word(std::string_view text,
                   std::string_view alphabet = "tpba",
                   bool             sugar    = true);

  // Move words: letters T P B A in the same roles, no sugar.
  BWord parse_move_word(std::string_view text);

}  // namespace tmcg
