#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tmcg::free {

  // A word in a free group. Letter +k is generator k-1, letter -k its inverse;
  // zero never occurs.
  using Letter = std::int32_t;
  using Word   = std::vector<Letter>;

  inline Letter gen(int index, int exponent_sign = 1) {
    return exponent_sign > 0 ? index + 1 : -(index + 1);
  }

  inline int index_of(Letter l) {
    return (l > 0 ? l : -l) - 1;
  }

  // Free reduction in place; returns the word for chaining.
  Word& reduce(Word& w);
  Word  reduced(Word w);

  Word inverse(Word const& w);

  // Reduced product of already reduced words.
  Word multiply(Word const& a, Word const& b);
  Word multiply(Word const& a, Word const& b, Word const& c);

  Word power(Word const& w, int e);

  // Image of w under the homomorphism sending generator i to images[i].
  Word substitute(Word const& w, std::span<Word const> images);

  // Exponent sum of generator i.
  int exponent_sum(Word const& w, int index);

  bool contains_generator(Word const& w, int index);

  // Renders letters with the given symbol prefix, e.g. "x1 x2^-1".
  std::string to_string(Word const& w, std::string const& symbol = "x");

}  // namespace tmcg::free
