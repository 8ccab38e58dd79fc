#include "tmcg/free_group.hpp"

#include <cstdlib>

namespace tmcg::free {

  Word& reduce(Word& w) {
    std::size_t out = 0;
    for (Letter l : w) {
      if (out > 0 && w[out - 1] == -l) {
        --out;
      } else {
        w[out++] = l;
      }
    }
    w.resize(out);
    return w;
  }

  Word reduced(Word w) {
    reduce(w);
    return w;
  }

  Word inverse(Word const& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& l : r) {
      l = -l;
    }
    return r;
  }

  Word multiply(Word const& a, Word const& b) {
    // Cancel at the seam only; both inputs are reduced.
    std::size_t i = a.size(), j = 0;
    while (i > 0 && j < b.size() && a[i - 1] == -b[j]) {
      --i;
      ++j;
    }
    Word r;
    r.reserve(i + b.size() - j);
    r.insert(r.end(), a.begin(), a.begin() + i);
    r.insert(r.end(), b.begin() + j, b.end());
    return r;
  }

  Word multiply(Word const& a, Word const& b, Word const& c) {
    return multiply(multiply(a, b), c);
  }

  Word power(Word const& w, int e) {
    Word base = e < 0 ? inverse(w) : w;
    Word r;
    for (int k = 0; k < std::abs(e); ++k) {
      r = multiply(r, base);
    }
    return r;
  }

  Word substitute(Word const& w, std::span<Word const> images) {
    Word r;
    auto push = [&r](Letter x) {
      if (!r.empty() && r.back() == -x) {
        r.pop_back();
      } else {
        r.push_back(x);
      }
    };
    for (Letter l : w) {
      Word const& img = images[index_of(l)];
      if (l > 0) {
        for (Letter x : img) {
          push(x);
        }
      } else {
        for (auto it = img.rbegin(); it != img.rend(); ++it) {
          push(-*it);
        }
      }
    }
    return r;
  }

  int exponent_sum(Word const& w, int index) {
    int s = 0;
    for (Letter l : w) {
      if (index_of(l) == index) {
        s += l > 0 ? 1 : -1;
      }
    }
    return s;
  }

  bool contains_generator(Word const& w, int index) {
    for (Letter l : w) {
      if (index_of(l) == index) {
        return true;
      }
    }
    return false;
  }

  std::string to_string(Word const& w, std::string const& symbol) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (k) {
        s += ' ';
      }
      s += symbol + std::to_string(index_of(w[k]) + 1);
      if (w[k] < 0) {
        s += "^-1";
      }
    }
    return s;
  }

}  // namespace tmcg::free
