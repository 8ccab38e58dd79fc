#include "tmcg/braid.hpp"

#include <cctype>
#include <numeric>

#include "tmcg/errors.hpp"

namespace tmcg {

  namespace {
    void check_letter(BraidLetter const& l, int n) {
      int const hi = l.kind == BraidLetter::Kind::Cross ? n - 1 : n;
      if (l.index < 1 || l.index > hi) {
        throw DimensionError(std::string(l.kind == BraidLetter::Kind::Cross ? "s" : "f")
                             + std::to_string(l.index) + " out of range on "
                             + std::to_string(n) + " strands");
      }
      if (l.exponent != 1 && l.exponent != -1) {
        throw DomainError("braid letter exponent must be +1 or -1");
      }
    }

    void check_strand(int k, int n) {
      if (k < 1 || k > n) {
        throw DimensionError("strand " + std::to_string(k) + " out of range on "
                             + std::to_string(n) + " strands");
      }
    }
  }  // namespace

  FramedBraidWord::FramedBraidWord(int strands, std::vector<BraidLetter> letters)
      : _n(strands), _letters(std::move(letters)) {
    if (_n < 1) {
      throw DimensionError("a braid needs at least one strand");
    }
    for (auto const& l : _letters) {
      check_letter(l, _n);
    }
  }

  bool FramedBraidWord::has_framing() const {
    for (auto const& l : _letters) {
      if (l.kind == BraidLetter::Kind::Frame) {
        return true;
      }
    }
    return false;
  }

  FramedBraidWord& FramedBraidWord::push(BraidLetter l) {
    check_letter(l, _n);
    if (!_letters.empty() && _letters.back() == l.inverse()) {
      _letters.pop_back();
    } else {
      _letters.push_back(l);
    }
    return *this;
  }

  FramedBraidWord& FramedBraidWord::append(FramedBraidWord const& w) {
    if (w._n != _n) {
      throw DimensionError("strand count mismatch in braid product");
    }
    for (auto const& l : w._letters) {
      push(l);
    }
    return *this;
  }

  FramedBraidWord FramedBraidWord::inverse() const {
    FramedBraidWord r(_n);
    r._letters.reserve(_letters.size());
    for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
      r._letters.push_back(it->inverse());
    }
    return r;
  }

  std::string FramedBraidWord::to_string() const {
    std::string s = "n=" + std::to_string(_n) + ":";
    for (auto const& l : _letters) {
      s += ' ';
      s += l.kind == BraidLetter::Kind::Cross ? 's' : 'f';
      s += std::to_string(l.index);
      if (l.exponent < 0) {
        s += '\'';
      }
    }
    return s;
  }

  FramedBraidWord FramedBraidWord::parse(std::string_view text) {
    std::size_t pos = 0;
    auto        ws  = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    };
    auto number = [&]() {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (start == pos) {
        throw ParseError("expected a number", pos);
      }
      return std::stoi(std::string(text.substr(start, pos - start)));
    };
    ws();
    if (text.substr(pos, 2) != "n=") {
      throw ParseError("expected strand prefix 'n=<count>:'", pos);
    }
    pos += 2;
    int const n = number();
    if (pos >= text.size() || text[pos] != ':') {
      throw ParseError("expected ':' after strand count", pos);
    }
    ++pos;
    std::vector<BraidLetter> letters;
    for (ws(); pos < text.size(); ws()) {
      char const        c     = text[pos];
      std::size_t const start = pos;
      if (c != 's' && c != 'f') {
        throw ParseError(std::string("unexpected '") + c + "' in braid word", pos);
      }
      ++pos;
      int const i = number();
      int       e = 1;
      if (pos < text.size() && text[pos] == '\'') {
        e = -1;
        ++pos;
      }
      BraidLetter l = c == 's' ? BraidLetter::sigma(i, e) : BraidLetter::frame(i, e);
      try {
        check_letter(l, n);
      } catch (Error const& err) {
        throw ParseError(err.what(), start);
      }
      letters.push_back(l);
    }
    return FramedBraidWord(n, std::move(letters));
  }

  std::vector<int> perm_of(FramedBraidWord const& w) {
    // at[p] = identity of the strand at position p
    std::vector<int> at(static_cast<std::size_t>(w.strands()));
    std::iota(at.begin(), at.end(), 0);
    for (auto const& l : w.letters()) {
      if (l.kind == BraidLetter::Kind::Cross) {
        std::swap(at[l.index - 1], at[l.index]);
      }
    }
    std::vector<int> perm(at.size());
    for (std::size_t p = 0; p < at.size(); ++p) {
      perm[static_cast<std::size_t>(at[p])] = static_cast<int>(p);
    }
    return perm;
  }

  std::vector<long> framing_vector(FramedBraidWord const& w) {
    std::vector<int> at(static_cast<std::size_t>(w.strands()));
    std::iota(at.begin(), at.end(), 0);
    std::vector<long> f(at.size(), 0);
    for (auto const& l : w.letters()) {
      if (l.kind == BraidLetter::Kind::Cross) {
        std::swap(at[l.index - 1], at[l.index]);
      } else {
        f[static_cast<std::size_t>(at[l.index - 1])] += l.exponent;
      }
    }
    return f;
  }

  BraidKey braid_key(FramedBraidWord const& w) {
    auto const n = static_cast<std::size_t>(w.strands());
    BraidKey   k;
    k.images.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      k.images[i] = {free::gen(static_cast<int>(i))};
    }
    auto& img = k.images;
    for (auto const& l : w.letters()) {
      if (l.kind != BraidLetter::Kind::Cross) {
        continue;
      }
      auto const i = static_cast<std::size_t>(l.index - 1);
      free::Word a = std::move(img[i]);
      free::Word b = std::move(img[i + 1]);
      if (l.exponent > 0) {
        // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        img[i]     = free::multiply(a, b, free::inverse(a));
        img[i + 1] = std::move(a);
      } else {
        // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        img[i + 1] = free::multiply(free::inverse(b), a, b);
        img[i]     = std::move(b);
      }
    }
    k.framing = framing_vector(w);
    return k;
  }

  std::size_t hash_key(BraidKey const& k) {
    std::size_t h = 0xcbf29ce484222325ULL;
    auto        mix = [&h](long v) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto const& w : k.images) {
      mix(static_cast<long>(w.size()));
      for (auto l : w) {
        mix(l);
      }
    }
    for (auto f : k.framing) {
      mix(f);
    }
    return h;
  }

  bool equal_braids(FramedBraidWord const& a, FramedBraidWord const& b) {
    if (a.strands() != b.strands()) {
      throw DimensionError("strand count mismatch in braid comparison");
    }
    return braid_key(a) == braid_key(b);
  }

  bool is_trivial_braid(FramedBraidWord const& w) {
    return equal_braids(w, FramedBraidWord(w.strands()));
  }

  bool is_pure(FramedBraidWord const& w) {
    auto p = perm_of(w);
    for (std::size_t s = 0; s < p.size(); ++s) {
      if (p[s] != static_cast<int>(s)) {
        return false;
      }
    }
    return true;
  }

  FramedBraidWord compose_framed(FramedBraidWord const& a, FramedBraidWord const& b) {
    FramedBraidWord r = a;
    r.append(b);
    return r;
  }

  FramedBraidWord cable(FramedBraidWord const& w, int k) {
    check_strand(k, w.strands());
    std::vector<BraidLetter> out;
    out.reserve(w.size() * 2);
    int p = k;  // current position of the doubled strand, old indexing
    for (auto const& l : w.letters()) {
      int const i = l.index;
      int const e = l.exponent;
      if (l.kind == BraidLetter::Kind::Cross) {
        if (i == p) {
          out.push_back(BraidLetter::sigma(i + 1, e));
          out.push_back(BraidLetter::sigma(i, e));
          p = i + 1;
        } else if (i + 1 == p) {
          out.push_back(BraidLetter::sigma(i, e));
          out.push_back(BraidLetter::sigma(i + 1, e));
          p = i;
        } else {
          out.push_back(BraidLetter::sigma(i < p ? i : i + 1, e));
        }
      } else if (i == p) {
        out.push_back(BraidLetter::sigma(p, e));
        out.push_back(BraidLetter::sigma(p, e));
        out.push_back(BraidLetter::frame(p, e));
        out.push_back(BraidLetter::frame(p + 1, e));
      } else {
        out.push_back(BraidLetter::frame(i < p ? i : i + 1, e));
      }
    }
    return FramedBraidWord(w.strands() + 1, std::move(out));
  }

  FramedBraidWord delete_strand(FramedBraidWord const& w, int k) {
    check_strand(k, w.strands());
    if (w.strands() == 1) {
      throw DimensionError("cannot delete the only strand");
    }
    std::vector<BraidLetter> out;
    int                      p = k;
    for (auto const& l : w.letters()) {
      int const i = l.index;
      if (l.kind == BraidLetter::Kind::Cross) {
        if (i == p) {
          p = i + 1;
        } else if (i + 1 == p) {
          p = i;
        } else {
          out.push_back(BraidLetter::sigma(i < p ? i : i - 1, l.exponent));
        }
      } else if (i != p) {
        out.push_back(BraidLetter::frame(i < p ? i : i - 1, l.exponent));
      }
    }
    return FramedBraidWord(w.strands() - 1, std::move(out));
  }

}  // namespace tmcg
