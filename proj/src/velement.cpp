#include "tmcg/velement.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tmcg/errors.hpp"

namespace tmcg {

  Symbol::Symbol(Tree tgt, Tree src, std::vector<int> b)
      : target(std::move(tgt)), source(std::move(src)), bij(std::move(b)) {
    if (target.level() != source.level() || bij.size() != source.level()) {
      throw DimensionError("symbol trees and bijection differ in level");
    }
    std::vector<int> seen(bij.size(), 0);
    for (int v : bij) {
      if (v < 0 || static_cast<std::size_t>(v) >= bij.size() || seen[v]++) {
        throw DomainError("symbol bijection is not a permutation");
      }
    }
  }

  Symbol Symbol::expand_source_at(std::size_t i) const {
    int const        j = bij.at(i);
    std::vector<int> b;
    b.reserve(bij.size() + 1);
    for (std::size_t k = 0; k < bij.size(); ++k) {
      if (k == i) {
        b.push_back(j);
        b.push_back(j + 1);
      } else {
        b.push_back(bij[k] < j ? bij[k] : bij[k] + 1);
      }
    }
    Symbol r;
    r.source = source.expand_at(i);
    r.target = target.expand_at(static_cast<std::size_t>(j));
    r.bij    = std::move(b);
    return r;
  }

  Symbol Symbol::expand_target_at(std::size_t j) const {
    auto it = std::find(bij.begin(), bij.end(), static_cast<int>(j));
    if (it == bij.end()) {
      throw AddressError("target index out of range");
    }
    return expand_source_at(static_cast<std::size_t>(it - bij.begin()));
  }

  Symbol Symbol::with_source(Tree const& t) const {
    if (!source.is_subtree_of(t)) {
      throw AddressError("cannot refine " + source.to_string() + " to "
                         + t.to_string());
    }
    Symbol      r = *this;
    std::size_t i = 0;
    while (i < r.source.level()) {
      if (t.has_leaf(r.source.leaf(i))) {
        ++i;
      } else {
        r = r.expand_source_at(i);
      }
    }
    return r;
  }

  Symbol Symbol::with_target(Tree const& t) const {
    if (!target.is_subtree_of(t)) {
      throw AddressError("cannot refine " + target.to_string() + " to "
                         + t.to_string());
    }
    Symbol      r = *this;
    std::size_t j = 0;
    while (j < r.target.level()) {
      if (t.has_leaf(r.target.leaf(j))) {
        ++j;
      } else {
        r = r.expand_target_at(j);
      }
    }
    return r;
  }

  std::string Symbol::to_string() const {
    std::string s
        = "tgt=" + target.to_string() + " src=" + source.to_string() + " bij=[";
    for (std::size_t k = 0; k < bij.size(); ++k) {
      s += (k ? "," : "") + std::to_string(bij[k] + 1);
    }
    return s + "]";
  }

  Symbol Symbol::parse(std::string_view text) {
    auto field = [&](std::string_view key) -> std::pair<std::string_view, std::size_t> {
      auto p = text.find(key);
      if (p == std::string_view::npos) {
        throw ParseError("missing field '" + std::string(key) + "'", 0);
      }
      p += key.size();
      auto e = text.find(' ', p);
      return {text.substr(p, e == std::string_view::npos ? e : e - p), p};
    };
    auto [tgt, tp] = field("tgt=");
    auto [src, sp] = field("src=");
    auto [bj, bp]  = field("bij=");
    (void) tp;
    (void) sp;
    if (bj.size() < 2 || bj.front() != '[' || bj.back() != ']') {
      throw ParseError("bijection must be bracketed", bp);
    }
    std::vector<int> b;
    std::size_t      k = 1;
    while (k + 1 < bj.size()) {
      std::size_t e = k;
      while (e + 1 < bj.size() && std::isdigit(static_cast<unsigned char>(bj[e]))) {
        ++e;
      }
      if (e == k) {
        throw ParseError("expected label", bp + k);
      }
      b.push_back(std::stoi(std::string(bj.substr(k, e - k))) - 1);
      k = e;
      if (k + 1 < bj.size()) {
        if (bj[k] != ',') {
          throw ParseError("expected ','", bp + k);
        }
        ++k;
      }
    }
    return Symbol(Tree::parse(tgt), Tree::parse(src), std::move(b));
  }

  VElement::VElement(Symbol s) : _sym(reduce_symbol(std::move(s))) {}

  Symbol reduce_symbol(Symbol s) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < s.level(); ++i) {
        int const j = s.bij[i];
        if (s.bij[i + 1] != j + 1 || !s.source.is_caret(i)
            || !s.target.is_caret(static_cast<std::size_t>(j))) {
          continue;
        }
        s.source = s.source.contract(i);
        s.target = s.target.contract(static_cast<std::size_t>(j));
        s.bij.erase(s.bij.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        for (auto& v : s.bij) {
          if (v > j) {
            --v;
          }
        }
        changed = true;
        break;
      }
    }
    return s;
  }

  VElement reduce(Symbol const& s) {
    return VElement(s);
  }

  VElement multiply_v(VElement const& a, VElement const& b) {
    Tree const mid = b.symbol().target.merge(a.symbol().source);
    Symbol     bb  = b.symbol().with_target(mid);
    Symbol     aa  = a.symbol().with_source(mid);
    Symbol     r;
    r.target = aa.target;
    r.source = bb.source;
    r.bij.resize(bb.bij.size());
    for (std::size_t k = 0; k < bb.bij.size(); ++k) {
      r.bij[k] = aa.bij[static_cast<std::size_t>(bb.bij[k])];
    }
    return VElement(std::move(r));
  }

  VElement invert_v(VElement const& a) {
    Symbol const& s = a.symbol();
    Symbol        r;
    r.target = s.source;
    r.source = s.target;
    r.bij.resize(s.bij.size());
    for (std::size_t k = 0; k < s.bij.size(); ++k) {
      r.bij[static_cast<std::size_t>(s.bij[k])] = static_cast<int>(k);
    }
    return VElement(std::move(r));
  }

  VElement power_v(VElement const& a, int e) {
    VElement base = e < 0 ? invert_v(a) : a;
    VElement r;
    for (int k = 0; k < std::abs(e); ++k) {
      r = multiply_v(r, base);
    }
    return r;
  }

  bool is_identity(VElement const& a) {
    return a == VElement();
  }

  Membership classify_symbol(Symbol const& s) {
    int const n     = static_cast<int>(s.level());
    int const shift = s.bij[0];
    for (int i = 0; i < n; ++i) {
      if (s.bij[static_cast<std::size_t>(i)] != (i + shift) % n) {
        return {};
      }
    }
    return {true, shift == 0, shift};
  }

  Membership classify(VElement const& a) {
    return classify_symbol(a.symbol());
  }

  Tree alpha_support() {
    return Tree().expand_at(2);
  }

  VGenerators const& generator_images() {
    static VGenerators const g = [] {
      VGenerators r;
      r.pi    = VElement(Symbol(Tree(), Tree(), {1, 0, 2}));
      r.beta  = VElement(Symbol(Tree(), Tree(), {1, 2, 0}));
      r.alpha = VElement(Symbol(alpha_support(), alpha_support(), {1, 2, 3, 0}));
      r.t     = VElement();
      return r;
    }();
    return g;
  }

  std::size_t VElementHash::operator()(VElement const& v) const {
    auto const& s = v.symbol();
    std::size_t h = std::hash<std::string>{}(s.source.to_string());
    h ^= std::hash<std::string>{}(s.target.to_string()) + 0x9e3779b97f4a7c15ULL
         + (h << 6) + (h >> 2);
    for (int b : s.bij) {
      h ^= static_cast<std::size_t>(b) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

}  // namespace tmcg
