#include "tmcg/framed_action.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "tmcg/errors.hpp"

namespace tmcg {

  namespace f = tmcg::free;

  PositionalMap PositionalMap::identity(int k) {
    PositionalMap m;
    m.holes = k;
    m.perm.resize(static_cast<std::size_t>(k));
    std::iota(m.perm.begin(), m.perm.end(), 0);
    m.arcs.assign(static_cast<std::size_t>(k), {});
    return m;
  }

  PositionalMap PositionalMap::letter(int k, BraidLetter l) {
    PositionalMap m = identity(k);
    if (l.kind == BraidLetter::Kind::Cross) {
      if (l.index < 1 || l.index >= k) {
        throw DimensionError("crossing index out of range");
      }
      auto const a = static_cast<std::size_t>(l.index - 1);
      std::swap(m.perm[a], m.perm[a + 1]);
      if (l.exponent > 0) {
        m.arcs[a] = {f::gen(static_cast<int>(a), -1)};
      } else {
        m.arcs[a + 1] = {f::gen(static_cast<int>(a) + 1, 1)};
      }
    } else {
      if (l.index < 1 || l.index > k) {
        throw DimensionError("framing index out of range");
      }
      auto const j = static_cast<std::size_t>(l.index - 1);
      m.arcs[j]    = {f::gen(static_cast<int>(j), -l.exponent)};
    }
    return m;
  }

  PositionalMap PositionalMap::of_word(FramedBraidWord const& w) {
    PositionalMap cur = identity(w.strands());
    for (auto const& l : w.letters()) {
      cur = compose(letter(w.strands(), l), cur);
    }
    return cur;
  }

  f::Word PositionalMap::apply(f::Word const& w) const {
    std::vector<f::Word> images(static_cast<std::size_t>(holes));
    for (std::size_t p = 0; p < images.size(); ++p) {
      images[p] = f::multiply(arcs[p], {f::gen(perm[p])}, f::inverse(arcs[p]));
    }
    return f::substitute(w, images);
  }

  bool PositionalMap::is_identity() const {
    return *this == identity(holes);
  }

  bool PositionalMap::is_pure() const {
    for (int p = 0; p < holes; ++p) {
      if (perm[static_cast<std::size_t>(p)] != p) {
        return false;
      }
    }
    return true;
  }

  PositionalMap compose(PositionalMap const& a, PositionalMap const& b) {
    if (a.holes != b.holes) {
      throw DimensionError("hole count mismatch in composition");
    }
    PositionalMap c;
    c.holes = a.holes;
    c.perm.resize(b.perm.size());
    c.arcs.resize(b.arcs.size());
    for (std::size_t p = 0; p < b.perm.size(); ++p) {
      auto const q = static_cast<std::size_t>(b.perm[p]);
      c.perm[p]    = a.perm[q];
      c.arcs[p]    = f::multiply(a.apply(b.arcs[p]), a.arcs[q]);
    }
    return c;
  }

  PositionalMap cap_last(PositionalMap const& m) {
    int const k = m.holes;
    if (k < 1 || m.perm.back() != k - 1) {
      throw DomainError("cap_last needs the last hole fixed");
    }
    std::vector<f::Word> images(static_cast<std::size_t>(k));
    for (int p = 0; p + 1 < k; ++p) {
      images[static_cast<std::size_t>(p)] = {f::gen(p)};
    }
    PositionalMap r;
    r.holes = k - 1;
    r.perm.assign(m.perm.begin(), m.perm.end() - 1);
    for (int p = 0; p + 1 < k; ++p) {
      r.arcs.push_back(f::substitute(m.arcs[static_cast<std::size_t>(p)], images));
    }
    return r;
  }

  namespace {
    FramedBraidWord lift(FramedBraidWord const& w, int k) {
      return FramedBraidWord(k, w.letters());
    }

    // Positive permutation braid: bubble sort of the target positions.
    FramedBraidWord permutation_braid(std::vector<int> const& perm) {
      int const        k = static_cast<int>(perm.size());
      std::vector<int> at(perm.size());  // at[pos] = hole currently there
      std::iota(at.begin(), at.end(), 0);
      FramedBraidWord w(k);
      bool            moved = true;
      while (moved) {
        moved = false;
        for (int p = 0; p + 1 < k; ++p) {
          auto const i = static_cast<std::size_t>(p);
          if (perm[static_cast<std::size_t>(at[i])]
              > perm[static_cast<std::size_t>(at[i + 1])]) {
            std::swap(at[i], at[i + 1]);
            w.push(BraidLetter::sigma(p + 1, 1));
            moved = true;
          }
        }
      }
      return w;
    }

    // Pure braid pushing the last hole once around hole j, chosen so that the
    // arc to the last hole, read with y_{k-1} = 1, is exactly y_j^sign.
    FramedBraidWord const& push_word(int k, int j, int sign) {
      static std::mutex                                        mu;
      static std::map<std::tuple<int, int, int>, FramedBraidWord> cache;
      std::lock_guard<std::mutex>                              lock(mu);
      auto key = std::make_tuple(k, j, sign);
      if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
      }
      for (int s1 : {1, -1}) {
        for (int s2 : {1, -1}) {
          FramedBraidWord w(k);
          for (int i = k - 1; i > j + 1; --i) {
            w.push(BraidLetter::sigma(i, s1));
          }
          w.push(BraidLetter::sigma(j + 1, s2));
          w.push(BraidLetter::sigma(j + 1, s2));
          for (int i = j + 2; i <= k - 1; ++i) {
            w.push(BraidLetter::sigma(i, -s1));
          }
          auto     m = PositionalMap::of_word(w);
          f::Word  g = m.arcs.back();
          f::Word  bar;
          for (auto l : g) {
            if (f::index_of(l) != k - 1) {
              bar.push_back(l);
            }
          }
          f::reduce(bar);
          if (bar == f::Word{f::gen(j, sign)}) {
            return cache.emplace(key, std::move(w)).first->second;
          }
        }
      }
      throw NonConvergenceError("no push braid realizes y_" + std::to_string(j + 1));
    }

    FramedBraidWord comb(PositionalMap const& a, long& budget) {
      int const k = a.holes;
      if (--budget < 0) {
        throw NonConvergenceError("braid extraction exceeded its step budget");
      }
      FramedBraidWord out(k);
      FramedBraidWord rest(k);
      PositionalMap   u = a;
      if (k > 1) {
        rest = lift(comb(cap_last(a), budget), k);
        u    = compose(PositionalMap::of_word(rest.inverse()), a);
      }
      f::Word gamma;
      for (auto l : u.arcs.back()) {
        if (f::index_of(l) != k - 1) {
          gamma.push_back(l);
        }
      }
      f::reduce(gamma);
      for (auto l : gamma) {
        if ((budget -= 1) < 0) {
          throw NonConvergenceError("braid extraction exceeded its step budget");
        }
        out.append(push_word(k, f::index_of(l), l > 0 ? 1 : -1));
      }
      PositionalMap r = compose(PositionalMap::of_word(out.inverse()), u);
      int           e = f::exponent_sum(r.arcs.back(), k - 1);
      for (int s = 0; s < std::abs(e); ++s) {
        out.push(BraidLetter::frame(k, e > 0 ? -1 : 1));
      }
      out.append(rest);
      return out;
    }
  }  // namespace

  FramedBraidWord braid_word_of(PositionalMap const& m, long budget) {
    int const       k    = m.holes;
    if (k < 1) {
      throw DimensionError("braid extraction needs at least one hole");
    }
    FramedBraidWord perm = permutation_braid(m.perm);
    PositionalMap pure = compose(PositionalMap::of_word(perm.inverse()), m);
    FramedBraidWord w  = comb(pure, budget);
    w.append(perm);
    if (!(PositionalMap::of_word(w) == m)) {
      throw NonConvergenceError("extracted braid does not reproduce the map");
    }
    return w;
  }

}  // namespace tmcg
