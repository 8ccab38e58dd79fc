#include "tmcg/braid_oracle.hpp"

#include <numeric>
#include <unordered_map>

#include "tmcg/errors.hpp"

namespace tmcg::oracle {

  namespace {
    // Crossing letter code c in [0, 2(n-1)): index c/2 + 1, sign by parity.
    BraidLetter decode(int c) {
      return BraidLetter::sigma(c / 2 + 1, c % 2 ? -1 : 1);
    }
    int encode(BraidLetter const& l) {
      return 2 * (l.index - 1) + (l.exponent < 0 ? 1 : 0);
    }
    int inv(int c) {
      return c ^ 1;
    }
    int idx(int c) {
      return c / 2;
    }
  }  // namespace

  BraidRewritingBall::BraidRewritingBall(int strands, int max_length)
      : _n(strands), _max(max_length), _alphabet(2 * (strands - 1)) {
    if (strands < 1 || max_length < 0) {
      throw DimensionError("bad rewriting ball parameters");
    }
    std::uint64_t total = 0, layer = 1;
    for (int len = 0; len <= _max; ++len) {
      _offset.push_back(total);
      total += layer;
      layer *= static_cast<std::uint64_t>(std::max(_alphabet, 1));
      if (total > (1ULL << 31)) {
        throw ResourceError("rewriting ball too large");
      }
      if (_alphabet == 0) {
        break;
      }
    }
    _offset.push_back(total);
    _parent.resize(total);
    std::iota(_parent.begin(), _parent.end(), 0u);
    if (_alphabet == 0) {
      return;
    }

    std::vector<int> w, v;
    for (int len = 0; len <= _max; ++len) {
      w.assign(static_cast<std::size_t>(len), 0);
      for (;;) {
        std::uint32_t const me = index(w);
        // insert x x' at every gap
        if (len + 2 <= _max) {
          for (int p = 0; p <= len; ++p) {
            for (int c = 0; c < _alphabet; ++c) {
              v = w;
              v.insert(v.begin() + p, {c, inv(c)});
              unite(me, index(v));
            }
          }
        }
        for (int p = 0; p + 3 <= len; ++p) {
          int a = w[p], b = w[p + 1], c = w[p + 2];
          // s_i s_j s_i = s_j s_i s_j for |i-j| = 1, same sign
          if (a == c && (a & 1) == (b & 1) && std::abs(idx(a) - idx(b)) == 1) {
            v         = w;
            v[p]      = b;
            v[p + 1]  = a;
            v[p + 2]  = b;
            unite(me, index(v));
          }
        }
        for (int p = 0; p + 2 <= len; ++p) {
          if (std::abs(idx(w[p]) - idx(w[p + 1])) >= 2) {
            v = w;
            std::swap(v[p], v[p + 1]);
            unite(me, index(v));
          }
        }
        // next word of this length
        int k = len - 1;
        while (k >= 0 && w[k] == _alphabet - 1) {
          w[k--] = 0;
        }
        if (k < 0) {
          break;
        }
        ++w[k];
      }
    }
  }

  std::uint32_t BraidRewritingBall::index(std::vector<int> const& code) const {
    std::uint64_t v = 0;
    for (int c : code) {
      v = v * static_cast<std::uint64_t>(_alphabet) + static_cast<std::uint64_t>(c);
    }
    return static_cast<std::uint32_t>(_offset[code.size()] + v);
  }

  std::uint32_t BraidRewritingBall::find(std::uint32_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  void BraidRewritingBall::unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      _parent[std::max(a, b)] = std::min(a, b);
    }
  }

  std::uint32_t BraidRewritingBall::class_of(FramedBraidWord const& w) {
    if (w.strands() != _n || w.has_framing()) {
      throw DomainError("rewriting ball expects an unframed word on "
                        + std::to_string(_n) + " strands");
    }
    if (static_cast<int>(w.size()) > _max) {
      throw ResourceError("word longer than the rewriting ball");
    }
    std::vector<int> code;
    for (auto const& l : w.letters()) {
      code.push_back(encode(l));
    }
    return find(index(code));
  }

  std::pair<FramedBraidWord, std::vector<long>> push_framings_right(
      FramedBraidWord const& w) {
    std::vector<BraidLetter> crossings;
    std::vector<long>        pending(static_cast<std::size_t>(w.strands()), 0);
    for (auto const& l : w.letters()) {
      if (l.kind == BraidLetter::Kind::Frame) {
        pending[static_cast<std::size_t>(l.index - 1)] += l.exponent;
      } else {
        crossings.push_back(l);
        std::swap(pending[static_cast<std::size_t>(l.index - 1)],
                  pending[static_cast<std::size_t>(l.index)]);
      }
    }
    return {FramedBraidWord(w.strands(), std::move(crossings)), std::move(pending)};
  }

  OracleReport compare_with_rewriting(int strands, int max_word, int ball_length) {
    BraidRewritingBall ball(strands, ball_length);
    int const          cross = 2 * (strands - 1);
    int const          alpha = cross + 2 * strands;

    struct KeyHash {
      std::size_t operator()(BraidKey const& k) const {
        return hash_key(k);
      }
    };
    struct OracleKey {
      std::uint32_t     cls;
      std::vector<long> framing;
      bool operator==(OracleKey const&) const = default;
    };
    struct OracleHash {
      std::size_t operator()(OracleKey const& k) const {
        std::size_t h = k.cls;
        for (long f : k.framing) {
          h = h * 1000003u + static_cast<std::size_t>(f + 64);
        }
        return h;
      }
    };
    std::unordered_map<BraidKey, std::uint32_t, KeyHash>    key_ids;
    std::unordered_map<OracleKey, std::uint32_t, OracleHash> oracle_ids;
    std::vector<std::uint32_t> oracle_of_key;  // key class -> oracle class
    std::vector<std::uint32_t> key_of_oracle;

    OracleReport rep;
    rep.strands = strands;
    std::vector<int> w;
    for (int len = 0; len <= max_word; ++len) {
      w.assign(static_cast<std::size_t>(len), 0);
      for (;;) {
        std::vector<BraidLetter> letters;
        for (int c : w) {
          letters.push_back(c < cross ? decode(c)
                                      : BraidLetter::frame((c - cross) / 2 + 1,
                                                           (c - cross) % 2 ? -1 : 1));
        }
        FramedBraidWord fw(strands, std::move(letters));
        auto [crossing, framing] = push_framings_right(fw);
        OracleKey ok{ball.class_of(crossing), std::move(framing)};

        auto [kit, knew] = key_ids.try_emplace(
            braid_key(fw), static_cast<std::uint32_t>(key_ids.size()));
        auto [oit, onew] = oracle_ids.try_emplace(
            std::move(ok), static_cast<std::uint32_t>(oracle_ids.size()));
        if (knew) {
          oracle_of_key.push_back(oit->second);
        }
        if (onew) {
          key_of_oracle.push_back(kit->second);
        }
        if (oracle_of_key[kit->second] != oit->second
            || key_of_oracle[oit->second] != kit->second) {
          if (rep.mismatches++ == 0) {
            rep.example = fw.to_string();
          }
        }
        ++rep.words;

        int k = len - 1;
        while (k >= 0 && w[k] == alpha - 1) {
          w[k--] = 0;
        }
        if (k < 0) {
          break;
        }
        ++w[k];
      }
    }
    rep.key_classes  = key_ids.size();
    rep.ball_classes = oracle_ids.size();
    return rep;
  }

}  // namespace tmcg::oracle
