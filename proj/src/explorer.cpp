#include "tmcg/explorer.hpp"

#include <algorithm>
#include <future>
#include <unordered_set>

#include "tmcg/errors.hpp"

namespace tmcg {

  namespace f = tmcg::free;

  BElement eval_move_word(BWord const& moves) {
    return BElement::of_word(BWord{f::Word(moves.letters.rbegin(), moves.letters.rend())});
  }

  BElement eval_move_word(std::string_view text) {
    return eval_move_word(parse_move_word(text));
  }

  namespace {
    std::vector<VElement> step_set(bool inverted) {
      auto const& g = generator_images();
      std::vector<VElement> s{g.alpha, invert_v(g.alpha), g.beta, invert_v(g.beta)};
      if (inverted) {
        std::swap(s[0], s[1]);
        std::swap(s[2], s[3]);
      }
      return s;
    }
  }  // namespace

  BallSummary cayley_ball(int radius, int max_radius, int jobs, bool inverted) {
    if (radius < 0 || radius > max_radius) {
      throw ResourceError("ball radius exceeds the configured bound");
    }
    auto const steps = step_set(inverted);
    std::unordered_set<VElement, VElementHash> seen{VElement()};
    std::vector<VElement>                      frontier{VElement()};
    BallSummary                                out;
    out.radius = radius;
    out.spheres.push_back(1);
    for (int r = 1; r <= radius; ++r) {
      // Products are formed in parallel; insertion stays serial.
      std::size_t const chunks = static_cast<std::size_t>(std::max(1, jobs));
      std::vector<std::future<std::vector<VElement>>> parts;
      std::size_t const per = (frontier.size() + chunks - 1) / chunks;
      for (std::size_t c = 0; c * per < frontier.size(); ++c) {
        parts.push_back(std::async(std::launch::async, [&, c] {
          std::vector<VElement> local;
          auto const end = std::min(frontier.size(), (c + 1) * per);
          for (std::size_t i = c * per; i < end; ++i) {
            for (auto const& s : steps) {
              local.push_back(multiply_v(frontier[i], s));
            }
          }
          return local;
        }));
      }
      std::vector<VElement> next;
      for (auto& p : parts) {
        for (auto& x : p.get()) {
          if (seen.insert(x).second) {
            next.push_back(std::move(x));
          }
        }
      }
      out.spheres.push_back(next.size());
      frontier = std::move(next);
    }
    out.nodes = seen.size();
    // Each undirected edge is {x, x s} for exactly one positive step s.
    for (auto const& x : seen) {
      for (std::size_t k : {std::size_t{0}, std::size_t{2}}) {
        if (seen.count(multiply_v(x, steps[k]))) {
          ++out.edges;
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> brute_force_spheres(int radius) {
    auto const& g = generator_images();
    VElement const images[2] = {g.alpha, g.beta};
    std::vector<std::pair<int, VElement>> words{{0, VElement()}};
    std::vector<f::Word>                  layer{{}};
    for (int len = 1; len <= radius; ++len) {
      std::vector<f::Word> next;
      for (auto const& w : layer) {
        for (int l : {1, -1, 2, -2}) {
          if (!w.empty() && w.back() == -l) {
            continue;
          }
          f::Word u = w;
          u.push_back(l);
          VElement x;
          for (auto c : u) {
            VElement const& y = images[std::abs(c) - 1];
            x                 = multiply_v(x, c > 0 ? y : invert_v(y));
          }
          words.emplace_back(len, std::move(x));
          next.push_back(std::move(u));
        }
      }
      layer = std::move(next);
    }
    std::vector<std::size_t> spheres(static_cast<std::size_t>(radius) + 1, 0);
    for (std::size_t i = 0; i < words.size(); ++i) {
      bool earlier = false;
      for (std::size_t j = 0; j < i && !earlier; ++j) {
        earlier = is_identity(multiply_v(invert_v(words[j].second), words[i].second));
      }
      if (!earlier) {
        ++spheres[static_cast<std::size_t>(words[i].first)];
      }
    }
    return spheres;
  }

  bool psl2_probe(int max_len) {
    BWord const x = parse_word("a^2");
    BWord const ys[2] = {parse_word("b"), parse_word("b^2")};
    // Enumerate syllable sequences starting with either kind.
    std::vector<std::pair<BWord, bool>> layer{{x, true}, {ys[0], false}, {ys[1], false}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<std::pair<BWord, bool>> next;
      for (auto const& [w, ends_x] : layer) {
        if (is_identity(project_v(w)) || b_is_identity(BElement::of_word(w))) {
          return false;
        }
        if (len == max_len) {
          continue;
        }
        if (ends_x) {
          next.emplace_back(w * ys[0], false);
          next.emplace_back(w * ys[1], false);
        } else {
          next.emplace_back(w * x, true);
        }
      }
      layer = std::move(next);
    }
    return true;
  }

}  // namespace tmcg
