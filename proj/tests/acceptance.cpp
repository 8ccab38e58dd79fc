#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "tmcg/braid_oracle.hpp"
#include "tmcg/bv.hpp"
#include "tmcg/explorer.hpp"
#include "tmcg/suites.hpp"

using namespace tmcg;

namespace {

  struct Outcome {
    bool        pass = false;
    std::string detail;
  };

  int failures = 0;

  void criterion(int id, char const* name, double limit_s, std::function<Outcome()> const& body) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = body();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const s    = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const   fast = limit_s <= 0 || s < limit_s;
    bool const   ok   = o.pass && fast;
    failures += ok ? 0 : 1;
    std::printf("[%s] %d %s: %s (%.3fs%s)\n", ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), s,
                fast ? "" : ", over time limit");
    std::fflush(stdout);
  }

  std::string tally(Certificate const& c) {
    std::string s = std::to_string(c.passed()) + "/" + std::to_string(c.records.size());
    for (auto const& r : c.records) {
      if (!r.pass) {
        s += " [" + r.id + " " + r.verdict + "]";
      }
    }
    return s;
  }

  Certificate run_prefix(Suite const& s, std::string const& prefix) {
    Suite sub{s.name + ":" + prefix, {}};
    for (auto const& r : s.relators) {
      if (r.id.rfind(prefix, 0) == 0) {
        sub.relators.push_back(r);
      }
    }
    return run_suite(sub, {4, 1'000'000});
  }

  bool exact_order(VElement const& x, int n) {
    for (int k = 1; k < n; ++k) {
      if (is_identity(power_v(x, k))) {
        return false;
      }
    }
    return is_identity(power_v(x, n));
  }

  FramedBraidWord random_braid(std::mt19937& rng, int n, int len) {
    FramedBraidWord w(n);
    for (int i = 0; i < len; ++i) {
      int const e = rng() % 2 ? 1 : -1;
      if (n > 1 && rng() % 3) {
        w.push(BraidLetter::sigma(1 + static_cast<int>(rng() % (n - 1)), e));
      } else {
        w.push(BraidLetter::frame(1 + static_cast<int>(rng() % n), e));
      }
    }
    return w;
  }

  BWord random_word(std::mt19937& rng, int len) {
    BWord w;
    for (int i = 0; i < len; ++i) {
      w = w * BWord::gen(static_cast<Gen>(rng() % 4), rng() % 2 ? 1 : -1);
    }
    return w;
  }

  BVElement random_bv(std::mt19937& rng, int len) {
    auto const& g = bv_generators();
    BVElement const* gens[4] = {&g.A, &g.B, &g.C, &g.pi0};
    BVElement x;
    for (int i = 0; i < len; ++i) {
      BVElement const& y = *gens[rng() % 4];
      x                  = bv_multiply(x, rng() % 2 ? y : bv_invert(y));
    }
    return x;
  }

}  // namespace

int main() {
  auto const suites = load_suites();

  criterion(1, "V presentation and generator orders", 1.0, [&] {
    auto const  c = run_suite(find_suite(suites, "vpres"), {1, 1'000'000});
    auto const& g = generator_images();
    bool const  orders = exact_order(g.pi, 2) && exact_order(g.beta, 3)
                        && exact_order(g.alpha, 4) && exact_order(multiply_v(g.beta, g.alpha), 5);
    return Outcome{c.pass && orders,
                   "relators " + tally(c) + ", orders " + (orders ? "2,3,4,5 exact" : "wrong")};
  });

  criterion(2, "T presentation", 1.0, [&] {
    auto const c = run_suite(find_suite(suites, "tpres"), {1, 1'000'000});
    return Outcome{c.pass, "relators " + tally(c)};
  });

  criterion(3, "presentation of B", 60.0, [&] {
    auto const c = run_suite(find_suite(suites, "pres0"), {4, 1'000'000});
    return Outcome{c.pass, "relators " + tally(c)};
  });

  criterion(4, "stabilizer presentations", 60.0, [&] {
    auto const& s    = find_suite(suites, "stabilizers");
    bool        pass = true;
    std::string detail;
    for (char const* p : {"v1.", "v2.", "v3.", "sigma."}) {
      auto const c = run_prefix(s, p);
      pass         = pass && c.pass;
      detail += std::string(p) + " " + tally(c) + "  ";
    }
    return Outcome{pass, detail};
  });

  criterion(5, "braided Thompson identities", 10.0, [&] {
    auto const& s    = find_suite(suites, "bv-identities");
    bool        pass = true;
    std::string detail;
    for (char const* p : {"pi.", "f.", "proj."}) {
      auto const c = run_prefix(s, p);
      pass         = pass && c.pass;
      detail += std::string(p) + " " + tally(c) + "  ";
    }
    return Outcome{pass, detail};
  });

  criterion(6, "braid equality oracle", 0, [&] {
    std::string detail;
    bool        pass = true;
    for (int n = 1; n <= 3; ++n) {
      auto const r = oracle::compare_with_rewriting(n, 6, 10);
      pass         = pass && r.mismatches == 0;
      detail += std::to_string(n) + " strands: " + std::to_string(r.words) + " words, "
                + std::to_string(r.key_classes) + " classes, " + std::to_string(r.mismatches)
                + " mismatches; ";
    }
    std::mt19937 rng(2024);
    int          good = 0;
    for (int i = 0; i < 200; ++i) {
      int const  n = 1 + static_cast<int>(rng() % 4);
      auto const u = random_braid(rng, n, 1 + static_cast<int>(rng() % 8));
      auto const v = random_braid(rng, n, 1 + static_cast<int>(rng() % 8));
      int const  k = 1 + static_cast<int>(rng() % n);
      bool const retract = equal_braids(delete_strand(cable(u, k), k + 1), u);
      int const  k2      = perm_of(u)[static_cast<std::size_t>(k - 1)] + 1;
      bool const mult    = equal_braids(cable(compose_framed(u, v), k),
                                        compose_framed(cable(u, k), cable(v, k2)));
      good += retract && mult ? 1 : 0;
    }
    pass = pass && good == 200;
    detail += "cable/delete " + std::to_string(good) + "/200";
    return Outcome{pass, detail};
  });

  criterion(7, "structural properties", 0, [&] {
    std::mt19937 rng(7);
    int          axioms_v = 0, axioms_b = 0, axioms_bv = 0, confl = 0, hom = 0;
    int const    n        = 1000;
    for (int i = 0; i < n; ++i) {
      auto const wa = random_word(rng, 1 + static_cast<int>(rng() % 8));
      auto const wb = random_word(rng, 1 + static_cast<int>(rng() % 8));
      auto const wc = random_word(rng, 1 + static_cast<int>(rng() % 8));

      auto const a = project_v(wa), b = project_v(wb), c = project_v(wc);
      axioms_v += multiply_v(multiply_v(a, b), c) == multiply_v(a, multiply_v(b, c))
                      && multiply_v(a, VElement()) == a
                      && is_identity(multiply_v(a, invert_v(a)));

      auto const x = BElement::of_word(wa), y = BElement::of_word(wb), z = BElement::of_word(wc);
      axioms_b += b_equal(b_multiply(b_multiply(x, y), z), b_multiply(x, b_multiply(y, z)))
                  && b_equal(b_multiply(x, BElement()), x)
                  && b_is_identity(b_multiply(x, b_invert(x)));

      auto const p = random_bv(rng, 1 + static_cast<int>(rng() % 5));
      auto const q = random_bv(rng, 1 + static_cast<int>(rng() % 5));
      auto const r = random_bv(rng, 1 + static_cast<int>(rng() % 5));
      axioms_bv += bv_equal(bv_multiply(bv_multiply(p, q), r), bv_multiply(p, bv_multiply(q, r)))
                   && bv_equal(bv_multiply(p, BVElement()), p)
                   && bv_is_identity(bv_multiply(p, bv_invert(p)));

      // Reduction lands on the same representative from any expansion.
      Symbol     s = a.symbol();
      SurfaceMap m = x.map();
      BVElement  e = p;
      for (int k = 0; k < 3; ++k) {
        s = s.expand_source_at(rng() % s.level());
        m = m.expand_source_at(rng() % m.level());
        e = e.expand_source_at(rng() % e.leaves());
      }
      confl += reduce(s) == a && reduce_map(m) == reduce_map(x.map()) && bv_reduce(e) == bv_reduce(p);

      hom += project_v(b_multiply(x, y)) == multiply_v(project_v(x), project_v(y))
             && project_v(x) == a
             && project_v(bv_multiply(p, q)) == multiply_v(project_v(p), project_v(q))
             && b_equal(embed_bv(bv_multiply(p, q)), b_multiply(embed_bv(p), embed_bv(q)));
    }
    bool const probe = psl2_probe(12);
    bool const pass  = axioms_v == n && axioms_b == n && axioms_bv == n && confl == n && hom == n && probe;
    return Outcome{pass, "axioms V " + std::to_string(axioms_v) + ", B " + std::to_string(axioms_b)
                             + ", BV " + std::to_string(axioms_bv) + ", confluence "
                             + std::to_string(confl) + ", homomorphism " + std::to_string(hom)
                             + " of " + std::to_string(n) + "; free product probe to 12 "
                             + (probe ? "ok" : "failed")};
  });

  criterion(8, "negative controls", 0, [&] {
    auto const c = run_suite(find_suite(suites, "controls"), {1, 1'000'000});
    return Outcome{c.pass, "detected " + tally(c)};
  });

  criterion(9, "Cayley ball spheres", 10.0, [&] {
    std::string detail;
    bool        pass = true;
    for (int r = 0; r <= 3; ++r) {
      auto const ball  = cayley_ball(r, 6, 2);
      auto const mirror = cayley_ball(r, 6, 2, true);
      auto const brute = brute_force_spheres(r);
      pass             = pass && ball.spheres == brute && mirror.spheres == ball.spheres;
      if (r == 3) {
        detail = "spheres";
        for (auto x : ball.spheres) {
          detail += " " + std::to_string(x);
        }
        detail += ", nodes " + std::to_string(ball.nodes) + ", edges " + std::to_string(ball.edges);
      }
    }
    return Outcome{pass, detail};
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
