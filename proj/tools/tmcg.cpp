#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tmcg/bv.hpp"
#include "tmcg/errors.hpp"
#include "tmcg/explorer.hpp"
#include "tmcg/suites.hpp"

using namespace tmcg;
using json = nlohmann::ordered_json;

namespace {

  enum Exit { kPass = 0, kFail = 1, kUsage = 2, kNonConvergence = 3 };

  struct Value {
    std::string canonical;
    bool        identity = false;
  };

  Value evaluate_in(std::string const& group, std::string const& word) {
    if (group == "V" || group == "T") {
      BWord const w = parse_word(word);
      if (group == "T") {
        for (auto l : w.letters) {
          auto const g = free::index_of(l);
          if (g != static_cast<int>(Gen::alpha) && g != static_cast<int>(Gen::beta)) {
            throw DomainError("T words use only a and b");
          }
        }
      }
      VElement const x = project_v(w);
      return {x.to_string(), is_identity(x)};
    }
    if (group == "B") {
      BElement const x = BElement::parse(word);
      return {x.to_string(), b_is_identity(x)};
    }
    BVElement const x = bv_reduce(bv_parse(word));
    return {x.to_string(), bv_is_identity(x)};
  }

  bool equal_in(std::string const& group, std::string const& u, std::string const& v) {
    if (group == "B") {
      return b_equal(BElement::parse(u), BElement::parse(v));
    }
    if (group == "BV") {
      return bv_equal(bv_parse(u), bv_parse(v));
    }
    evaluate_in(group, u);  // alphabet checks for T
    evaluate_in(group, v);
    return project_v(parse_word(u)) == project_v(parse_word(v));
  }

  int run_verify(std::string const& suite, long iters, int jobs, std::string const& out) {
    auto const suites = load_suites();
    std::vector<Suite> chosen;
    if (suite == "all") {
      chosen = suites;
    } else {
      chosen.push_back(find_suite(suites, suite));
    }
    json report;
    report["environment"] = {
        {"compiler", __VERSION__},
        {"iters", iters},
        {"jobs", jobs},
        {"fixtures", std::getenv(kFixtureEnv) ? std::getenv(kFixtureEnv) : "builtin"},
    };
    report["certificates"] = json::array();
    bool all_pass = true;
    bool stalled  = false;
    for (auto const& s : chosen) {
      Certificate const c = run_suite(s, {jobs, iters});
      std::printf("%-14s %3zu/%-3zu %s  %.3fs\n", c.suite.c_str(), c.passed(), c.records.size(),
                  c.pass ? "PASS" : "FAIL", c.seconds);
      for (auto const& r : c.records) {
        if (!r.pass) {
          std::printf("  %s  %s  -> %s\n", r.id.c_str(), r.word.c_str(), r.verdict.c_str());
        }
      }
      all_pass = all_pass && c.pass;
      stalled  = stalled || c.nonconverged();
      report["certificates"].push_back(json::parse(c.to_json()));
    }
    report["pass"] = all_pass;
    if (!out.empty()) {
      std::ofstream f(out);
      if (!f) {
        std::fprintf(stderr, "cannot write %s\n", out.c_str());
        return kUsage;
      }
      f << report.dump(2) << '\n';
    }
    if (stalled) {
      return kNonConvergence;
    }
    return all_pass ? kPass : kFail;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thompson groups, braided tree pairs and the universal mapping class group"};
  app.require_subcommand(1);

  std::vector<std::string> const groups{"V", "T", "BV", "B"};
  long        iters = 1'000'000;
  std::string group;
  std::string word;
  std::string other;

  auto* eval = app.add_subcommand("eval", "print the normal form of a word");
  eval->add_option("group", group, "V, T, BV or B")->required()->check(CLI::IsMember(groups));
  eval->add_option("word", word, "word; empty for the identity");
  eval->add_option("--iters", iters, "normal form step budget")->check(CLI::PositiveNumber);

  auto* equal = app.add_subcommand("equal", "decide equality of two words");
  equal->add_option("group", group, "V, T, BV or B")->required()->check(CLI::IsMember(groups));
  equal->add_option("lhs", word, "first word")->required();
  equal->add_option("rhs", other, "second word")->required();

  std::string suite = "all";
  int         jobs  = 1;
  std::string out;
  auto*       verify = app.add_subcommand("verify", "run relator suites and write certificates");
  verify->add_option("--suite", suite, "vpres, pres0, tpres, stabilizers, bv-identities, controls or all");
  verify->add_option("--iters", iters, "normal form step budget")->check(CLI::PositiveNumber);
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "JSON report path");

  int   radius     = 3;
  int   max_radius = 6;
  auto* ball       = app.add_subcommand("ball", "summarize a ball in the Cayley graph of T");
  ball->add_option("--radius", radius, "ball radius")->check(CLI::NonNegativeNumber);
  ball->add_option("--max-radius", max_radius, "largest radius allowed");
  ball->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  set_default_budget(iters);
  try {
    if (*eval) {
      Value const v = evaluate_in(group, word);
      std::printf("%s\n%s\n", v.canonical.c_str(), v.identity ? "identity" : "non-identity");
      return kPass;
    }
    if (*equal) {
      bool const same = equal_in(group, word, other);
      std::printf("%s\n", same ? "equal" : "different");
      return same ? kPass : kFail;
    }
    if (*verify) {
      return run_verify(suite, iters, jobs, out);
    }
    if (*ball) {
      BallSummary const b = cayley_ball(radius, max_radius, jobs);
      json j{{"radius", b.radius}, {"nodes", b.nodes}, {"edges", b.edges}, {"spheres", b.spheres}};
      std::printf("%s\n", j.dump().c_str());
      return kPass;
    }
  } catch (ParseError const& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return kUsage;
  } catch (NonConvergenceError const& e) {
    std::fprintf(stderr, "non-convergence: %s\n", e.what());
    return kNonConvergence;
  } catch (ResourceError const& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kUsage;
  } catch (std::out_of_range const& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return kUsage;
  } catch (std::exception const& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
