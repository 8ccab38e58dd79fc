#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "doctest.h"
#include "tmcg/errors.hpp"
#include "tmcg/explorer.hpp"
#include "tmcg/suites.hpp"

using namespace tmcg;

TEST_CASE("fixture table survives a JSON round trip") {
  auto const a = builtin_suites();
  auto const b = parse_suites(suites_to_json(a));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    REQUIRE(a[i].relators.size() == b[i].relators.size());
    for (std::size_t j = 0; j < a[i].relators.size(); ++j) {
      CHECK(a[i].relators[j].word == b[i].relators[j].word);
      CHECK(a[i].relators[j].model == b[i].relators[j].model);
      CHECK(a[i].relators[j].expect == b[i].relators[j].expect);
      CHECK(a[i].relators[j].level == b[i].relators[j].level);
    }
  }
  CHECK(find_suite(a, "pres0").relators.size() == 26);
  CHECK(find_suite(a, "vpres").relators.size() == 11);
  CHECK_THROWS_AS(find_suite(a, "nope"), std::out_of_range);
}

TEST_CASE("certificates do not depend on parallelism") {
  auto const  suites = builtin_suites();
  auto const& s      = find_suite(suites, "stabilizers");
  auto const  serial   = run_suite(s, {1, 100000});
  auto const  parallel = run_suite(s, {4, 100000});
  CHECK(serial.to_json(false) == parallel.to_json(false));
  CHECK(serial.pass);
  CHECK(serial.to_json(false).find("\"digest\"") != std::string::npos);
}

TEST_CASE("fixture override through the environment") {
  char const* path = "tmcg_fixture_override.json";
  {
    std::ofstream f(path);
    f << R"({"version":1,"suites":[{"name":"mini","relators":[
          {"id":"m.1","model":"V","word":"b^3"},
          {"id":"m.2","model":"B","word":"p^2","expect":"non-identity"}]}]})";
  }
  setenv(kFixtureEnv, path, 1);
  auto const suites = load_suites();
  unsetenv(kFixtureEnv);
  std::remove(path);
  REQUIRE(suites.size() == 1);
  auto const c = run_suite(suites[0], {2, 1000});
  CHECK(c.pass);
  CHECK(c.records[1].verdict == "non-identity");
  CHECK_THROWS(parse_suites(R"({"suites":[{"name":"x","relators":[{"id":"1","model":"Q","word":"b"}]}]})"));
}

TEST_CASE("a tiny budget reports non-convergence") {
  Relator r{"nc", Model::B, "(a p b' t)^3", Expect::Identity, 0, 0};
  auto const rec = evaluate(r, 1);
  CHECK(rec.nonconverged);
  CHECK_FALSE(rec.pass);
}

TEST_CASE("move words and the Cayley graph") {
  CHECK(b_equal(eval_move_word("A B"), BElement::parse("b a")));
  CHECK(b_is_identity(eval_move_word("")));
  CHECK(b_is_identity(eval_move_word("B B B")));
  auto const w = parse_move_word("A P' B T");
  auto const u = parse_move_word("B A");
  CHECK(b_equal(eval_move_word(w * u), b_multiply(eval_move_word(u), eval_move_word(w))));
  CHECK(cayley_ball(0).nodes == 1);
  CHECK(cayley_ball(1).nodes == 5);
  CHECK(cayley_ball(3, 6, 3).spheres == brute_force_spheres(3));
  CHECK_THROWS_AS(cayley_ball(7), ResourceError);
  CHECK(psl2_probe(8));
}
