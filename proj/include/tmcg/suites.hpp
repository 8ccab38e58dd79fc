#pragma once

#include <string>
#include <vector>

namespace tmcg {

  // How a relator word is read and evaluated.
  //   V, T     words in t p b a evaluated in the tree-pair model
  //   B        words in t p b a evaluated in the mapping class model
  //   BV       words in A B C P evaluated on braided tree pairs
  //   BVproj   words in t p b a with b -> C, a -> A' C B, p -> P, t -> e,
  //            evaluated after projecting to V
  enum class Model { V, T, B, BV, BVproj };

  // What a relator must evaluate to.
  enum class Expect { Identity, NonIdentity, Iota };

  struct Relator {
    std::string id;
    Model       model  = Model::B;
    std::string word;
    Expect      expect = Expect::Identity;
    int         level    = 0;  // Iota: leaves + root of the support
    int         crossing = 0;  // Iota: the single generator sigma_j
  };

  struct Suite {
    std::string          name;
    std::vector<Relator> relators;
  };

  struct RelatorRecord {
    std::string id;
    std::string word;
    std::string verdict;
    std::string digest;
    bool        pass         = false;
    bool        nonconverged = false;
  };

  struct Certificate {
    std::string                suite;
    std::vector<RelatorRecord> records;
    bool                       pass    = false;
    double                     seconds = 0;

    std::size_t passed() const;
    bool        nonconverged() const;
    std::string to_json() const;  // without timing when `timing` is false
    std::string to_json(bool timing) const;
  };

  // Environment variable naming a JSON file that replaces the built-in table.
  inline constexpr char const* kFixtureEnv = "TMCG_FIXTURES";

  std::vector<Suite> builtin_suites();
  // Built-in table, or the file named by kFixtureEnv when set.
  std::vector<Suite> load_suites();
  std::vector<Suite> parse_suites(std::string const& json_text);
  std::string        suites_to_json(std::vector<Suite> const& suites);

  // Throws std::out_of_range for an unknown name.
  Suite const& find_suite(std::vector<Suite> const& suites, std::string const& name);

  struct RunOptions {
    int  jobs   = 1;
    long budget = 1'000'000;
  };

  RelatorRecord evaluate(Relator const& r, long budget);
  Certificate   run_suite(Suite const& s, RunOptions const& opt);

  // FNV-1a of a canonical serialization, as 16 hex digits.
  std::string digest_of(std::string const& text);

}  // namespace tmcg
