#include "tmcg/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "tmcg/bv.hpp"
#include "tmcg/errors.hpp"

namespace tmcg {

  using json = nlohmann::ordered_json;

  namespace {

    Relator rel(std::string id, Model m, std::string w, Expect e = Expect::Identity) {
      return {std::move(id), m, std::move(w), e, 0, 0};
    }

    void add_all(Suite& s, std::string const& prefix, Model m,
                 std::vector<std::string> const& words) {
      int k = 0;
      for (auto const& w : words) {
        char id[64];
        std::snprintf(id, sizeof id, "%s.%02d", prefix.c_str(), ++k);
        s.relators.push_back(rel(id, m, w));
      }
    }

    std::vector<std::string> const kVpres = {
        "p^2",
        "b^3",
        "a^4",
        "p^b p = b",
        "(b a)^5",
        "(a p)^3",
        "[p, a^2 p a^2]",
        "[b a p^b, p^(a^2)]",
        "[p^(a^2), p^b p^(a^2) p^b]",
        "(a^2 p^b a^3 b^2)^2 = (p^b a^3 b^2 a^2)^2",
        "a^2 b a^2 b^2 a^3 b^2 a^2 b^2 a^2 = (a^3 b^2 a^2 b a^2 p^b)^2",
    };

    std::vector<std::string> const kPres0 = {
        "[t,t1]",
        "[t,t2]",
        "[t,p]",
        "t1 p = p t2",
        "t2 p = p t1",
        "p^2 = t t1' t2'",
        "b^3",
        "b = t p^b p",
        "(b a)^5",
        "(a p)^3 = t2'",
        "a^4",
        "[p, a^2 p a^2]",
        "[t3,p]",
        "[t4,p]",
        "a t1 a' = t2",
        "[t1,t3]",
        "[t3, p^b t3 (p^b)']",
        "[t3, p^b p^(a^2) (p^b)']",
        "[p^(a^2), p^b p^(a^2) (p^b)']",
        "[b a p^b, p^(a^2)]",
        "b a t2 (b a)' = p^b t3 (p^b)'",
        "b a t3 (b a)' = p^b t4 (p^b)'",
        "b a t4 (b a)' = t2",
        "t = a^2 t a^2",
        "(a^2 p^b a^3 b^2)^2 = (p^b a^3 b^2 a^2)^2",
        "a^2 b a^2 p p^b a^3 b^2 a^2 b^2 a^2 = (a^3 b^2 a^2 b a^2 p^b)^2",
    };

    std::vector<std::string> const kTpres = {
        "a^4",
        "b^3",
        "(b a)^5",
        "[b a b, a^2 b a b a^2]",
        "[b a b, a^2 b^2 a^2 b a b a^2 b a^2]",
    };

    std::vector<std::string> const kStabV1 = {
        "[t,t1]", "[t,t2]", "[t,p]", "t1 p = p t2", "t2 p = p t1",
        "p^2 = t t1' t2'", "b^3", "b = t p^b p",
    };

    std::vector<std::string> const kStabV2 = {
        "(a^2)^2", "[p, a^2 p a^2]", "t1 p = p t2", "t2 p = p t1",
        "[t1, a^2 p a^2]", "[t2, a^2 p a^2]", "[t1,t2]", "[t1,t3]",
        "[t1,t4]", "[t2,t3]", "[t2,t4]", "p^2 t1 t2 = a^2 p^2 t1 t2 a^2",
    };

    std::vector<std::string> const kStabV3 = {
        "(p^(a^2))^2 = t t3' t4'",
        "(p^b)^2 = t2 t' t1'",
        "[p^(a^2), p^b p^(a^2) (p^b)']",
        "t3 p^(a^2) = p^(a^2) t4",
        "t4 p^(a^2) = p^(a^2) t3",
        "[p^(a^2), t]",
        "[p^(a^2), t1]",
        "[p^(a^2), (p^b)' t3 p^b]",
        "[p^(a^2), (p^b)' t4 p^b]",
        "p^b t = t1 p^b",
        "p^b t1 = t p^b",
        "[p^b, t2]",
        "[t2,t3]",
        "[t2,t1]",
        "[t3,t]",
        "[t3,t1]",
        "[t3, p^b t3 (p^b)']",
        "[t,t1]",
    };

    std::vector<std::string> const kStabSigma = {
        "a^4", "a t1 a' = t2", "a t2 a' = t3", "a t3 a' = t4", "a t4 a' = t1",
        "[t1,t2]", "[t1,t3]", "[t1,t4]", "[t2,t3]", "[t2,t4]", "[t3,t4]",
        "[t1, a t1 a']", "[t1, a^2 t1 a^2]",
    };

    char const* model_name(Model m) {
      switch (m) {
        case Model::V: return "V";
        case Model::T: return "T";
        case Model::B: return "B";
        case Model::BV: return "BV";
        case Model::BVproj: return "BVproj";
      }
      return "?";
    }

    Model model_of(std::string const& s) {
      for (Model m : {Model::V, Model::T, Model::B, Model::BV, Model::BVproj}) {
        if (s == model_name(m)) {
          return m;
        }
      }
      throw std::invalid_argument("unknown model: " + s);
    }

    char const* expect_name(Expect e) {
      switch (e) {
        case Expect::Identity: return "identity";
        case Expect::NonIdentity: return "non-identity";
        case Expect::Iota: return "iota";
      }
      return "?";
    }

    Expect expect_of(std::string const& s) {
      for (Expect e : {Expect::Identity, Expect::NonIdentity, Expect::Iota}) {
        if (s == expect_name(e)) {
          return e;
        }
      }
      throw std::invalid_argument("unknown expectation: " + s);
    }

    VElement eval_projected(BWord const& w) {
      auto const& g = bv_generators();
      VElement const c  = project_v(g.C);
      VElement const c2 = project_v(bv_multiply(bv_invert(g.A), bv_multiply(g.C, g.B)));
      VElement const images[4] = {VElement(), project_v(g.pi0), c, c2};
      VElement acc;
      for (auto l : w.letters) {
        VElement const& x = images[static_cast<std::size_t>(free::index_of(l))];
        acc               = multiply_v(acc, l > 0 ? x : invert_v(x));
      }
      return acc;
    }

  }  // namespace

  std::vector<Suite> builtin_suites() {
    std::vector<Suite> out;

    Suite vpres{"vpres", {}};
    add_all(vpres, "vpres", Model::V, kVpres);
    out.push_back(vpres);

    Suite tpres{"tpres", {}};
    add_all(tpres, "tpres", Model::T, kTpres);
    out.push_back(tpres);

    Suite pres0{"pres0", {}};
    add_all(pres0, "pres0", Model::B, kPres0);
    out.push_back(pres0);

    Suite stab{"stabilizers", {}};
    add_all(stab, "v1", Model::B, kStabV1);
    add_all(stab, "v2", Model::B, kStabV2);
    add_all(stab, "v3", Model::B, kStabV3);
    add_all(stab, "sigma", Model::B, kStabSigma);
    out.push_back(stab);

    Suite bvid{"bv-identities", {}};
    Relator pi1 = rel("pi.1", Model::BV, "P^(A' C B)", Expect::Iota);
    pi1.level    = 5;
    pi1.crossing = 2;
    bvid.relators.push_back(pi1);
    for (int n = 2; n <= 5; ++n) {
      Relator r  = rel("pi." + std::to_string(n), Model::BV,
                       "P^(A' C B A^" + std::to_string(n - 1) + ")", Expect::Iota);
      r.level    = n + 4;
      r.crossing = n + 1;
      bvid.relators.push_back(r);
    }
    bvid.relators.push_back(rel("f.01", Model::BV, "[A B', A' B A]"));
    bvid.relators.push_back(rel("f.02", Model::BV, "[A B', A^2' B A^2]"));
    add_all(bvid, "proj", Model::BVproj, kVpres);
    out.push_back(bvid);

    Suite ctl{"controls", {}};
    ctl.relators.push_back(rel("ctl.01", Model::T, "(b a)^4", Expect::NonIdentity));
    ctl.relators.push_back(rel("ctl.02", Model::V, "a^3", Expect::NonIdentity));
    ctl.relators.push_back(rel("ctl.03", Model::B, "p^2", Expect::NonIdentity));
    ctl.relators.push_back(rel("ctl.04", Model::B, "(a p)^3 = t2", Expect::NonIdentity));
    ctl.relators.push_back(rel("ctl.05", Model::BV, "P^2", Expect::NonIdentity));
    out.push_back(ctl);

    return out;
  }

  std::vector<Suite> parse_suites(std::string const& text) {
    json const         doc = json::parse(text);
    std::vector<Suite> out;
    for (auto const& s : doc.at("suites")) {
      Suite suite{s.at("name").get<std::string>(), {}};
      for (auto const& r : s.at("relators")) {
        Relator x;
        x.id       = r.at("id").get<std::string>();
        x.model    = model_of(r.at("model").get<std::string>());
        x.word     = r.at("word").get<std::string>();
        x.expect   = expect_of(r.value("expect", std::string("identity")));
        x.level    = r.value("level", 0);
        x.crossing = r.value("crossing", 0);
        suite.relators.push_back(std::move(x));
      }
      out.push_back(std::move(suite));
    }
    return out;
  }

  std::string suites_to_json(std::vector<Suite> const& suites) {
    json doc;
    doc["version"] = 1;
    doc["suites"]  = json::array();
    for (auto const& s : suites) {
      json js;
      js["name"]     = s.name;
      js["relators"] = json::array();
      for (auto const& r : s.relators) {
        json jr;
        jr["id"]     = r.id;
        jr["model"]  = model_name(r.model);
        jr["word"]   = r.word;
        jr["expect"] = expect_name(r.expect);
        if (r.expect == Expect::Iota) {
          jr["level"]    = r.level;
          jr["crossing"] = r.crossing;
        }
        js["relators"].push_back(jr);
      }
      doc["suites"].push_back(js);
    }
    return doc.dump(2);
  }

  std::vector<Suite> load_suites() {
    char const* path = std::getenv(kFixtureEnv);
    if (path == nullptr || *path == '\0') {
      return builtin_suites();
    }
    std::ifstream in(path);
    if (!in) {
      throw std::runtime_error(std::string("cannot read fixture file ") + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_suites(buf.str());
  }

  Suite const& find_suite(std::vector<Suite> const& suites, std::string const& name) {
    for (auto const& s : suites) {
      if (s.name == name) {
        return s;
      }
    }
    throw std::out_of_range("unknown suite: " + name);
  }

  std::string digest_of(std::string const& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
      h ^= c;
      h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
  }

  RelatorRecord evaluate(Relator const& r, long budget) {
    RelatorRecord out;
    out.id   = r.id;
    out.word = r.word;
    bool        identity = false;
    std::string canon;
    try {
      switch (r.model) {
        case Model::V:
        case Model::T: {
          BWord const w = parse_word(r.word);
          if (r.model == Model::T) {
            for (auto l : w.letters) {
              auto const g = free::index_of(l);
              if (g != static_cast<int>(Gen::alpha) && g != static_cast<int>(Gen::beta)) {
                throw DomainError("T words use only a and b");
              }
            }
          }
          VElement const x = project_v(w);
          identity         = is_identity(x);
          canon            = x.to_string();
          break;
        }
        case Model::B: {
          BElement const x = BElement::of_word(parse_word(r.word));
          identity         = b_is_identity(x);
          canon            = normalize(x, budget).to_string();
          break;
        }
        case Model::BV: {
          BVElement const x = bv_reduce(bv_parse(r.word));
          canon             = x.to_string();
          if (r.expect == Expect::Iota) {
            auto const w = iota_witness(x, static_cast<std::size_t>(r.level));
            out.verdict  = w.crossing == 0
                               ? "not a single crossing"
                               : "s" + std::to_string(w.crossing) + " on " + w.support.to_string();
            out.pass   = w.crossing == r.crossing;
            out.digest = digest_of(canon);
            return out;
          }
          identity = bv_is_identity(x);
          break;
        }
        case Model::BVproj: {
          VElement const x = eval_projected(parse_word(r.word));
          identity         = is_identity(x);
          canon            = x.to_string();
          break;
        }
      }
    } catch (NonConvergenceError const& e) {
      out.verdict      = "non-convergence";
      out.nonconverged = true;
      out.digest       = digest_of("");
      return out;
    }
    out.verdict = identity ? "identity" : "non-identity";
    out.pass    = identity == (r.expect == Expect::Identity);
    out.digest  = digest_of(canon);
    return out;
  }

  Certificate run_suite(Suite const& s, RunOptions const& opt) {
    auto const  start = std::chrono::steady_clock::now();
    Certificate c;
    c.suite = s.name;
    c.records.resize(s.relators.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next++) < s.relators.size();) {
        c.records[i] = evaluate(s.relators[i], opt.budget);
      }
    };
    int const                jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }
    c.pass    = c.passed() == c.records.size();
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
  }

  std::size_t Certificate::passed() const {
    std::size_t n = 0;
    for (auto const& r : records) {
      n += r.pass ? 1 : 0;
    }
    return n;
  }

  bool Certificate::nonconverged() const {
    for (auto const& r : records) {
      if (r.nonconverged) {
        return true;
      }
    }
    return false;
  }

  std::string Certificate::to_json() const {
    return to_json(true);
  }

  std::string Certificate::to_json(bool timing) const {
    json doc;
    doc["suite"]   = suite;
    doc["pass"]    = pass;
    doc["passed"]  = passed();
    doc["total"]   = records.size();
    doc["records"] = json::array();
    for (auto const& r : records) {
      json jr;
      jr["suite"]   = suite;
      jr["relator"] = r.id;
      jr["word"]    = r.word;
      jr["verdict"] = r.verdict;
      jr["pass"]    = r.pass;
      jr["digest"]  = r.digest;
      doc["records"].push_back(jr);
    }
    if (timing) {
      doc["seconds"] = seconds;
    }
    return doc.dump(2);
  }

}  // namespace tmcg
