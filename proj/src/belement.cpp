#include "tmcg/belement.hpp"

#include <atomic>

#include "tmcg/errors.hpp"

namespace tmcg {

  namespace f = tmcg::free;

  namespace {
    std::atomic<long> g_budget{1'000'000};
  }

  long default_budget() noexcept {
    return g_budget.load();
  }

  void set_default_budget(long steps) noexcept {
    g_budget.store(steps);
  }

  BElement::BElement() : _cache(std::make_shared<Cache>()) {}

  BElement::BElement(SurfaceMap m)
      : _map(std::move(m)), _cache(std::make_shared<Cache>()) {}

  BElement BElement::of_word(BWord const& w) {
    auto const& g = b_generators();
    BElement const* pos[4] = {&g.t, &g.pi, &g.beta, &g.alpha};
    BElement const* neg[4] = {&g.t_inv, &g.pi_inv, &g.beta_inv, &g.alpha_inv};
    SurfaceMap acc;
    for (auto l : w.letters) {
      auto const i = static_cast<std::size_t>(f::index_of(l));
      acc = compose_maps(acc, (l > 0 ? pos[i] : neg[i])->map());
    }
    return BElement(reduce_map(std::move(acc)));
  }

  BElement BElement::parse(std::string_view text) {
    return of_word(parse_word(text));
  }

  BNormalForm const& BElement::normal_form() const {
    std::call_once(_cache->once, [this] {
      _cache->nf = tmcg::normal_form(_map, default_budget());
    });
    return *_cache->nf;
  }

  std::string BElement::to_string() const {
    return normal_form().to_string();
  }

  BGenerators const& b_generators() {
    static BGenerators const g = [] {
      BGenerators r;
      Tree const y;
      r.t     = BElement(SurfaceMap(y, y, {0, 1, 2}, {{}, {}, f::inverse(loop_word(2, 3))}));
      r.t_inv = BElement(SurfaceMap(y, y, {0, 1, 2}, {{}, {}, loop_word(2, 3)}));
      r.pi    = BElement(SurfaceMap(y, y, {1, 0, 2}, {{}, {f::gen(0)}, {f::gen(0)}}));
      r.pi_inv = BElement(invert_map(r.pi.map(), 1000));
      r.beta   = BElement(SurfaceMap::rigid(generator_images().beta.symbol()));
      r.beta_inv = BElement(compose_maps(r.beta.map(), r.beta.map()));
      Tree const x = alpha_support();
      r.alpha      = BElement(SurfaceMap::rigid(Symbol(x, x, {1, 2, 3, 0})));
      r.alpha_inv  = BElement(
          reduce_map(compose_maps(r.alpha.map(), compose_maps(r.alpha.map(), r.alpha.map()))));
      return r;
    }();
    return g;
  }

  BElement b_multiply(BElement const& a, BElement const& b) {
    return BElement(reduce_map(compose_maps(a.map(), b.map())));
  }

  BElement b_invert(BElement const& a, long budget) {
    return BElement(reduce_map(invert_map(a.map(), budget)));
  }

  BElement b_invert(BElement const& a) {
    return b_invert(a, default_budget());
  }

  BElement b_power(BElement const& a, int e) {
    BElement base = e < 0 ? b_invert(a) : a;
    BElement acc;
    for (int i = 0; i < std::abs(e); ++i) {
      acc = b_multiply(acc, base);
    }
    return acc;
  }

  bool b_equal(BElement const& a, BElement const& b) {
    return equal_maps(a.map(), b.map());
  }

  bool b_is_identity(BElement const& a) {
    return equal_maps(a.map(), SurfaceMap());
  }

  BNormalForm normalize(BElement const& a, long budget) {
    return tmcg::normal_form(a.map(), budget);
  }

  VElement project_v(BElement const& a) {
    return reduce(symbol_of(a.map()));
  }

  VElement project_v(BWord const& w) {
    auto const& g = generator_images();
    VElement const images[4] = {g.t, g.pi, g.beta, g.alpha};
    VElement acc;
    for (auto l : w.letters) {
      VElement const& x = images[static_cast<std::size_t>(f::index_of(l))];
      acc = multiply_v(acc, l > 0 ? x : invert_v(x));
    }
    return acc;
  }

  BElement t_section(VElement const& x) {
    return BElement(reduce_map(SurfaceMap::rigid(x.symbol())));
  }

}  // namespace tmcg
