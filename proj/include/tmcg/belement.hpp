#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

#include "tmcg/bword.hpp"
#include "tmcg/surface_map.hpp"
#include "tmcg/velement.hpp"

namespace tmcg {

  // Step budget used by lazy normalization. The CLI sets it from --iters.
  long default_budget() noexcept;
  void set_default_budget(long steps) noexcept;

  using BNormalForm = MapNormalForm;

  // An element of the universal mapping class group B. The value is a
  // surface map; its normal form is computed on first request and shared
  // between copies.
  class BElement {
   public:
    BElement();
    explicit BElement(SurfaceMap m);

    static BElement of_word(BWord const& w);
    static BElement parse(std::string_view text);

    SurfaceMap const& map() const noexcept {
      return _map;
    }

    // Throws NonConvergenceError when the default budget runs out; a later
    // call with a larger budget retries.
    BNormalForm const& normal_form() const;

    std::string to_string() const;

   private:
    struct Cache {
      std::once_flag             once;
      std::optional<BNormalForm> nf;
    };
    SurfaceMap             _map;
    std::shared_ptr<Cache> _cache;
  };

  struct BGenerators {
    BElement t, pi, beta, alpha;
    BElement t_inv, pi_inv, beta_inv, alpha_inv;
  };

  // t twists the third boundary of the tripod; pi is the half twist
  // exchanging its first two holes; beta and alpha are rigid rotations.
  BGenerators const& b_generators();

  BElement b_multiply(BElement const& a, BElement const& b);  // a after b
  BElement b_invert(BElement const& a, long budget);
  BElement b_invert(BElement const& a);
  BElement b_power(BElement const& a, int e);

  bool b_equal(BElement const& a, BElement const& b);
  bool b_is_identity(BElement const& a);

  BNormalForm normalize(BElement const& a, long budget);

  // The forgetful map to V, computed from the surface map.
  VElement project_v(BElement const& a);
  // The same map computed letter by letter from generator images.
  VElement project_v(BWord const& w);

  // The rigid lift of an element of T; throws DomainError outside T.
  BElement t_section(VElement const& x);

}  // namespace tmcg
