#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tmcg/tree.hpp"

namespace tmcg {

  // A tree pair with a leaf bijection: bij[i] is the index of the target leaf
  // that source leaf i is sent to.
  struct Symbol {
    Tree             target;
    Tree             source;
    std::vector<int> bij;

    Symbol() : bij{0, 1, 2} {}
    Symbol(Tree tgt, Tree src, std::vector<int> b);

    std::size_t level() const noexcept {
      return bij.size();
    }

    // Expands source leaf i and the target leaf it maps to.
    Symbol expand_source_at(std::size_t i) const;
    // Expands target leaf j and its preimage.
    Symbol expand_target_at(std::size_t j) const;

    // Expands until the source (resp. target) equals `t`, which must contain
    // the current one.
    Symbol with_source(Tree const& t) const;
    Symbol with_target(Tree const& t) const;

    // "tgt=(..) src=(..) bij=[..]", labels printed 1-based.
    std::string to_string() const;
    static Symbol parse(std::string_view text);

    bool operator==(Symbol const&) const = default;
  };

  // Reduced symbol, i.e. a canonical element of Thompson's group V.
  class VElement {
   public:
    VElement() = default;  // identity on the tripod
    explicit VElement(Symbol s);

    Symbol const& symbol() const noexcept {
      return _sym;
    }

    bool operator==(VElement const&) const = default;

    std::string to_string() const {
      return _sym.to_string();
    }

   private:
    Symbol _sym;
  };

  Symbol   reduce_symbol(Symbol s);
  VElement reduce(Symbol const& s);

  // a * b is a after b: [T2,T1,tau] * [T1,T0,sigma] = [T2,T0,tau o sigma].
  VElement multiply_v(VElement const& a, VElement const& b);
  VElement invert_v(VElement const& a);
  VElement power_v(VElement const& a, int e);

  bool is_identity(VElement const& a);

  struct Membership {
    bool in_T  = false;
    bool in_F  = false;
    int  shift = 0;  // cyclic shift when in_T
  };

  // Cyclic-shift test on any representative; the answer does not depend on it.
  Membership classify(VElement const& a);
  Membership classify_symbol(Symbol const& s);

  struct VGenerators {
    VElement pi, beta, alpha, t;
  };

  // pi swaps tripod labels 1, 2; beta sends label i to i+1 on the tripod;
  // alpha sends label i to i+1 on the tripod expanded at its third leaf;
  // t projects to the identity.
  VGenerators const& generator_images();

  // Tripod expanded at label 3, the support of alpha.
  Tree alpha_support();

  struct VElementHash {
    std::size_t operator()(VElement const& v) const;
  };

}  // namespace tmcg
