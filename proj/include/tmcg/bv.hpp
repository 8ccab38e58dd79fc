#pragma once

#include <string>
#include <string_view>

#include "tmcg/belement.hpp"
#include "tmcg/braid.hpp"
#include "tmcg/tree.hpp"

namespace tmcg {

  // A finite rooted binary tree with at least two leaves. It is stored as the
  // unrooted tree whose third branch is the root edge and is never expanded,
  // so leaves 0..n-1 are the rooted leaves left to right and the root edge is
  // the outer leaf.
  class RootedTree {
   public:
    RootedTree() = default;  // a single caret
    static RootedTree from_tree(Tree t);
    // Rooted notation: "(,)" is a caret, "((,),)" adds one on the left leaf.
    static RootedTree parse(std::string_view text);

    Tree const& tree() const noexcept {
      return _t;
    }
    std::size_t leaves() const noexcept {
      return _t.level() - 1;
    }

    RootedTree expand_at(std::size_t i) const;
    RootedTree contract(std::size_t i) const;
    bool       is_caret(std::size_t i) const;
    RootedTree merge(RootedTree const& o) const;
    bool       is_subtree_of(RootedTree const& o) const;

    std::string to_string() const;

    bool operator==(RootedTree const&) const = default;

   private:
    explicit RootedTree(Tree t) : _t(std::move(t)) {}
    Tree _t;
  };

  // A braided tree pair: leaf i of the source travels along strand i of the
  // braid and lands on leaf perm_of(braid)[i] of the target.
  struct BVElement {
    RootedTree target;
    RootedTree source;
    BraidWord  braid{2};

    BVElement() = default;
    BVElement(RootedTree tgt, RootedTree src, BraidWord w);

    std::size_t leaves() const noexcept {
      return source.leaves();
    }

    BVElement expand_source_at(std::size_t i) const;
    BVElement with_source(RootedTree const& t) const;
    BVElement with_target(RootedTree const& t) const;

    std::string to_string() const;

    // Literal equality of representatives; see bv_equal.
    bool operator==(BVElement const&) const = default;
  };

  // A and B are the usual generators of F acting on the rooted tree; C and
  // pi0 braid the leaves of (,(,)) by s1 s2 and s1. With these choices
  // beta -> C, alpha -> A' C B, pi -> pi0 sends T and V into the projection.
  struct BVGenerators {
    BVElement A, B, C, pi0;
  };

  BVGenerators const& bv_generators();

  BVElement bv_reduce(BVElement x);
  BVElement bv_multiply(BVElement const& a, BVElement const& b);  // a after b
  BVElement bv_invert(BVElement const& a);
  BVElement bv_power(BVElement const& a, int e);
  bool      bv_equal(BVElement const& a, BVElement const& b);
  bool      bv_is_identity(BVElement const& a);

  // Words over A B C P (P = pi0) with the grammar of parse_word.
  BVElement bv_parse(std::string_view text);

  // The braid w acting on the leaves of `support`.
  BVElement iota_embed(BraidWord const& w, RootedTree const& support);

  VElement project_v(BVElement const& x);
  BElement embed_bv(BVElement const& x);

  // Some rooted tree with `level` leaves plus root on which x is iota of a
  // single crossing sigma_j; j = 0 when there is none.
  struct IotaWitness {
    RootedTree support;
    int        crossing = 0;
  };
  IotaWitness iota_witness(BVElement const& x, std::size_t level);

}  // namespace tmcg
