#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tmcg {

  // Address of a vertex of the planar trivalent tree: one of the three
  // branches leaving the tripod center, then a path of left/right turns.
  struct LeafAddress {
    int         branch = 1;  // 1, 2 or 3
    std::string path;        // over {'L', 'R'}

    LeafAddress() = default;
    LeafAddress(int b, std::string p);

    LeafAddress left() const {
      return {branch, path + 'L'};
    }
    LeafAddress right() const {
      return {branch, path + 'R'};
    }

    bool is_prefix_of(LeafAddress const& other) const;

    // Lexicographic order with L < R coincides with the counterclockwise
    // order of leaves of any tree containing both addresses.
    auto operator<=>(LeafAddress const&) const = default;
    bool operator==(LeafAddress const&) const  = default;

    std::string to_string() const;  // "(1,LR)", "(3,e)" for the empty path
  };

  // A finite unrooted binary tree containing the tripod. Stored as its leaf
  // list in counterclockwise order, which is also the cyclic labeling: the
  // leaf at index i carries label i + 1.
  class Tree {
   public:
    // The tripod, level 3.
    Tree();

    // Validates that `leaves` is a complete tree in counterclockwise order.
    static Tree from_leaves(std::vector<LeafAddress> leaves);

    // Parses the balanced-parenthesis form, e.g. "(,,)" or "((,),,(,))".
    static Tree parse(std::string_view text);

    std::size_t level() const noexcept {
      return _leaves.size();
    }

    std::vector<LeafAddress> const& leaves() const noexcept {
      return _leaves;
    }
    LeafAddress const& leaf(std::size_t label_index) const {
      return _leaves.at(label_index);
    }

    // Index (label - 1) of a leaf; throws AddressError if it is not a leaf.
    std::size_t index_of(LeafAddress const& v) const;
    bool        has_leaf(LeafAddress const& v) const;

    // Adds a caret below a leaf: v is replaced by v.L, v.R which receive
    // consecutive labels.
    Tree expand(LeafAddress const& v) const;
    Tree expand_at(std::size_t label_index) const;

    // Smallest tree containing both.
    Tree merge(Tree const& other) const;

    // True when `other` is obtained from *this by expansions.
    bool is_subtree_of(Tree const& other) const;

    // Indices i such that leaves i, i+1 are the two children of one caret.
    bool is_caret(std::size_t i) const;

    // Removes the caret whose children are leaves i, i+1.
    Tree contract(std::size_t i) const;

    // Leaf lying on the path from the center to the reference end: branch 3
    // followed by left turns forever.
    std::size_t outer_leaf_index() const;

    std::string to_string() const;

    bool operator==(Tree const&) const = default;

   private:
    explicit Tree(std::vector<LeafAddress> leaves)
        : _leaves(std::move(leaves)) {}

    std::vector<LeafAddress> _leaves;
  };

  // The cyclic labeling of a tree, label i + 1 at position i.
  using CyclicLabeling = std::vector<LeafAddress>;

  CyclicLabeling cyclic_labels(Tree const& t);

  Tree expand(Tree const& t, LeafAddress const& v);

}  // namespace tmcg
