#include "tmcg/tree.hpp"

#include <algorithm>

#include "tmcg/errors.hpp"

namespace tmcg {

  LeafAddress::LeafAddress(int b, std::string p) : branch(b), path(std::move(p)) {
    if (branch < 1 || branch > 3) {
      throw AddressError("branch must be 1, 2 or 3, found "
                         + std::to_string(branch));
    }
    for (char c : path) {
      if (c != 'L' && c != 'R') {
        throw AddressError("path letters must be L or R, found '"
                           + std::string(1, c) + "'");
      }
    }
  }

  bool LeafAddress::is_prefix_of(LeafAddress const& other) const {
    return branch == other.branch && other.path.size() >= path.size()
           && other.path.compare(0, path.size(), path) == 0;
  }

  std::string LeafAddress::to_string() const {
    return "(" + std::to_string(branch) + "," + (path.empty() ? "e" : path)
           + ")";
  }

  namespace {
    // Consumes the leaves of the subtree rooted at `root`, starting at `pos`.
    bool consume(std::vector<LeafAddress> const& leaves,
                 LeafAddress const&              root,
                 std::size_t&                    pos) {
      if (pos >= leaves.size() || !root.is_prefix_of(leaves[pos])) {
        return false;
      }
      if (leaves[pos] == root) {
        ++pos;
        return true;
      }
      return consume(leaves, root.left(), pos)
             && consume(leaves, root.right(), pos);
    }

    void render(std::vector<LeafAddress> const& leaves,
                LeafAddress const&              root,
                std::size_t&                    pos,
                std::string&                    out) {
      if (leaves[pos] == root) {
        ++pos;
        return;
      }
      out += '(';
      render(leaves, root.left(), pos, out);
      out += ',';
      render(leaves, root.right(), pos, out);
      out += ')';
    }

    struct TreeParser {
      std::string_view         text;
      std::size_t              pos = 0;
      std::vector<LeafAddress> leaves;

      char peek() const {
        return pos < text.size() ? text[pos] : '\0';
      }
      void expect(char c) {
        if (peek() != c) {
          throw ParseError(std::string("expected '") + c + "' in tree", pos);
        }
        ++pos;
      }
      void subtree(LeafAddress const& root) {
        if (peek() == '(') {
          ++pos;
          subtree(root.left());
          expect(',');
          subtree(root.right());
          expect(')');
        } else {
          leaves.push_back(root);
        }
      }
    };
  }  // namespace

  Tree::Tree() : _leaves{{1, ""}, {2, ""}, {3, ""}} {}

  Tree Tree::from_leaves(std::vector<LeafAddress> leaves) {
    std::size_t pos = 0;
    for (int b = 1; b <= 3; ++b) {
      if (!consume(leaves, LeafAddress(b, ""), pos)) {
        throw AddressError("leaf list does not form a tree");
      }
    }
    if (pos != leaves.size()) {
      throw AddressError("leaf list does not form a tree");
    }
    return Tree(std::move(leaves));
  }

  Tree Tree::parse(std::string_view text) {
    TreeParser p{text, 0, {}};
    p.expect('(');
    for (int b = 1; b <= 3; ++b) {
      p.subtree(LeafAddress(b, ""));
      p.expect(b < 3 ? ',' : ')');
    }
    if (p.pos != text.size()) {
      throw ParseError("trailing characters after tree", p.pos);
    }
    return Tree(std::move(p.leaves));
  }

  std::size_t Tree::index_of(LeafAddress const& v) const {
    auto it = std::lower_bound(_leaves.begin(), _leaves.end(), v);
    if (it == _leaves.end() || *it != v) {
      throw AddressError(v.to_string() + " is not a leaf of " + to_string());
    }
    return static_cast<std::size_t>(it - _leaves.begin());
  }

  bool Tree::has_leaf(LeafAddress const& v) const {
    return std::binary_search(_leaves.begin(), _leaves.end(), v);
  }

  Tree Tree::expand(LeafAddress const& v) const {
    return expand_at(index_of(v));
  }

  Tree Tree::expand_at(std::size_t i) const {
    if (i >= _leaves.size()) {
      throw AddressError("leaf index " + std::to_string(i) + " out of range");
    }
    std::vector<LeafAddress> r;
    r.reserve(_leaves.size() + 1);
    r.insert(r.end(), _leaves.begin(), _leaves.begin() + i);
    r.push_back(_leaves[i].left());
    r.push_back(_leaves[i].right());
    r.insert(r.end(), _leaves.begin() + i + 1, _leaves.end());
    return Tree(std::move(r));
  }

  Tree Tree::merge(Tree const& other) const {
    std::vector<LeafAddress> all;
    std::merge(_leaves.begin(),
               _leaves.end(),
               other._leaves.begin(),
               other._leaves.end(),
               std::back_inserter(all));
    all.erase(std::unique(all.begin(), all.end()), all.end());
    // In sorted order a proper prefix is immediately followed by one of its
    // extensions.
    std::vector<LeafAddress> r;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (k + 1 < all.size() && all[k].is_prefix_of(all[k + 1])) {
        continue;
      }
      r.push_back(all[k]);
    }
    return Tree(std::move(r));
  }

  bool Tree::is_subtree_of(Tree const& other) const {
    return merge(other) == other;
  }

  bool Tree::is_caret(std::size_t i) const {
    if (i + 1 >= _leaves.size()) {
      return false;
    }
    auto const& a = _leaves[i];
    auto const& b = _leaves[i + 1];
    if (a.branch != b.branch || a.path.empty()
        || a.path.size() != b.path.size() || a.path.back() != 'L'
        || b.path.back() != 'R') {
      return false;
    }
    return a.path.compare(0, a.path.size() - 1, b.path, 0, b.path.size() - 1)
           == 0;
  }

  Tree Tree::contract(std::size_t i) const {
    if (!is_caret(i)) {
      throw AddressError("leaves " + std::to_string(i) + ", "
                         + std::to_string(i + 1) + " do not form a caret");
    }
    std::vector<LeafAddress> r = _leaves;
    r[i].path.pop_back();
    r.erase(r.begin() + i + 1);
    return Tree(std::move(r));
  }

  std::size_t Tree::outer_leaf_index() const {
    for (std::size_t i = 0; i < _leaves.size(); ++i) {
      auto const& l = _leaves[i];
      if (l.branch == 3
          && std::all_of(
              l.path.begin(), l.path.end(), [](char c) { return c == 'L'; })) {
        return i;
      }
    }
    // Unreachable for a valid tree.
    throw AddressError("tree has no outer leaf");
  }

  std::string Tree::to_string() const {
    std::string out = "(";
    std::size_t pos = 0;
    for (int b = 1; b <= 3; ++b) {
      render(_leaves, LeafAddress(b, ""), pos, out);
      out += b < 3 ? ',' : ')';
    }
    return out;
  }

  CyclicLabeling cyclic_labels(Tree const& t) {
    return t.leaves();
  }

  Tree expand(Tree const& t, LeafAddress const& v) {
    return t.expand(v);
  }

}  // namespace tmcg
