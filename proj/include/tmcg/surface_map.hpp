#pragma once

#include <string>
#include <vector>

#include "tmcg/framed_action.hpp"
#include "tmcg/free_group.hpp"
#include "tmcg/tree.hpp"
#include "tmcg/velement.hpp"

namespace tmcg {

  // An asymptotically rigid mapping class, given on a support: source tree X,
  // target tree Y of the same level n, a permutation of hole labels, and for
  // every source hole i the image of the visible arc from hole 0 to hole i.
  //
  // Words live in pi_1 of the support of Y based on its visible side,
  // presented as <z_0..z_{n-1} | z_{n-1} ... z_1 z_0 = 1>; z_{n-1} is
  // eliminated, so words are reduced words over z_0..z_{n-2}. arcs[0] is
  // always empty.
  struct SurfaceMap {
    Tree                    target;
    Tree                    source;
    std::vector<int>        perm;
    std::vector<free::Word> arcs;

    SurfaceMap();  // identity on the tripod
    SurfaceMap(Tree tgt, Tree src, std::vector<int> p, std::vector<free::Word> a);

    static SurfaceMap identity(Tree const& t);
    // Rigid lift of a symbol of T; throws DomainError outside T.
    static SurfaceMap rigid(Symbol const& s);

    std::size_t level() const noexcept {
      return perm.size();
    }

    SurfaceMap expand_source_at(std::size_t i) const;
    SurfaceMap expand_target_at(std::size_t j) const;
    SurfaceMap with_source(Tree const& t) const;
    SurfaceMap with_target(Tree const& t) const;

    // Image of z_l as a loop based on the visible side of the target.
    free::Word image_of_loop(int l) const;
    free::Word apply(free::Word const& w) const;

    // True when the boundary relation is preserved.
    bool is_consistent() const;

    std::string to_string() const;

    // Literal equality of representatives; see equal_maps.
    bool operator==(SurfaceMap const&) const = default;
  };

  // z_l of a level-n support as a reduced word (z_{n-1} expanded).
  free::Word loop_word(int l, int n);

  // Image of w under the inclusion induced by expanding hole j of a level-n
  // support.
  free::Word expand_word(free::Word const& w, int n, int j);

  // a after b.
  SurfaceMap compose_maps(SurfaceMap const& a, SurfaceMap const& b);

  // Smallest support representative.
  SurfaceMap reduce_map(SurfaceMap m);

  bool equal_maps(SurfaceMap const& a, SurfaceMap const& b);

  Symbol symbol_of(SurfaceMap const& m);

  // Hub-fixed maps Y -> Y in positional coordinates around the outer leaf o
  // of Y: position p holds label o+1+p (mod n).
  PositionalMap to_positional(SurfaceMap const& m);
  SurfaceMap    from_positional(Tree const& y, PositionalMap const& pm);

  // The framed braid w on the n-1 holes of y other than the outer one.
  SurfaceMap braid_map(Tree const& y, FramedBraidWord const& w);

  // m = braid_map(support, braid) after rigid(t_part).
  struct MapNormalForm {
    VElement        t_part;
    Tree            support;
    LeafAddress     outer;
    FramedBraidWord braid;

    std::string to_string() const;
    bool        operator==(MapNormalForm const&) const = default;
  };

  MapNormalForm normal_form(SurfaceMap const& m, long budget);
  SurfaceMap    from_normal_form(MapNormalForm const& nf);
  SurfaceMap    invert_map(SurfaceMap const& m, long budget);

}  // namespace tmcg
