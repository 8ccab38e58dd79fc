#pragma once

#include <vector>

#include "tmcg/braid.hpp"
#include "tmcg/free_group.hpp"

namespace tmcg {

  // A mapping class of a disk with k holes that fixes the outer boundary,
  // recorded by its action on arcs. Holes sit at positions 0..k-1 left to
  // right; y_p is the loop around hole p based on the visible side, so
  // y_{k-1} ... y_0 is the outer boundary. Hole p goes to position perm[p]
  // and the arc from the outer boundary to hole p goes to arcs[p] followed
  // by the standard arc to perm[p]. On loops: y_p -> arcs[p] y_{perm[p]} arcs[p]^-1.
  struct PositionalMap {
    int                     holes = 0;
    std::vector<int>        perm;
    std::vector<free::Word> arcs;

    static PositionalMap identity(int k);

    // The letters of a framed braid word: sigma_i swaps positions i-1, i
    // counterclockwise, f_j twists hole j-1 once to the right.
    static PositionalMap letter(int k, BraidLetter l);

    // Product in time order: first w[0], then w[1], ...
    static PositionalMap of_word(FramedBraidWord const& w);

    free::Word apply(free::Word const& w) const;

    bool is_identity() const;
    bool is_pure() const;

    bool operator==(PositionalMap const&) const = default;
  };

  // a after b.
  PositionalMap compose(PositionalMap const& a, PositionalMap const& b);

  // Fills the last hole: y_{k-1} = 1. Requires hole k-1 to be fixed.
  PositionalMap cap_last(PositionalMap const& m);

  // A framed braid word w with of_word(w) == m. Throws NonConvergenceError
  // if `budget` elementary steps do not suffice.
  FramedBraidWord braid_word_of(PositionalMap const& m, long budget);

}  // namespace tmcg
