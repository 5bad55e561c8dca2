#pragma once

#include "wsg/io.hpp"
#include "wsg/surgery.hpp"

namespace wsg::testing {

/// Rank-4 dipole with the edges of colors 0, 3, 4 cut; edges 1 and 2 stay.
inline StrandedGraph three_cut_dipole() {
  StrandedGraph g = gen_dipole(4);
  for (int c : {0, 3, 4}) g = cut(g, EdgeId(c));
  return g;
}

inline StrandedGraph disc_graph(int rank, int m = 1) {
  StrandedGraph g = StrandedGraph::empty(rank);
  g.discs = m;
  return g;
}

}  // namespace wsg::testing
