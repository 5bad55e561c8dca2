#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "wsg/surgery.hpp"
#include "wsg/topology.hpp"
#include "wsg/verify.hpp"

using namespace wsg;
using wsg::testing::disc_graph;
using wsg::testing::three_cut_dipole;

TEST(Cut, DipoleEdge) {
  CountsRecord c = stats(cut(gen_dipole(4), EdgeId(0)));
  EXPECT_EQ(c.f, 2);
  EXPECT_EQ(c.E, 4);
  EXPECT_EQ(c.k, 1);
}

TEST(Cut, ChordsUntouched) {
  StrandedGraph g = three_cut_dipole();
  StrandedGraph h = cut(g, EdgeId(2));
  for (const auto& [vid, v] : g.vertices) EXPECT_EQ(h.vertex(vid).chords, v.chords);
  EXPECT_EQ(h.half_edges.size(), 8u);
}

TEST(Cut, BothEdgesDisconnect) {
  CountsRecord c = stats(cut(cut(three_cut_dipole(), EdgeId(1)), EdgeId(2)));
  EXPECT_EQ(c.k, 2);
  EXPECT_EQ(c.f, 10);
}

TEST(Cut, UnknownEdge) { EXPECT_THROW(cut(gen_dipole(3), EdgeId(99)), UnknownEntity); }

TEST(Contract, MergesToSingleVertexWithLoop) {
  StrandedGraph h = contract(three_cut_dipole(), EdgeId(2));
  EXPECT_EQ(h.vertices.size(), 1u);
  ASSERT_EQ(h.edges.size(), 1u);
  EXPECT_TRUE(h.edge(EdgeId(1)).is_loop());
  EXPECT_EQ(h.half_edges.size(), 6u);
  EXPECT_TRUE(validate(h).ok());
}

TEST(Contract, FourInnerLoop) {
  StrandedGraph g = trivial_loop_example(4, 4);
  EdgeId e = g.edges.begin()->first;
  CountsRecord before = stats(g), after = stats(contract(g, e));
  EXPECT_EQ(contract(g, e).discs, 4);
  EXPECT_EQ(after.V, before.V + 3);
  EXPECT_EQ(after.E, before.E - 1);
  EXPECT_EQ(after.k, before.k + 3);
}

TEST(Contract, ClosedGraphKeepsEmptyBoundary) {
  StrandedGraph d = gen_dipole(4);
  for (EdgeId e : d.edge_ids()) EXPECT_EQ(boundary(contract(d, e)).stats, boundary(d).stats);
}

TEST(Classify, ThreeCutDipole) {
  StrandedGraph g = three_cut_dipole();
  EXPECT_EQ(classify(g, EdgeId(1)).kind, EdgeClass::Kind::Regular);
  EXPECT_EQ(classify(cut(g, EdgeId(2)), EdgeId(1)).kind, EdgeClass::Kind::Bridge);
}

// After contracting e2 the remaining loop closes the {1,2} face, but the
// merged vertex stays a single sector, so the loop is not trivial.
TEST(Classify, ContractedLoopIsOneInnerNonTrivial) {
  EdgeClass c = classify(contract(three_cut_dipole(), EdgeId(2)), EdgeId(1));
  EXPECT_EQ(c.kind, EdgeClass::Kind::Loop);
  EXPECT_EQ(c.p_inner, 1);
  EXPECT_FALSE(c.trivial);
}

TEST(Classify, TrivialLoopFixtures) {
  for (int n = 3; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      StrandedGraph g = trivial_loop_example(n, p);
      EdgeClass c = classify(g, EdgeId(0));
      EXPECT_EQ(c.kind, EdgeClass::Kind::Loop);
      EXPECT_EQ(c.p_inner, p);
      EXPECT_TRUE(c.trivial) << "n=" << n << " p=" << p;
    }
}

TEST(SpanningSubsets, ThreeCutDipole) {
  std::multiset<int> f;
  for (const auto& s : spanning_subsets(three_cut_dipole())) f.insert(s.counts().f);
  EXPECT_EQ(f, (std::multiset<int>{6, 8, 8, 10}));
}

TEST(SpanningSubsets, SingleDisc) {
  auto states = spanning_subsets(disc_graph(3));
  ASSERT_EQ(states.size(), 1u);
  EXPECT_TRUE(states[0].subset().empty());
}

TEST(SpanningSubsets, Dipole) {
  auto states = spanning_subsets(gen_dipole(3));
  ASSERT_EQ(states.size(), 16u);
  EXPECT_EQ(states.back().subset().size(), 4u);
  EXPECT_EQ(states.back().counts().F_int, 6);
}

TEST(SpanningSubsets, MaterializeMatchesCounts) {
  StrandedGraph g = gen_random(4, 1, 2, 5, 8);
  const int f0 = stats(g).f, E = static_cast<int>(g.edges.size());
  for (const auto& s : spanning_subsets(g)) {
    StrandedGraph m = s.materialize();
    EXPECT_EQ(state_counts(m), s.counts());
    EXPECT_EQ(s.counts().f, f0 + 2 * (E - static_cast<int>(s.subset().size())));
    EXPECT_EQ(m.vertices.size(), g.vertices.size());
  }
}

TEST(SpanningSubsets, Budget) { EXPECT_THROW(spanning_subsets(gen_chain(4, 2), 9), BudgetExceeded); }

TEST(FullContract, DipoleLeavesNoEdges) {
  StrandedGraph d = gen_dipole(4);
  std::vector<EdgeId> order = d.edge_ids();
  std::reverse(order.begin(), order.end());
  StrandedGraph h = full_contract(d, order);
  EXPECT_TRUE(h.edges.empty());
  EXPECT_TRUE(boundary(h).stats.V == 0);
}

TEST(FullContract, OrderIndependentBoundary) {
  StrandedGraph g = three_cut_dipole();
  BoundaryStats a = boundary(full_contract(g, {EdgeId(1), EdgeId(2)})).stats;
  BoundaryStats b = boundary(full_contract(g, {EdgeId(2), EdgeId(1)})).stats;
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, boundary(g).stats);
}

TEST(FullContract, RejectsNonPermutation) {
  EXPECT_THROW(full_contract(three_cut_dipole(), {EdgeId(1)}), std::invalid_argument);
}

TEST(Contract, CommutesWithDiscs) {
  StrandedGraph g = three_cut_dipole();
  EXPECT_EQ(normalize(contract(with_discs(g, 2), EdgeId(2))), normalize(contract(g, EdgeId(2))));
}
