#include <gtest/gtest.h>

#include "support.hpp"
#include "wsg/graph.hpp"
#include "wsg/topology.hpp"
#include "wsg/verify.hpp"

using namespace wsg;
using wsg::testing::disc_graph;
using wsg::testing::three_cut_dipole;

TEST(Validate, SingleDiscIsValid) { EXPECT_TRUE(validate(disc_graph(3)).ok()); }

TEST(Validate, DipoleIsValid) { EXPECT_TRUE(validate(gen_dipole(4)).ok()); }

TEST(Validate, MismatchedChordPairIsReported) {
  StrandedGraph g = gen_dipole(4);
  Vertex& v = g.vertices.begin()->second;
  Chord& ch = v.chords.front();
  ch.pair = ColorPair(ch.pair.lo == 0 ? 3 : 0, 4);
  ValidationReport rep = validate(g);
  ASSERT_FALSE(rep.ok());
  bool found = false;
  for (const auto& viol : rep.violations) found |= viol.rule == "chord pair inconsistent";
  EXPECT_TRUE(found) << rep.to_string();
}

TEST(Validate, StatsRefusesInvalidGraph) {
  StrandedGraph g = gen_dipole(3);
  g.vertices.begin()->second.chords.pop_back();
  EXPECT_THROW(stats(g), InvalidGraph);
}

TEST(Stats, Dipole) {
  CountsRecord c = stats(gen_dipole(4));
  EXPECT_EQ(c.V, 2);
  EXPECT_EQ(c.E, 5);
  EXPECT_EQ(c.f, 0);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.r, 1);
  EXPECT_EQ(c.nullity, 4);
}

TEST(Stats, SingleDisc) {
  CountsRecord c = stats(disc_graph(4));
  EXPECT_EQ(c.V, 1);
  EXPECT_EQ(c.E, 0);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.r, 0);
  EXPECT_EQ(c.nullity, 0);
}

TEST(Stats, ThreeCutDipole) {
  CountsRecord c = stats(three_cut_dipole());
  EXPECT_EQ(c.V, 2);
  EXPECT_EQ(c.E, 2);
  EXPECT_EQ(c.f, 6);
  EXPECT_EQ(c.k, 1);
  EXPECT_EQ(c.r, 1);
  EXPECT_EQ(c.nullity, 1);
}

TEST(Normalize, DiscOnlyBecomesEmpty) {
  StrandedGraph g = normalize(disc_graph(2, 3));
  EXPECT_EQ(g, StrandedGraph::empty(2));
}

TEST(Normalize, RemovesAddedDiscs) {
  StrandedGraph g = three_cut_dipole();
  EXPECT_EQ(normalize(with_discs(g, 3)), g);
}

TEST(Normalize, RemovesDiscsOfLoopContraction) {
  StrandedGraph g = trivial_loop_example(4, 4);
  StrandedGraph con = contract(g, g.edges.begin()->first);
  EXPECT_EQ(con.discs, 4);
  EXPECT_EQ(normalize(con).discs, 0);
}

TEST(WithDiscs, EmptyPlusOne) { EXPECT_EQ(with_discs(StrandedGraph::empty(3), 1), disc_graph(3)); }

TEST(WithDiscs, DipolePlusTwo) {
  CountsRecord c = stats(with_discs(gen_dipole(4), 2));
  EXPECT_EQ(c.V, 4);
  EXPECT_EQ(c.k, 3);
}

TEST(WithDiscs, RoundTripPreservesCensus) {
  StrandedGraph g = with_discs(three_cut_dipole(), 2);
  CensusRecord a = census(g), b = census(with_discs(normalize(g), g.discs));
  EXPECT_EQ(a.V, b.V);
  EXPECT_EQ(a.F_int, b.F_int);
  EXPECT_EQ(a.B_int, b.B_int);
  EXPECT_EQ(a.B_ext, b.B_ext);
  EXPECT_EQ(a.boundary, b.boundary);
}

TEST(WithDiscs, EachDiscAddsOneVertexComponentAndFace) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    StrandedGraph g = gen_random(3, 1, 2, seed, 10);
    CensusRecord a = census(g), b = census(with_discs(g, 1));
    EXPECT_EQ(b.V, a.V + 1);
    EXPECT_EQ(b.k, a.k + 1);
    EXPECT_EQ(b.F_int, a.F_int + 1);
    EXPECT_EQ(b.E, a.E);
    EXPECT_EQ(b.f, a.f);
    EXPECT_EQ(b.B_int, a.B_int);
    EXPECT_EQ(b.B_ext, a.B_ext);
    EXPECT_EQ(b.boundary, a.boundary);
  }
}

TEST(Stats, ComponentsMatchUnionFind) {
  StrandedGraph g = three_cut_dipole();
  g = cut(g, EdgeId(1));
  g = cut(g, EdgeId(2));
  EXPECT_EQ(stats(g).k, 2);
  EXPECT_EQ(stats(disjoint_union(g, gen_dipole(4))).k, 3);
}
