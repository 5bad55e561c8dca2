#include <gtest/gtest.h>

#include "support.hpp"
#include "wsg/io.hpp"
#include "wsg/topology.hpp"

using namespace wsg;
using wsg::testing::three_cut_dipole;

TEST(Parse, CanonicalDipoleRoundTrip) {
  StrandedGraph d = gen_dipole(4);
  EXPECT_EQ(parse_wsg(emit_wsg(d)), d);
}

TEST(Parse, ChordToAbsentPreEdgeIsSemanticError) {
  std::string text = emit_wsg(gen_dipole(2));
  auto pos = text.find("chord 0 0.");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 10, "chord 0 77.");
  try {
    parse_wsg(text);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Semantic);
    EXPECT_GT(e.line(), 0);
  }
}

TEST(Parse, SyntaxErrorCarriesLine) {
  try {
    parse_wsg("rank 3\nvertex 0\n  pre x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.kind(), ParseError::Kind::Syntax);
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Parse, DiscOnlyDocument) {
  StrandedGraph g = parse_wsg("# two discs\nrank 3\ndiscs 2\n");
  EXPECT_EQ(g.rank, 3);
  EXPECT_EQ(g.discs, 2);
  EXPECT_TRUE(g.vertices.empty());
}

TEST(Emit, SingleDisc) {
  StrandedGraph g = StrandedGraph::empty(4);
  g.discs = 1;
  EXPECT_EQ(emit_wsg(g), "rank 4\ndiscs 1\n");
}

TEST(Emit, Idempotent) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::string t = emit_wsg(gen_random(4, 2, 2, seed, 10));
    EXPECT_EQ(emit_wsg(parse_wsg(t)), t);
  }
}

TEST(Emit, ThreeCutDipoleRecords) {
  std::string t = emit_wsg(three_cut_dipole());
  auto count = [&](const std::string& head) {
    int n = 0;
    for (std::size_t p = 0; (p = t.find("\n" + head + " ", p)) != std::string::npos; ++p) ++n;
    return n;
  };
  EXPECT_EQ(count("vertex"), 2);
  EXPECT_EQ(count("edge"), 2);
  EXPECT_EQ(count("half"), 6);
}

TEST(Json, RoundTrip) {
  StrandedGraph g = with_discs(three_cut_dipole(), 1);
  EXPECT_EQ(from_json(to_json(g)), g);
  EXPECT_EQ(parse_any(to_json(g).dump()), g);
  EXPECT_EQ(parse_any(emit_wsg(g)), g);
}

TEST(Generators, Dipole) {
  CensusRecord c = census(gen_dipole(4));
  EXPECT_EQ(c.V, 2);
  EXPECT_EQ(c.E, 5);
  EXPECT_EQ(c.F_int, 10);
  EXPECT_EQ(c.f, 0);
  StrandedGraph d1 = gen_dipole(1);
  EXPECT_EQ(d1.vertices.size(), 2u);
  EXPECT_EQ(d1.edges.size(), 2u);
  EXPECT_EQ(census(gen_dipole(3)).B(3), 4);
}

TEST(Generators, Chain) {
  CountsRecord a = stats(gen_chain(4, 2));
  EXPECT_EQ(a.V, 4);
  EXPECT_EQ(a.E, 10);
  EXPECT_EQ(a.k, 1);
  EXPECT_EQ(stats(gen_chain(3, 2)).nullity, 5);
  StrandedGraph g = gen_chain(4, 3);
  for (const auto& [vid, v] : g.vertices) {
    std::vector<int> per_color(5, 0);
    for (PreEdgeId p : v.pre_edges) {
      const PreEdge& pe = g.pre_edge(p);
      if (std::holds_alternative<EdgeEnd>(pe.attachment)) ++per_color[pe.color];
    }
    for (int c : per_color) EXPECT_EQ(c, 1);
  }
}

TEST(Generators, RandomClosedAndCut) {
  StrandedGraph closed = gen_random(4, 0, 0, 3, 16);
  EXPECT_EQ(stats(closed).f, 0);
  EXPECT_EQ(stats(gen_random(4, 5, 0, 3, 16)).f, 10);
}

TEST(Generators, RandomIsValidAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    StrandedGraph g = gen_random(3, 1, 2, seed, 16);
    EXPECT_TRUE(validate(g).ok()) << "seed " << seed;
    EXPECT_EQ(g, gen_random(3, 1, 2, seed, 16));
    EXPECT_EQ(parse_wsg(emit_wsg(g)), g);
  }
}

TEST(Generators, BudgetExceeded) { EXPECT_THROW(gen_random(4, 0, 0, 1, 3), BudgetExceeded); }
