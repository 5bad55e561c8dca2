#include <gtest/gtest.h>

#include "support.hpp"
#include "wsg/topology.hpp"
#include "wsg/verify.hpp"

using namespace wsg;
using wsg::testing::disc_graph;
using wsg::testing::three_cut_dipole;

namespace {

AffineExpr aff(const std::string& s) { return AffineExpr::parse(s); }

StrandedGraph fully_cut() { return cut(cut(three_cut_dipole(), EdgeId(1)), EdgeId(2)); }

}  // namespace

TEST(Faces, DipoleAllClosed) {
  auto fs = faces(gen_dipole(4));
  EXPECT_EQ(fs.size(), 10u);
  for (const Face& f : fs) EXPECT_TRUE(f.closed);
}

TEST(Faces, ThreeCutDipole) {
  int closed = 0, open = 0;
  for (const Face& f : faces(three_cut_dipole())) {
    if (f.closed) {
      ++closed;
      EXPECT_EQ(f.pair, ColorPair(1, 2));
    } else {
      ++open;
    }
  }
  EXPECT_EQ(closed, 1);
  EXPECT_EQ(open, 12);
}

TEST(Faces, SingleDisc) {
  auto fs = faces(disc_graph(3));
  ASSERT_EQ(fs.size(), 1u);
  EXPECT_TRUE(fs[0].disc);
  EXPECT_TRUE(fs[0].closed);
}

TEST(Bubbles, FourInnerLoopContractsToDiscs) {
  StrandedGraph g = trivial_loop_example(4, 4);
  CensusRecord c = census(g);
  EXPECT_EQ(c.B(3), 6);
  EXPECT_EQ(c.B(4), 4);
  StrandedGraph h = contract(g, EdgeId(0));
  EXPECT_TRUE(bubbles(h, {1, 2, 3}).empty());
}

TEST(Bubbles, ThreeCutDipole) {
  auto cut_colors = bubbles(three_cut_dipole(), {0, 3, 4});
  ASSERT_EQ(cut_colors.size(), 2u);
  for (const Bubble& b : cut_colors) EXPECT_TRUE(b.open);
  auto kept = bubbles(three_cut_dipole(), {0, 1, 2});
  ASSERT_EQ(kept.size(), 1u);
  EXPECT_TRUE(kept[0].open);
}

TEST(Census, ThreeCutDipole) {
  CensusRecord c = census(three_cut_dipole());
  EXPECT_EQ(c.B(3), 11);
  EXPECT_EQ(c.B(4), 5);
}

TEST(Census, FullyCut) {
  CensusRecord c = census(fully_cut());
  EXPECT_EQ(c.B(3), 20);
  EXPECT_EQ(c.B(4), 10);
  EXPECT_EQ(c.B_int[3] + c.B_int[4], 0);
}

TEST(Census, Dipole) {
  CensusRecord c = census(gen_dipole(4));
  EXPECT_EQ(c.B(3), 10);
  EXPECT_EQ(c.B(4), 5);
  EXPECT_EQ(c.B_ext[3] + c.B_ext[4], 0);
}

TEST(Census, FaceComponentsEqualInternalPlusExternal) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CensusRecord c = census(gen_random(4, 2, 2, seed, 10));
    EXPECT_EQ(c.B2, c.F_int + c.F_ext);
  }
}

TEST(ExtractBubble, DipoleRestriction) {
  StrandedGraph b = extract_bubble(gen_dipole(4), {0, 1, 2}, 0);
  EXPECT_EQ(b.rank, 2);
  CountsRecord c = stats(b);
  EXPECT_EQ(c.V, 2);
  EXPECT_EQ(c.E, 3);
  EXPECT_EQ(c.f, 0);
  EXPECT_TRUE(validate(b).ok());
}

TEST(ExtractBubble, ThreeCutDipoleRestriction) {
  StrandedGraph b = extract_bubble(three_cut_dipole(), {0, 1, 2}, 0);
  EXPECT_EQ(b.edges.size(), 2u);
  EXPECT_GT(census(b).F_ext, 0);
  EXPECT_THROW(extract_bubble(three_cut_dipole(), {0, 1, 2}, 1), std::out_of_range);
}

TEST(Boundary, ClosedGraphEmpty) {
  BoundaryGraph b = boundary(gen_dipole(4));
  EXPECT_TRUE(b.vertices.empty());
  EXPECT_TRUE(b.edges.empty());
}

TEST(Boundary, ThreeCutDipole) {
  BoundaryStats s = boundary(three_cut_dipole()).stats;
  EXPECT_EQ(s.C, 1);
  EXPECT_EQ(s.E, 12);
  EXPECT_EQ(s.F, 11);
  EXPECT_EQ(s.V, 6);
}

TEST(Boundary, FullyCut) {
  BoundaryStats s = boundary(fully_cut()).stats;
  EXPECT_EQ(s.C, 2);
  EXPECT_EQ(s.E, 20);
  EXPECT_EQ(s.F, 20);
}

TEST(Boundary, VertexDegreeAndPairs) {
  BoundaryGraph b = boundary(three_cut_dipole());
  std::map<int, int> degree;
  std::map<int, Color> color;
  for (const auto& v : b.vertices) color[v.half_edge.value] = v.color;
  for (const auto& e : b.edges) {
    ++degree[e.a.value];
    ++degree[e.b.value];
    EXPECT_TRUE(e.pair.contains(color[e.a.value]));
    EXPECT_TRUE(e.pair.contains(color[e.b.value]));
  }
  for (const auto& [h, d] : degree) EXPECT_EQ(d, 4);
}

TEST(Gamma, ThreeCutDipoleSubgraphs) {
  EXPECT_EQ(gamma(three_cut_dipole()), aff("-19-7a3-5a4"));
  EXPECT_EQ(gamma(cut(three_cut_dipole(), EdgeId(2))), aff("-22-10a3-6a4"));
  EXPECT_EQ(gamma(fully_cut()), aff("-28-10a3-10a4"));
}

TEST(Gamma, Dipole) { EXPECT_EQ(gamma(gen_dipole(4)), aff("-8-5a3-5a4")); }

TEST(Gamma, RankTwoAndRankOneError) {
  EXPECT_EQ(gamma(gen_dipole(2)), AffineExpr(Rational(2 - 3 + 3)));
  EXPECT_THROW(gamma(gen_dipole(1)), std::invalid_argument);
}

TEST(Gamma, AdditiveOverUnions) {
  StrandedGraph a = three_cut_dipole(), b = gen_random(4, 1, 1, 2, 10);
  EXPECT_EQ(gamma(disjoint_union(a, b)), gamma(a) + gamma(b));
}

TEST(Gamma, DiscShift) {
  StrandedGraph g = gen_dipole(5);
  EXPECT_EQ(gamma(with_discs(g, 1)), gamma(g) + AffineExpr(Rational(10 + 4)));
}

TEST(GammaConsecutive, Dipole) { EXPECT_EQ(gamma_consecutive(gen_dipole(4)), aff("-16-5a3-5a4")); }

TEST(GammaConsecutive, ZeroAlphas) {
  StrandedGraph g = gen_dipole(5);
  CensusRecord c = census(g);
  Rational v = gamma_consecutive(g).evaluate({0, 0, 0});
  EXPECT_EQ(v, Rational(60 * (c.V - c.E) + 24 * c.F_int - 2 * 6 * c.B(3)));
  EXPECT_THROW(gamma_consecutive(gen_dipole(3)), std::invalid_argument);
}

TEST(AlternatingAlphas, SignPattern) {
  for (int n = 4; n <= 7; ++n) {
    auto a = alternating_alphas(n);
    ASSERT_EQ(static_cast<int>(a.size()), n - 2);
    for (const Rational& x : a) EXPECT_GT(x, 0);
    for (int k = 4; k <= n; ++k) {
      Rational c = gamma_bubble_coefficient(n, k, a);
      if (k % 2 == 0) {
        EXPECT_GT(c, 0) << "n=" << n << " k=" << k;
      } else {
        EXPECT_LT(c, 0) << "n=" << n << " k=" << k;
      }
    }
  }
}
