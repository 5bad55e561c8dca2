#include <gtest/gtest.h>

#include "support.hpp"
#include "wsg/invariant.hpp"
#include "wsg/topology.hpp"
#include "wsg/verify.hpp"

using namespace wsg;
using wsg::testing::disc_graph;
using wsg::testing::three_cut_dipole;

namespace {

const char* kThreeCut =
    "(y-1) z^(28+7a3+5a4) s w^11 q^12 t^6 + 2 z^(31+10a3+6a4) s w^14 q^16 t^8 + "
    "(x-1) z^(46+10a3+10a4) s^2 w^20 q^20 t^10";

Assignment ones(const Polynomial& p) {
  Assignment a;
  for (const auto& v : p.schema().vars)
    if (v.front() != '(') a.values[v] = 1;
  a.values["x"] = 2;
  a.values["y"] = 2;
  a.z = 1;
  a.alphas = std::vector<Rational>(8, Rational(1));
  return a;
}

}  // namespace

TEST(Invariant, ThreeCutDipoleGolden) { EXPECT_EQ(invariant(three_cut_dipole()).to_text(), kThreeCut); }

TEST(Invariant, SingleDiscIsOne) {
  Polynomial p = invariant(disc_graph(4));
  EXPECT_EQ(p.to_text(), "1");
}

TEST(Invariant, DipoleFullSubsetTerm) {
  Polynomial p = invariant(gen_dipole(3), AlphaMode::fixed({Rational(0)}));
  Monomial full;
  full.exps = std::vector<Rational>(p.schema().vars.size(), Rational(0));
  full.exps[p.schema().index_of("(y-1)")] = 3;
  full.z = AffineExpr(Rational(7));
  auto it = p.terms().find(full);
  ASSERT_NE(it, p.terms().end()) << p.to_text();
  EXPECT_EQ(it->second, 1);
}

TEST(Invariant, DiscInvariance) {
  StrandedGraph g = gen_random(4, 2, 2, 11, 8);
  for (int m = 1; m <= 3; ++m) EXPECT_EQ(invariant(with_discs(g, m)), invariant(g));
}

TEST(Invariant, RankOneMatchesTutte) {
  Polynomial p = invariant(gen_dipole(1));
  EXPECT_EQ(specialize(p, Target::Tutte).to_text(), oracle(gen_dipole(1), OracleKind::Tutte).to_text());
}

TEST(Invariant, BudgetExceeded) { EXPECT_THROW(invariant(gen_chain(4, 2), AlphaMode::symbolic(), 5), BudgetExceeded); }

TEST(Invariant, AllFormsAgree) {
  StrandedGraph g = gen_random(4, 1, 2, 9, 8);
  AllForms f = all_forms(g);
  EXPECT_EQ(f.invariant, invariant(g));
  EXPECT_EQ(f.extended, extended(g));
  EXPECT_EQ(f.multivariate, multivariate(g));
}

TEST(Multivariate, SingleDisc) {
  MultivariateForm m = multivariate(disc_graph(3));
  ASSERT_EQ(m.terms().size(), 1u);
  const auto& [key, coeff] = *m.terms().begin();
  EXPECT_EQ(coeff, 1);
  EXPECT_TRUE(key.betas.empty());
  EXPECT_EQ(key.exps[0], 0);
  const auto& vars = m.vars();
  for (std::size_t i = 0; i < vars.size(); ++i) EXPECT_EQ(key.exps[i + 1], vars[i] == "z2" ? 1 : 0) << vars[i];
}

TEST(Multivariate, NonLoopRule) {
  StrandedGraph g = three_cut_dipole();
  MultivariateForm lhs = multivariate(g);
  MultivariateForm rhs = multivariate(cut(g, EdgeId(2)));
  rhs += multivariate(contract(g, EdgeId(2))).times_x_beta(2);
  EXPECT_EQ(lhs, rhs);
}

TEST(Multivariate, DipoleFullSubset) {
  MultivariateForm m = multivariate(gen_dipole(4));
  bool found = false;
  for (const auto& [key, c] : m.terms()) {
    if (key.betas.size() != 5) continue;
    found = true;
    EXPECT_EQ(key.exps[0], 1);
    const auto& vars = m.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      int want = vars[i] == "z2" ? 10 : vars[i] == "z3" ? 10 : vars[i] == "z4" ? 5 : 0;
      EXPECT_EQ(key.exps[i + 1], want) << vars[i];
    }
  }
  EXPECT_TRUE(found);
}

TEST(Multivariate, RankThreeLayout) {
  MultivariateForm m = multivariate(gen_dipole(3), MultivariateLayout::Rank3);
  EXPECT_EQ(m.vars(), (std::vector<std::string>{"z1", "z2", "z3", "s", "w", "q", "t"}));
  EXPECT_EQ(m.terms().size(), 16u);
}

TEST(Substitute, Reductions) {
  Polynomial p = invariant(three_cut_dipole());
  EXPECT_EQ(substitute(p, {}), p);
  Replacement s;
  s.z = AffineExpr(Rational(-2));
  EXPECT_EQ(reduce_t1(p), substitute(p, {{"s", s}}));
  Polynomial t3 = reduce_t3(p);
  for (const auto& [m, c] : t3.terms())
    for (const char* v : {"s", "w", "q", "t"}) EXPECT_EQ(m.exps[t3.schema().index_of(v)], 0);
  EXPECT_NO_THROW(reduce_t2(p));
}

TEST(Specialize, TutteAndWrongRank) {
  EXPECT_THROW(specialize(invariant(gen_dipole(3)), Target::Tutte), std::invalid_argument);
  EXPECT_THROW(specialize(invariant(gen_dipole(3)), Target::BR), std::invalid_argument);
  Polynomial br = specialize(invariant(gen_dipole(2)), Target::BR);
  EXPECT_EQ(br, oracle(gen_dipole(2), OracleKind::BR));
}

TEST(Evaluate, IntegerExponentsAtHalfAlphas) {
  Polynomial p = invariant(three_cut_dipole(), AlphaMode::fixed({Rational(1, 2), Rational(3, 2)}));
  for (const auto& [m, c] : p.terms()) EXPECT_TRUE(m.z.is_constant() && is_integer(m.z.constant()));
  Assignment a = ones(p);
  a.z = Rational(1, 3);
  EXPECT_TRUE(evaluate(p, a).exact);
}

TEST(Evaluate, ConstantOne) {
  Polynomial one = Polynomial::constant(Schema::invariant(), 1, 4);
  Assignment a;
  a.values["x"] = 7;
  EXPECT_EQ(evaluate(one, a).value, BigRational(1));
}

TEST(Evaluate, CountsSubsets) {
  StrandedGraph g = gen_random(4, 1, 1, 4, 8);
  Polynomial p = invariant(g);
  Evaluation e = evaluate(p, ones(p));
  ASSERT_TRUE(e.exact);
  EXPECT_EQ(e.value, BigRational(std::int64_t{1} << g.edges.size()));
}

TEST(Evaluate, NonIntegralExponentIsApproximate) {
  Polynomial p = invariant(three_cut_dipole(), AlphaMode::fixed({Rational(1, 3), Rational(0)}));
  Assignment a = ones(p);
  a.z = Rational(2);
  Evaluation e = evaluate(p, a);
  EXPECT_FALSE(e.exact);
  EXPECT_LT(e.error_bound, BigFloat("1e-30"));
  a.z = Rational(0);
  EXPECT_THROW(evaluate(p, a), std::domain_error);
}

TEST(Evaluate, CommutesWithSubstitute) {
  Polynomial p = invariant(three_cut_dipole(), AlphaMode::fixed({Rational(1), Rational(2)}));
  Assignment a = ones(p);
  a.values["s"] = Rational(3);
  a.z = Rational(2);
  Assignment b = a;
  b.values["s"] = Rational(1, 4);
  EXPECT_EQ(evaluate(p, b).value, evaluate(reduce_t1(p), a).value);
}

TEST(Text, RoundTrip) {
  Polynomial p = invariant(three_cut_dipole());
  EXPECT_EQ(Polynomial::parse(p.to_text(), p.schema(), 4), p);
  EXPECT_EQ(Polynomial::constant(Schema::invariant(), 1).to_text(), "1");
}
