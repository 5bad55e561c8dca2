#include <gtest/gtest.h>

#include "support.hpp"
#include "wsg/invariant.hpp"
#include "wsg/topology.hpp"
#include "wsg/verify.hpp"

using namespace wsg;
using wsg::testing::three_cut_dipole;

namespace {

GraphCase named(std::string id, StrandedGraph g) { return {std::move(id), std::nullopt, std::move(g)}; }

void expect_all_pass(const std::vector<Verdict>& vs) {
  EXPECT_FALSE(vs.empty());
  for (const Verdict& v : vs)
    EXPECT_TRUE(v.pass) << v.claim << " on " << v.graph << ": expected " << v.expected << ", got " << v.actual;
}

bool has_claim(const std::vector<Verdict>& vs, const std::string& prefix) {
  for (const Verdict& v : vs)
    if (v.claim.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST(TutteOracle, Textbook) {
  EXPECT_EQ(tutte_oracle(3, {{0, 1}, {1, 2}, {2, 0}}), Polynomial::parse("x^2 + x + y", Schema::tutte(), 1));
  EXPECT_EQ(tutte_oracle(1, {{0, 0}}).to_text(), "y");
  EXPECT_EQ(tutte_oracle(2, {{0, 1}}).to_text(), "x");
}

TEST(TutteOracle, RankOneGraphs) {
  StrandedGraph path = cut(gen_dipole(1), EdgeId(0));
  EXPECT_EQ(oracle(path, OracleKind::Tutte).to_text(), "x");
  EXPECT_EQ(oracle(gen_dipole(1), OracleKind::Tutte), Polynomial::parse("x + y", Schema::tutte(), 1));
  EXPECT_THROW(oracle(gen_dipole(2), OracleKind::Tutte), std::invalid_argument);
}

TEST(BrOracle, MatchesSpecialization) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    StrandedGraph g = gen_random(2, seed % 3, 1 + seed % 3, seed, 8);
    EXPECT_EQ(specialize(invariant(g), Target::BR), oracle(g, OracleKind::BR)) << emit_wsg(g);
  }
  StrandedGraph loop = contract(gen_dipole(2), EdgeId(0));
  EXPECT_EQ(specialize(invariant(loop), Target::BR), oracle(loop, OracleKind::BR));
  EXPECT_THROW(oracle(gen_dipole(3), OracleKind::BR), std::invalid_argument);
}

TEST(Recurrence, RegularEdgeSplit) {
  auto vs = check_recurrence(named("G", three_cut_dipole()), EdgeId(2));
  expect_all_pass(vs);
  EXPECT_TRUE(has_claim(vs, "recurrence.regular"));
}

TEST(Recurrence, BridgeFactor) {
  auto vs = check_recurrence(named("G-e2", cut(three_cut_dipole(), EdgeId(2))), EdgeId(1));
  expect_all_pass(vs);
  EXPECT_TRUE(has_claim(vs, "recurrence.bridge"));
}

TEST(Recurrence, TrivialLoopFactors) {
  for (int n = 3; n <= 5; ++n)
    for (int p = 0; p <= n; ++p) {
      auto vs = check_recurrence(named("loop", trivial_loop_example(n, p)), EdgeId(0));
      expect_all_pass(vs);
      EXPECT_TRUE(has_claim(vs, "recurrence.loop")) << n << " " << p;
    }
}

TEST(CountRelations, RankFourBridge) {
  auto vs = check_count_relations(named("G-e2", cut(three_cut_dipole(), EdgeId(2))), EdgeId(1));
  expect_all_pass(vs);
  EXPECT_TRUE(has_claim(vs, "bridge_counts.rank4.F_bd"));
}

TEST(CountRelations, RankFourTwoInnerLoop) {
  auto vs = check_count_relations(named("loop", trivial_loop_example(4, 2)), EdgeId(0));
  expect_all_pass(vs);
  EXPECT_TRUE(has_claim(vs, "loop_contract.rank4.B3"));
  CensusRecord before = census(trivial_loop_example(4, 2));
  CensusRecord after = census(contract(trivial_loop_example(4, 2), EdgeId(0)));
  EXPECT_EQ(after.B(3), before.B(3));
  EXPECT_EQ(after.B(4), before.B(4) + 2);
}

TEST(CountRelations, RankFiveBridge) {
  StrandedGraph g = cut(gen_dipole(5), EdgeId(0));
  for (int c = 2; c <= 5; ++c) g = cut(g, EdgeId(c));
  CensusRecord a = census(cut(g, EdgeId(1))), b = census(contract(g, EdgeId(1)));
  EXPECT_EQ(a.B_ext[3] - b.B_ext[3], 10);
  expect_all_pass(check_count_relations(named("bridge5", g), EdgeId(1)));
}

TEST(BubbleIdentities, Dipole) {
  expect_all_pass(check_bubble_identities(named("dipole", gen_dipole(4))));
  expect_all_pass(check_bubble_identities(named("G", three_cut_dipole())));
}

TEST(Bounds, HalfAlphas) {
  StrandedGraph g = cut(cut(three_cut_dipole(), EdgeId(1)), EdgeId(2));
  EXPECT_EQ(gamma(g).evaluate({Rational(1, 2), Rational(3, 2)}), Rational(-48));
  expect_all_pass(check_bounds(named("G", three_cut_dipole()), {Rational(1, 2), Rational(3, 2)}));
  expect_all_pass(check_bounds(named("dipole3", gen_dipole(3)), {Rational(0)}));
  for (const auto& b : census(gen_dipole(4)).three_bubbles) EXPECT_EQ(b.genus, 0);
}

TEST(Boundary, Preservation) {
  expect_all_pass(check_boundary_preservation(named("G", three_cut_dipole()), EdgeId(2)));
  expect_all_pass(check_boundary_preservation(named("dipole", gen_dipole(4)), EdgeId(0)));
  expect_all_pass(check_full_contraction(named("G", three_cut_dipole()), 7));
}

TEST(Discs, Invariance) {
  for (int m = 1; m <= 3; ++m) expect_all_pass(check_disc_invariance(named("G", three_cut_dipole()), m));
}

TEST(Multivariate, Rule) { expect_all_pass(check_multivariate_rule(named("G", three_cut_dipole()), EdgeId(1))); }

TEST(Suite, EmptyCorpusPasses) {
  CorpusSpec spec;
  spec.ranks.clear();
  spec.fixtures = false;
  spec.oracle_corpora = false;
  Report r = run_suite(spec);
  EXPECT_EQ(r.failures(), 0);
  EXPECT_TRUE(r.verdicts.empty());
  EXPECT_EQ(r.to_text().substr(r.to_text().rfind("all")), "all 0 claims pass\n");
}

TEST(Suite, CorruptedClaimFailsWithSeed) {
  CorpusSpec spec;
  spec.ranks = {3};
  spec.seed_lo = 0;
  spec.seed_hi = 3;
  spec.fixtures = false;
  spec.oracle_corpora = false;
  spec.options.corrupt = "recurrence.regular";
  Report r = run_suite(spec);
  ASSERT_GT(r.failures(), 0);
  for (const Verdict& v : r.verdicts) {
    if (v.pass) continue;
    EXPECT_EQ(v.claim.rfind("recurrence.regular", 0), 0u);
    EXPECT_TRUE(v.seed.has_value());
    EXPECT_NO_THROW(parse_wsg(v.reproduction));
  }
}

TEST(Suite, DeterministicAcrossJobCounts) {
  CorpusSpec spec;
  spec.ranks = {3, 4};
  spec.seed_lo = 0;
  spec.seed_hi = 5;
  spec.max_edges = 8;
  spec.oracle_max_edges = 6;
  Report a = run_suite(spec);
  spec.jobs = 3;
  Report b = run_suite(spec);
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_EQ(a.failures(), 0);
}

TEST(Suite, BudgetIsANoteNotAFailure) {
  CheckOptions opt;
  opt.budget = 3;
  std::vector<std::string> notes;
  auto vs = verify_graph(named("chain", gen_chain(3, 2)), opt, &notes);
  for (const Verdict& v : vs) EXPECT_TRUE(v.pass);
  EXPECT_FALSE(notes.empty());
}
