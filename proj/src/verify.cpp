#include "wsg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "wsg/invariant.hpp"
#include "wsg/io.hpp"
#include "wsg/surgery.hpp"
#include "wsg/topology.hpp"

namespace wsg {

nlohmann::json Verdict::to_json() const {
  nlohmann::json j{{"claim", claim}, {"graph", graph}, {"expected", expected}, {"actual", actual}, {"pass", pass}};
  if (seed) j["seed"] = *seed;
  if (edge) j["edge"] = *edge;
  if (!reproduction.empty()) j["reproduction"] = reproduction;
  return j;
}

namespace {

std::int64_t binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string join(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

class Recorder {
 public:
  Recorder(const GraphCase& g, std::optional<int> edge, const CheckOptions& opt) : g_(g), edge_(edge), opt_(opt) {}

  void check(const std::string& claim, bool pass, std::string expected, std::string actual) {
    Verdict v;
    v.claim = claim;
    v.graph = g_.id;
    v.seed = g_.seed;
    v.edge = edge_;
    if (!opt_.corrupt.empty() && claim.rfind(opt_.corrupt, 0) == 0) {
      expected = "corrupted(" + expected + ")";
      pass = expected == actual;
    }
    v.expected = std::move(expected);
    v.actual = std::move(actual);
    v.pass = pass;
    if (!pass) v.reproduction = emit_wsg(g_.graph);
    out_.push_back(std::move(v));
  }
  void eq(const std::string& claim, std::int64_t expected, std::int64_t actual) {
    check(claim, expected == actual, std::to_string(expected), std::to_string(actual));
  }
  void eq(const std::string& claim, const std::vector<int>& expected, const std::vector<int>& actual) {
    check(claim, expected == actual, join(expected), join(actual));
  }
  // lhs <= rhs
  void le(const std::string& claim, std::int64_t lhs, std::int64_t rhs) {
    check(claim, lhs <= rhs, "<= " + std::to_string(rhs), std::to_string(lhs));
  }
  void le(const std::string& claim, const Rational& lhs, const Rational& rhs) {
    check(claim, lhs <= rhs, "<= " + to_string(rhs), to_string(lhs));
  }
  void eq(const std::string& claim, const Polynomial& expected, const Polynomial& actual) {
    check(claim, expected == actual, expected.to_text(), actual.to_text());
  }
  void eq(const std::string& claim, const MultivariateForm& expected, const MultivariateForm& actual) {
    check(claim, expected == actual, expected.to_text(), actual.to_text());
  }
  std::vector<Verdict> take() { return std::move(out_); }

 private:
  const GraphCase& g_;
  std::optional<int> edge_;
  const CheckOptions& opt_;
  std::vector<Verdict> out_;
};

/// Single-term polynomial in the invariant schema.
Polynomial factor(int n, int xm1, int ym1, const AffineExpr& z, int s, int w, int q, int t) {
  Polynomial p(Schema::invariant(), n);
  Monomial m;
  m.exps = {Rational(xm1), Rational(ym1), Rational(s), Rational(w), Rational(q), Rational(t)};
  m.z = z;
  p.add(m, 1);
  return p;
}

AffineExpr bridge_z(int n) {
  AffineExpr z(Rational((n - 1) * (n + 1)));
  if (n >= 3) z.set_coeff(n, Rational(n));
  return z;
}

Polynomial bridge_factor(int n) { return factor(n, 0, 0, bridge_z(n), 1, n * (n - 1) / 2, n, 2); }

/// Change of the d-bubble count when a trivial p-inner loop is contracted.
std::int64_t loop_bubble_delta(int n, int p, int d) {
  std::int64_t s = 0;
  for (int j = 0; j <= n - p; ++j) s += binom(n - p, j) * binom(p, d - 1 - j) * (j - 1);
  return s;
}

/// z exponent of the trivial-loop factor, from the count changes above.
AffineExpr derived_loop_z(int n, int p) {
  auto dB = [&](int d) { return d <= n ? loop_bubble_delta(n, p, d) : 0; };
  AffineExpr z(Rational(-(n - 1) * (n + 2) / 2 * (n - 1) + n * (n - 1) / 2 * n - (n >= 3 ? 2 * dB(3) : 0)));
  for (int j = 3; j <= n; ++j) {
    std::int64_t c = -static_cast<std::int64_t>(n - j + 1) * dB(j);
    if (j + 1 <= n) c += static_cast<std::int64_t>(j) * dB(j + 1);
    z.set_coeff(j, Rational(c));
  }
  return z;
}

std::vector<int> bubble_totals(const StateCounts& c, int n) {
  std::vector<int> v;
  for (int p = 3; p <= n; ++p) v.push_back(c.B(p));
  return v;
}

std::vector<int> boundary_tuple(const StateCounts& c) {
  std::vector<int> v{c.C_bd, c.E_bd(), c.F_bd(), c.V_bd()};
  v.insert(v.end(), c.boundary_bubbles.begin(), c.boundary_bubbles.end());
  return v;
}

std::vector<int> boundary_tuple(const BoundaryStats& b) {
  std::vector<int> v{b.C, b.E, b.F, b.V};
  v.insert(v.end(), b.B.begin(), b.B.end());
  return v;
}

struct EdgeData {
  EdgeId e;
  EdgeClass cls;
  StrandedGraph cut_g, con_g;
};

EdgeData edge_data(const StrandedGraph& g, EdgeId e) {
  return {e, classify(g, e), cut(g, e), contract(g, e)};
}

void recurrence_into(Recorder& rec, int n, const EdgeClass& cls, const Polynomial& T, const Polynomial& Tc,
                     const Polynomial& Tk) {
  using K = EdgeClass::Kind;
  if (cls.kind == K::Regular) {
    rec.eq("recurrence.regular", Tc + Tk, T);
    return;
  }
  if (cls.kind == K::Bridge && n == 2) {
    // No bubble terms at rank 2, so the factor is z s w q^2 t^2.
    Polynomial F = factor(2, 0, 0, AffineExpr(Rational(1)), 1, 1, 2, 2);
    rec.eq("recurrence.bridge.rank2", F * Tk, Tc);
    return;
  }
  if (cls.kind == K::Bridge) {
    Polynomial F = bridge_factor(n);
    rec.eq("recurrence.bridge.cut", F * Tk, Tc);
    Polynomial bracket = factor(n, 1, 0, bridge_z(n), 1, n * (n - 1) / 2, n, 2) + Polynomial::constant(Schema::invariant(), 1, n);
    rec.eq("recurrence.bridge", bracket * Tk, T);
    if (n == 3) {
      // Dedicated rank-3 factor z^8 s (wq)^3 t^2 at alpha3 = 0.
      std::vector<Rational> a0{Rational(0)};
      Polynomial F3 = factor(3, 0, 0, AffineExpr(Rational(8)), 1, 3, 3, 2);
      rec.eq("recurrence.bridge.rank3", F3 * fix_alphas(Tk, a0), fix_alphas(Tc, a0));
    }
    return;
  }
  if (!cls.trivial) return;
  const int p = cls.p_inner;
  rec.eq("recurrence.loop.derived", Tc + factor(n, 0, 1, derived_loop_z(n, p), 0, 0, 0, 0) * Tk, T);
  if (n == 3 && p <= 2) {
    std::vector<Rational> a0{Rational(0)};
    Polynomial F = factor(3, 0, 1, AffineExpr(Rational(4 * p - 7)), 0, 0, 0, 0);
    rec.eq("recurrence.loop.rank3", fix_alphas(Tc, a0) + F * fix_alphas(Tk, a0), fix_alphas(T, a0));
  }
  if (n == 4 && p <= 3) {
    AffineExpr z(Rational(-15 + 6 * p));
    z.set_coeff(3, Rational(3 * (4 - p)));
    z.set_coeff(4, Rational(3 * p - 8));
    rec.eq("recurrence.loop.rank4", Tc + factor(4, 0, 1, z, 0, 0, 0, 0) * Tk, T);
  }
}

void count_relations_into(Recorder& rec, int n, const EdgeClass& cls, const StateCounts& G, const StateCounts& cut_c,
                       const StateCounts& con) {
  using K = EdgeClass::Kind;
  if (cls.kind == K::Bridge) {
    const std::string L = n == 4 ? "bridge_counts.rank4." : "bridge_counts.";
    rec.eq(L + "k", con.k + 1, cut_c.k);
    rec.eq(L + "V", con.V + 1, cut_c.V);
    rec.eq(L + "E", con.E, cut_c.E);
    rec.eq(L + "f", con.f + 2, cut_c.f);
    rec.eq(L + "F_int", con.F_int, cut_c.F_int);
    std::vector<int> bi_cut, bi_con, be_cut, be_exp;
    for (int p = 3; p <= n; ++p) {
      bi_cut.push_back(cut_c.B_int[p]);
      bi_con.push_back(con.B_int[p]);
      be_cut.push_back(cut_c.B_ext[p]);
      be_exp.push_back(con.B_ext[p] + static_cast<int>(binom(n, n - p + 1)));
    }
    rec.eq(L + "B_int", bi_con, bi_cut);
    rec.eq(L + "C_bd", con.C_bd + 1, cut_c.C_bd);
    rec.eq(L + "E_bd", con.E_bd() + n, cut_c.E_bd());
    rec.eq(L + "F_bd", con.F_bd() + binom(n, 2), cut_c.F_bd());
    rec.eq(L + "B_ext", be_exp, be_cut);
    return;
  }
  if (cls.kind != K::Loop || !cls.trivial) return;
  const int p = cls.p_inner;

  // Contraction of a trivial loop, all ranks.
  rec.eq("loop_contract.k", G.k + n - 1, con.k);
  rec.eq("loop_contract.V", G.V + n - 1, con.V);
  rec.eq("loop_contract.E", G.E - 1, con.E);
  rec.eq("loop_contract.F_int", G.F_int, con.F_int);
  rec.eq("loop_contract.boundary", boundary_tuple(G), boundary_tuple(con));
  std::vector<int> expB;
  for (int d = 3; d <= n; ++d) expB.push_back(G.B(d) + static_cast<int>(loop_bubble_delta(n, p, d)));
  rec.eq("loop_contract.B.derived", expB, bubble_totals(con, n));

  if (n != 4) return;
  rec.eq("loop_contract.rank4.k", G.k + 3, con.k);
  rec.eq("loop_contract.rank4.V", G.V + 3, con.V);
  rec.eq("loop_contract.rank4.E", G.E - 1, con.E);
  rec.eq("loop_contract.rank4.F_int", G.F_int, con.F_int);
  rec.eq("loop_contract.rank4.C_bd", G.C_bd, con.C_bd);
  rec.eq("loop_contract.rank4.f", G.f, con.f);
  rec.eq("loop_contract.rank4.E_bd", G.E_bd(), con.E_bd());
  rec.eq("loop_contract.rank4.F_bd", G.F_bd(), con.F_bd());
  if (p >= 3) {
    std::vector<int> exp_int, act_int, exp_ext, act_ext;
    for (int i = 3; i <= 4; ++i) {
      exp_int.push_back(G.B_int[i] - static_cast<int>(binom(p, i - 1)));
      act_int.push_back(con.B_int[i]);
      exp_ext.push_back(G.B_ext[i]);
      act_ext.push_back(con.B_ext[i]);
    }
    rec.eq("loop_contract.rank4.B_int", exp_int, act_int);
    rec.eq("loop_contract.rank4.B_ext", exp_ext, act_ext);
  } else {
    rec.eq("loop_contract.rank4.B3", G.B(3) + 6 - 3 * p, con.B(3));
    rec.eq("loop_contract.rank4.B4", G.B(4) + 8 - 3 * p, con.B(4));
  }
  if (p <= 3) {
    rec.eq("loop_cut.rank4.k", con.k - 3, cut_c.k);
    rec.eq("loop_cut.rank4.V", con.V - 3, cut_c.V);
    rec.eq("loop_cut.rank4.E", con.E, cut_c.E);
    rec.eq("loop_cut.rank4.f", con.f + 2, cut_c.f);
    rec.eq("loop_cut.rank4.F_int_plus_C_bd", con.F_int + con.C_bd - 3, cut_c.F_int + cut_c.C_bd);
    rec.eq("loop_cut.rank4.E_bd", con.E_bd() + 4, cut_c.E_bd());
    rec.eq("loop_cut.rank4.B3", con.B(3) - (6 - 3 * p), cut_c.B(3));
    rec.eq("loop_cut.rank4.B4", con.B(4) - (8 - 3 * p), cut_c.B(4));
  }
}

std::vector<std::vector<Color>> color_subsets(const std::vector<Color>& palette, int d) {
  std::vector<std::vector<Color>> out;
  const int m = static_cast<int>(palette.size());
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    if (std::popcount(s) != d) continue;
    std::vector<Color> S;
    for (int i = 0; i < m; ++i)
      if ((s >> i) & 1u) S.push_back(palette[i]);
    out.push_back(S);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void bubble_identities_into(Recorder& rec, const StrandedGraph& g0) {
  const StrandedGraph g = normalize(g0);
  const int n = g.rank;
  if (n < 3 || g.vertices.empty()) return;
  const StateCounts c = state_counts(g);
  const std::string L = n == 4 ? "bubble_sums.rank4." : "bubble_sums.";
  for (int d = 3; d <= n; ++d) {
    std::int64_t sumV = 0, sumE = 0, sumF = 0;
    std::vector<std::int64_t> sumB(d + 1, 0);
    for (const auto& S : color_subsets(g.palette, d)) {
      const int count = static_cast<int>(bubbles(g, S).size());
      for (int i = 0; i < count; ++i) {
        StrandedGraph b = extract_bubble(g, S, i);
        StateCounts bc = state_counts(b);
        sumV += static_cast<std::int64_t>(b.vertices.size());
        sumE += static_cast<std::int64_t>(b.edges.size());
        sumF += bc.F_int;
        for (int p = 3; p < d; ++p) sumB[p] += bc.B(p);
        sumB[d] += 1;
      }
    }
    const std::string D = "d" + std::to_string(d);
    rec.check(L + "sum_V." + D, sumV >= binom(n, d - 1) * c.V, ">= " + std::to_string(binom(n, d - 1) * c.V),
              std::to_string(sumV));
    rec.eq(L + "sum_E." + D, binom(n, d - 1) * c.E, sumE);
    rec.eq(L + "sum_F_int." + D, binom(n - 1, d - 2) * c.F_int, sumF);
    for (int p = 3; p <= d; ++p) {
      const std::string P = ".p" + std::to_string(p) + "." + D;
      rec.eq(L + "sum_B" + P, binom(n - p + 1, d - p) * c.B(p), sumB[p]);
      rec.le(L + "B_ineq" + P, binom(d - 1, p - 1) * c.B(d), binom(n - p + 1, d - p) * c.B(p));
    }
  }
  rec.le("bubbles.Bn_min", n, c.B(n));
  if (n == 4) rec.le("bubble_sums.rank4.B4_min", 4, c.B(4));
}

void bounds_into(Recorder& rec, const StrandedGraph& g0, const std::vector<Rational>& alphas) {
  const StrandedGraph g = normalize(g0);
  const int n = g.rank;
  if (n < 3 || g.vertices.empty()) return;
  const StateCounts c = state_counts(g);
  const Rational bound = -Rational(n) * alphas.at(n - 3);
  rec.le("bound.gamma", gamma_from_counts(n, c).evaluate(alphas), bound);
  if (n >= 4) rec.le("bound.gamma_consecutive", gamma_consecutive_from_counts(n, c).evaluate(alphas), bound);
}

void three_bubbles_into(Recorder& rec, const StrandedGraph& g0) {
  const StrandedGraph g = normalize(g0);
  if (g.rank < 3 || g.vertices.empty()) return;
  for (const BubbleEuler& b : census(g).three_bubbles) {
    rec.le("bound.three_bubble_euler", b.euler(), 2);
    rec.le("bound.three_bubble_genus", 0, b.genus);
  }
}

Polynomial invariant_of(const StrandedGraph& g, const CheckOptions& opt) {
  return invariant(g, AlphaMode::symbolic(), opt.budget);
}

}  // namespace

std::vector<Verdict> check_recurrence(const GraphCase& g, EdgeId e, const CheckOptions& opt) {
  Recorder rec(g, e.value, opt);
  EdgeData d = edge_data(g.graph, e);
  recurrence_into(rec, g.graph.rank, d.cls, invariant_of(g.graph, opt), invariant_of(d.cut_g, opt),
                  invariant_of(d.con_g, opt));
  return rec.take();
}

std::vector<Verdict> check_count_relations(const GraphCase& g, EdgeId e, const CheckOptions& opt) {
  Recorder rec(g, e.value, opt);
  EdgeData d = edge_data(g.graph, e);
  count_relations_into(rec, g.graph.rank, d.cls, state_counts(g.graph), state_counts(d.cut_g), state_counts(d.con_g));
  return rec.take();
}

std::vector<Verdict> check_bubble_identities(const GraphCase& g, const CheckOptions& opt) {
  Recorder rec(g, std::nullopt, opt);
  bubble_identities_into(rec, g.graph);
  return rec.take();
}

std::vector<Verdict> check_bounds(const GraphCase& g, const std::vector<Rational>& alphas, const CheckOptions& opt) {
  Recorder rec(g, std::nullopt, opt);
  bounds_into(rec, g.graph, alphas);
  three_bubbles_into(rec, g.graph);
  return rec.take();
}

std::vector<Verdict> check_boundary_preservation(const GraphCase& g, EdgeId e, const CheckOptions& opt) {
  Recorder rec(g, e.value, opt);
  rec.eq("boundary.contraction", boundary_tuple(boundary(g.graph).stats),
         boundary_tuple(boundary(contract(g.graph, e)).stats));
  return rec.take();
}

std::vector<Verdict> check_full_contraction(const GraphCase& g, std::uint64_t seed, const CheckOptions& opt) {
  Recorder rec(g, std::nullopt, opt);
  std::vector<EdgeId> order = g.graph.edge_ids();
  std::mt19937_64 rng(seed);
  std::vector<EdgeId> a = order, b = order;
  std::shuffle(a.begin(), a.end(), rng);
  std::shuffle(b.begin(), b.end(), rng);
  auto ref = boundary_tuple(boundary(g.graph).stats);
  auto sa = boundary_tuple(boundary(full_contract(g.graph, a)).stats);
  auto sb = boundary_tuple(boundary(full_contract(g.graph, b)).stats);
  rec.eq("boundary.full_contraction", ref, sa);
  rec.eq("boundary.full_contraction.orders", sa, sb);
  return rec.take();
}

std::vector<Verdict> check_disc_invariance(const GraphCase& g, int m, const CheckOptions& opt) {
  Recorder rec(g, std::nullopt, opt);
  rec.eq("discs.invariance", invariant_of(g.graph, opt), invariant_of(with_discs(g.graph, m), opt));
  return rec.take();
}

std::vector<Verdict> check_multivariate_rule(const GraphCase& g, EdgeId e, const CheckOptions& opt) {
  Recorder rec(g, e.value, opt);
  EdgeData d = edge_data(g.graph, e);
  if (d.cls.kind != EdgeClass::Kind::Loop) {
    MultivariateForm rhs = multivariate(d.cut_g, MultivariateLayout::General, opt.budget);
    rhs += multivariate(d.con_g, MultivariateLayout::General, opt.budget).times_x_beta(e.value);
    rec.eq("multivariate.rule", rhs, multivariate(g.graph, MultivariateLayout::General, opt.budget));
  }
  return rec.take();
}

std::vector<Verdict> check_oracle(const GraphCase& g, const CheckOptions& opt) {
  Recorder rec(g, std::nullopt, opt);
  if (g.graph.rank == 1) {
    rec.eq("oracle.tutte", oracle(g.graph, OracleKind::Tutte), specialize(invariant_of(g.graph, opt), Target::Tutte));
  } else if (g.graph.rank == 2) {
    rec.eq("oracle.br", oracle(g.graph, OracleKind::BR), specialize(invariant_of(g.graph, opt), Target::BR));
  }
  return rec.take();
}

std::vector<std::vector<Rational>> alpha_samples(int n) {
  std::vector<std::vector<Rational>> out;
  if (n < 3) return out;
  const int m = n - 2;
  out.emplace_back(m, Rational(0));
  out.emplace_back(m, Rational(1));
  std::vector<Rational> halves;
  for (int i = 0; i < m; ++i) halves.push_back(i % 2 ? Rational(3, 2) : Rational(1, 2));
  out.push_back(halves);
  if (n >= 4) out.push_back(alternating_alphas(n));
  return out;
}

std::vector<Verdict> verify_graph(const GraphCase& gc, const CheckOptions& opt, std::vector<std::string>* notes) {
  const StrandedGraph& g = gc.graph;
  const int n = g.rank;
  std::vector<Verdict> out;
  auto append = [&](std::vector<Verdict> v) { out.insert(out.end(), v.begin(), v.end()); };
  try {
    AllForms G = all_forms(g, opt.budget);
    const StateCounts cG = state_counts(g);
    for (EdgeId e : g.edge_ids()) {
      Recorder rec(gc, e.value, opt);
      EdgeData d = edge_data(g, e);
      AllForms Fc = all_forms(d.cut_g, opt.budget);
      AllForms Fk = all_forms(d.con_g, opt.budget);
      if (n >= 2) recurrence_into(rec, n, d.cls, G.invariant, Fc.invariant, Fk.invariant);
      if (n >= 3) count_relations_into(rec, n, d.cls, cG, state_counts(d.cut_g), state_counts(d.con_g));
      rec.eq("boundary.contraction", boundary_tuple(boundary(g).stats), boundary_tuple(boundary(d.con_g).stats));
      if (d.cls.kind != EdgeClass::Kind::Loop) {
        MultivariateForm rhs = Fc.multivariate;
        rhs += Fk.multivariate.times_x_beta(e.value);
        rec.eq("multivariate.rule", rhs, G.multivariate);
      }
      append(rec.take());
    }
    {
      Recorder rec(gc, std::nullopt, opt);
      bubble_identities_into(rec, g);
      for (const auto& a : alpha_samples(n)) bounds_into(rec, g, a);
      three_bubbles_into(rec, g);
      for (int m = 1; m <= 3; ++m)
        rec.eq("discs.invariance", G.invariant, invariant(with_discs(g, m), AlphaMode::symbolic(), opt.budget));
      append(rec.take());
    }
    append(check_full_contraction(gc, gc.seed.value_or(0) * 2654435761u + 17, opt));
    append(check_oracle(gc, opt));
  } catch (const BudgetExceeded& ex) {
    if (notes) notes->push_back("skipped " + gc.id + ": " + ex.what());
    return {};
  }
  return out;
}

GraphCase corpus_graph(int rank, std::uint64_t seed, int max_edges) {
  const int cuts = static_cast<int>(seed % 4);
  const int contractions = 2 + static_cast<int>((seed / 4) % 4);
  GraphCase gc;
  gc.id = "random(rank=" + std::to_string(rank) + ",seed=" + std::to_string(seed) + ")";
  gc.seed = seed;
  gc.graph = gen_random(rank, cuts, contractions, seed, max_edges);
  return gc;
}

namespace {

void add_chord(Vertex& v, PreEdgeId a, Color ca, Color ka, PreEdgeId b, Color kb) {
  v.chords.push_back({{v.id, a, ka}, {v.id, b, kb}, ColorPair(ca, ka)});
}

StrandedGraph three_cut_example() {
  StrandedGraph g = gen_dipole(4);
  for (int e : {0, 3, 4}) g = cut(g, EdgeId(e));
  return g;
}

}  // namespace

StrandedGraph trivial_loop_example(int n, int p, bool closed_sector) {
  if (n < 2 || p < 0 || p > n) throw std::invalid_argument("trivial loop example needs 0 <= p <= n, n >= 2");
  StrandedGraph g = StrandedGraph::empty(n);
  Vertex v;
  v.id = VertexId(0);
  const PreEdgeId e0(0), e1(1);
  v.pre_edges = {e0, e1};
  g.edges.emplace(EdgeId(0), Edge{EdgeId(0), 0, {EndRef{v.id, e0}, EndRef{v.id, e1}}});
  g.pre_edges.emplace(e0, PreEdge{e0, v.id, 0, EdgeEnd{EdgeId(0), 0}});
  g.pre_edges.emplace(e1, PreEdge{e1, v.id, 0, EdgeEnd{EdgeId(0), 1}});
  int next_half = 0;
  for (int k = 1; k <= n; ++k) {
    if (k <= p) {
      add_chord(v, e0, 0, k, e1, k);
      continue;
    }
    // Outer strand k: its sector is a pair of color-k pre-edges.
    const PreEdgeId a(2 * k), b(2 * k + 1);
    v.pre_edges.push_back(a);
    v.pre_edges.push_back(b);
    add_chord(v, e0, 0, k, a, 0);
    add_chord(v, e1, 0, k, b, 0);
    for (int j = 1; j <= n; ++j)
      if (j != k) add_chord(v, a, k, j, b, j);
    if (closed_sector && k == n) {
      const EdgeId e(k);
      g.edges.emplace(e, Edge{e, k, {EndRef{v.id, a}, EndRef{v.id, b}}});
      g.pre_edges.emplace(a, PreEdge{a, v.id, k, EdgeEnd{e, 0}});
      g.pre_edges.emplace(b, PreEdge{b, v.id, k, EdgeEnd{e, 1}});
    } else {
      for (PreEdgeId q : {a, b}) {
        const HalfEdgeId h(next_half++);
        g.half_edges.emplace(h, HalfEdge{h, k, EndRef{v.id, q}});
        g.pre_edges.emplace(q, PreEdge{q, v.id, k, h});
      }
    }
  }
  std::sort(v.pre_edges.begin(), v.pre_edges.end());
  for (Chord& ch : v.chords)
    if (ch.b < ch.a) std::swap(ch.a, ch.b);
  std::sort(v.chords.begin(), v.chords.end());
  g.vertices.emplace(v.id, std::move(v));
  require_valid(g);
  return g;
}

std::vector<GraphCase> build_corpus(const CorpusSpec& spec, std::vector<std::string>* notes) {
  std::vector<GraphCase> out;
  auto add_seeds = [&](int rank, int max_edges) {
    for (std::uint64_t s = spec.seed_lo; s <= spec.seed_hi; ++s) {
      try {
        out.push_back(corpus_graph(rank, s, max_edges));
      } catch (const BudgetExceeded& ex) {
        if (notes) notes->push_back("skipped rank " + std::to_string(rank) + " seed " + std::to_string(s) + ": " + ex.what());
      }
      if (s == UINT64_MAX) break;
    }
  };
  if (spec.seed_lo <= spec.seed_hi)
    for (int r : spec.ranks) add_seeds(r, spec.max_edges);
  if (spec.fixtures) {
    for (int r : spec.ranks)
      if (r >= 3) out.push_back({"dipole(" + std::to_string(r) + ")", std::nullopt, gen_dipole(r)});
    for (int r : spec.ranks)
      for (int p = 0; p <= r; ++p)
        for (bool closed : {false, true}) {
          if (closed && p >= r) continue;
          out.push_back({"trivial_loop(rank=" + std::to_string(r) + ",p=" + std::to_string(p) +
                             (closed ? ",closed)" : ")"),
                         std::nullopt, trivial_loop_example(r, p, closed)});
        }
    if (std::find(spec.ranks.begin(), spec.ranks.end(), 4) != spec.ranks.end())
      out.push_back({"dipole(4)-cut{0,3,4}", std::nullopt, three_cut_example()});
  }
  if (spec.oracle_corpora && spec.seed_lo <= spec.seed_hi) {
    for (int r : {1, 2}) add_seeds(r, spec.oracle_max_edges);
    if (spec.fixtures)
      for (int r : {1, 2}) out.push_back({"dipole(" + std::to_string(r) + ")", std::nullopt, gen_dipole(r)});
  }
  return out;
}

int Report::failures() const {
  return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return !v.pass; }));
}

std::vector<ClaimTally> Report::tally() const {
  std::map<std::string, ClaimTally> m;
  for (const Verdict& v : verdicts) {
    auto& t = m[v.claim];
    t.claim = v.claim;
    (v.pass ? t.pass : t.fail) += 1;
  }
  std::vector<ClaimTally> out;
  for (auto& [k, t] : m) out.push_back(t);
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "graphs " << graphs << '\n';
  for (const ClaimTally& t : tally()) os << "  " << t.claim << "  pass " << t.pass << "  fail " << t.fail << '\n';
  for (const Verdict& v : verdicts) {
    if (v.pass) continue;
    os << "FAIL " << v.claim << " on " << v.graph;
    if (v.seed) os << " seed " << *v.seed;
    if (v.edge) os << " edge " << *v.edge;
    os << "\n  expected: " << v.expected << "\n  actual:   " << v.actual << "\n";
    std::istringstream in(v.reproduction);
    for (std::string line; std::getline(in, line);) os << "    | " << line << '\n';
  }
  for (const std::string& n : notes) os << "note: " << n << '\n';
  const int f = failures();
  const int total = static_cast<int>(verdicts.size());
  if (f == 0) {
    os << "all " << total << " claims pass\n";
  } else {
    os << f << " of " << total << " claims fail\n";
  }
  return os.str();
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["graphs"] = graphs;
  j["total"] = verdicts.size();
  j["failures"] = failures();
  nlohmann::json t = nlohmann::json::array();
  for (const ClaimTally& c : tally()) t.push_back({{"claim", c.claim}, {"pass", c.pass}, {"fail", c.fail}});
  j["claims"] = t;
  nlohmann::json f = nlohmann::json::array();
  for (const Verdict& v : verdicts)
    if (!v.pass) f.push_back(v.to_json());
  j["failing"] = f;
  j["notes"] = notes;
  return j;
}

Report run_suite(const CorpusSpec& spec) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  std::vector<GraphCase> corpus = build_corpus(spec, &rep.notes);
  rep.graphs = static_cast<int>(corpus.size());
  std::vector<std::vector<Verdict>> results(corpus.size());
  std::vector<std::vector<std::string>> notes(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();)
      results[i] = verify_graph(corpus[i], spec.options, &notes[i]);
  };
  const int jobs = std::max(1, spec.jobs);
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    rep.verdicts.insert(rep.verdicts.end(), results[i].begin(), results[i].end());
    rep.notes.insert(rep.notes.end(), notes[i].begin(), notes[i].end());
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace wsg
