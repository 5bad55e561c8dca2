#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "wsg/affine.hpp"
#include "wsg/graph.hpp"
#include "wsg/polynomial.hpp"

namespace wsg {

/// Identifies a corpus graph; `seed` is set for generated graphs.
struct GraphCase {
  std::string id;
  std::optional<std::uint64_t> seed;
  StrandedGraph graph;
};

struct Verdict {
  std::string claim;
  std::string graph;
  std::optional<std::uint64_t> seed;
  std::optional<int> edge;
  std::string expected;
  std::string actual;
  bool pass = false;
  /// Serialized graph, filled for failures.
  std::string reproduction;
  nlohmann::json to_json() const;
};

/// Harness options shared by every check.
struct CheckOptions {
  /// Claims whose id starts with this prefix compare against a perturbed
  /// expectation (harness self-test).
  std::string corrupt;
  /// Edge-count cap passed to the enumeration.
  std::optional<int> budget;
};

std::vector<Verdict> check_recurrence(const GraphCase& g, EdgeId e, const CheckOptions& opt = {});
std::vector<Verdict> check_count_relations(const GraphCase& g, EdgeId e, const CheckOptions& opt = {});
std::vector<Verdict> check_bubble_identities(const GraphCase& g, const CheckOptions& opt = {});
std::vector<Verdict> check_bounds(const GraphCase& g, const std::vector<Rational>& alphas,
                                  const CheckOptions& opt = {});
std::vector<Verdict> check_boundary_preservation(const GraphCase& g, EdgeId e, const CheckOptions& opt = {});
/// Full contraction in two seeded random orders gives equal boundary stats.
std::vector<Verdict> check_full_contraction(const GraphCase& g, std::uint64_t seed, const CheckOptions& opt = {});
/// Invariant unchanged by adding m discs.
std::vector<Verdict> check_disc_invariance(const GraphCase& g, int m, const CheckOptions& opt = {});
/// Multivariate rule for non-loop e.
std::vector<Verdict> check_multivariate_rule(const GraphCase& g, EdgeId e, const CheckOptions& opt = {});
/// Specialization of the invariant equals the matching oracle (rank 1 or 2).
std::vector<Verdict> check_oracle(const GraphCase& g, const CheckOptions& opt = {});

enum class OracleKind { Tutte, BR };

/// Deletion-contraction Tutte polynomial of a multigraph, in x, y.
Polynomial tutte_oracle(int num_vertices, const std::vector<std::pair<int, int>>& edges);
/// Tutte (rank 1, underlying multigraph) or Bollobas-Riordan with half-edges
/// (rank 2, subset sum over ribbon states). Shares no code with invariant().
Polynomial oracle(const StrandedGraph& g, OracleKind kind);

/// Positive alpha samples used by the bound checks for rank n.
std::vector<std::vector<Rational>> alpha_samples(int n);

struct CorpusSpec {
  std::vector<int> ranks{3, 4, 5};
  std::uint64_t seed_lo = 0;
  std::uint64_t seed_hi = 69;  // inclusive
  int max_edges = 10;
  /// Adds the fixed examples (dipoles, the rank-4 three-cut example).
  bool fixtures = true;
  /// Adds rank-1 and rank-2 corpora for the oracle comparisons.
  bool oracle_corpora = true;
  int oracle_max_edges = 8;
  int jobs = 1;
  CheckOptions options;
};

/// Generator parameters for seed s: cuts s%4, contractions 2+(s/4)%4.
GraphCase corpus_graph(int rank, std::uint64_t seed, int max_edges);
/// Single vertex with a color-0 loop whose first p strands close at once;
/// each remaining strand k leads to its own pair of color-k pre-edges, so the
/// loop is trivial. With `closed_sector` the last pair is joined by a loop.
StrandedGraph trivial_loop_example(int n, int p, bool closed_sector = false);
std::vector<GraphCase> build_corpus(const CorpusSpec& spec, std::vector<std::string>* notes = nullptr);

struct ClaimTally {
  std::string claim;
  int pass = 0;
  int fail = 0;
};

struct Report {
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  int graphs = 0;
  double seconds = 0;

  int failures() const;
  std::vector<ClaimTally> tally() const;
  /// Deterministic text; the last line is "all N claims pass" or
  /// "K of N claims fail".
  std::string to_text() const;
  nlohmann::json to_json() const;
};

Report run_suite(const CorpusSpec& spec);
/// Runs every check on one graph.
std::vector<Verdict> verify_graph(const GraphCase& g, const CheckOptions& opt, std::vector<std::string>* notes);

}  // namespace wsg
