#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsg/frame.hpp"
#include "wsg/graph.hpp"

namespace wsg {

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum edge count for 2^E enumeration: WSG_BUDGET if set, else 20.
int enumeration_budget();

/// Replaces e by two half-edges; the half-edge at end 0 gets the smaller
/// new id.
StrandedGraph cut(const StrandedGraph& g, EdgeId e);

struct ContractionResult {
  StrandedGraph graph;
  int inner_faces = 0;
  /// Sectors the merged vertex split into, in id order (empty when the
  /// merged vertex vanished).
  std::vector<VertexId> sectors;
};

/// Strand-tracing contraction. The first sector keeps the smaller end
/// vertex id; further sectors are numbered past the largest vertex id.
ContractionResult contract_detailed(const StrandedGraph& g, EdgeId e);
StrandedGraph contract(const StrandedGraph& g, EdgeId e);

struct EdgeClass {
  enum class Kind { Bridge, Loop, Regular };
  Kind kind = Kind::Regular;
  int p_inner = 0;
  bool trivial = false;
  bool operator==(const EdgeClass&) const = default;
  std::string to_string() const;
};

/// Number of faces that close inside loop e (0 for non-loops).
int inner_faces(const StrandedGraph& g, EdgeId e);
EdgeClass classify(const StrandedGraph& g, EdgeId e);

/// One spanning c-subgraph: the edges in `subset` are kept, the rest cut.
class SpanningSubgraphState {
 public:
  SpanningSubgraphState(const StrandedGraph* g, std::uint64_t mask, std::vector<EdgeId> subset,
                        StateCounts counts)
      : g_(g), mask_(mask), subset_(std::move(subset)), counts_(std::move(counts)) {}
  std::uint64_t mask() const { return mask_; }
  const std::vector<EdgeId>& subset() const { return subset_; }
  const StateCounts& counts() const { return counts_; }
  CountsRecord counts_record() const;
  /// Builds the graph with every unchosen edge cut, in increasing id order.
  StrandedGraph materialize() const;

 private:
  const StrandedGraph* g_;
  std::uint64_t mask_;
  std::vector<EdgeId> subset_;
  StateCounts counts_;
};

/// Visits all 2^E states in binary-counting order over sorted edge ids.
/// Throws BudgetExceeded when E exceeds `budget` (default: enumeration_budget()).
void for_each_spanning_subset(const StrandedGraph& g,
                              const std::function<void(const SpanningSubgraphState&)>& visit,
                              std::optional<int> budget = std::nullopt);

std::vector<SpanningSubgraphState> spanning_subsets(const StrandedGraph& g,
                                                    std::optional<int> budget = std::nullopt);

/// Lower-level streaming used by the polynomial code: counts only.
void for_each_state_counts(const Frame& frame,
                           const std::function<void(std::uint64_t, const StateCounts&)>& visit,
                           std::optional<int> budget = std::nullopt);

/// Contracts every edge in the given order; `order` must be a permutation
/// of the edge ids.
StrandedGraph full_contract(const StrandedGraph& g, const std::vector<EdgeId>& order);

/// Cuts every edge whose id is not in `keep`.
StrandedGraph cut_complement(const StrandedGraph& g, const std::vector<EdgeId>& keep);

}  // namespace wsg
