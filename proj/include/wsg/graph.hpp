#pragma once

// Data model for rank-n weakly-colored stranded graphs.
//
// A vertex is a chord diagram whose chord end points are grouped into
// pre-edges. Every pre-edge carries one edge end or one half-edge, and the
// ports of a pre-edge of color c are addressed by the other color k of the
// pair {c, k}; no cyclic order is stored. Trivial discs are a counter.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace wsg {

template <class Tag>
struct Id {
  int value = -1;
  constexpr Id() = default;
  constexpr explicit Id(int v) : value(v) {}
  constexpr auto operator<=>(const Id&) const = default;
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, Id<Tag> id) {
  return os << id.value;
}

using VertexId = Id<struct VertexTag>;
using PreEdgeId = Id<struct PreEdgeTag>;
using EdgeId = Id<struct EdgeTag>;
using HalfEdgeId = Id<struct HalfEdgeTag>;

using Color = int;

struct ColorPair {
  Color lo = 0;
  Color hi = 0;
  constexpr ColorPair() = default;
  constexpr ColorPair(Color a, Color b) : lo(a < b ? a : b), hi(a < b ? b : a) {}
  constexpr auto operator<=>(const ColorPair&) const = default;
  constexpr bool contains(Color c) const { return c == lo || c == hi; }
};

/// A chord end point: the slot of pre-edge `pre` whose pair is
/// {color(pre), other}.
struct PortRef {
  VertexId vertex;
  PreEdgeId pre;
  Color other = 0;
  auto operator<=>(const PortRef&) const = default;
};

struct Chord {
  PortRef a;
  PortRef b;
  ColorPair pair;
  auto operator<=>(const Chord&) const = default;
};

struct EdgeEnd {
  EdgeId edge;
  int end = 0;
  auto operator<=>(const EdgeEnd&) const = default;
};

using Attachment = std::variant<EdgeEnd, HalfEdgeId>;

struct PreEdge {
  PreEdgeId id;
  VertexId vertex;
  Color color = 0;
  Attachment attachment;
  bool operator==(const PreEdge&) const = default;
};

struct Vertex {
  VertexId id;
  std::vector<PreEdgeId> pre_edges;
  std::vector<Chord> chords;
  bool operator==(const Vertex&) const = default;
};

struct EndRef {
  VertexId vertex;
  PreEdgeId pre;
  auto operator<=>(const EndRef&) const = default;
};

struct Edge {
  EdgeId id;
  Color color = 0;
  std::array<EndRef, 2> ends;
  bool operator==(const Edge&) const = default;
  bool is_loop() const { return ends[0].vertex == ends[1].vertex; }
};

struct HalfEdge {
  HalfEdgeId id;
  Color color = 0;
  EndRef at;
  bool operator==(const HalfEdge&) const = default;
};

/// Value type; every operation in the library takes graphs by const
/// reference and returns new graphs.
struct StrandedGraph {
  int rank = 0;
  /// rank + 1 sorted color labels. Defaults to 0..rank; bubbles extracted
  /// from a larger graph keep their original labels.
  std::vector<Color> palette;
  std::map<VertexId, Vertex> vertices;
  std::map<PreEdgeId, PreEdge> pre_edges;
  std::map<EdgeId, Edge> edges;
  std::map<HalfEdgeId, HalfEdge> half_edges;
  int discs = 0;

  bool operator==(const StrandedGraph&) const = default;

  static StrandedGraph empty(int rank);

  int num_colors() const { return rank + 1; }
  /// Position of `c` in the palette, or -1.
  int color_index(Color c) const;
  bool has_color(Color c) const { return color_index(c) >= 0; }

  const Vertex& vertex(VertexId id) const;
  const PreEdge& pre_edge(PreEdgeId id) const;
  const Edge& edge(EdgeId id) const;
  const HalfEdge& half_edge(HalfEdgeId id) const;

  VertexId next_vertex_id() const;
  PreEdgeId next_pre_edge_id() const;
  EdgeId next_edge_id() const;
  HalfEdgeId next_half_edge_id() const;

  std::vector<EdgeId> edge_ids() const;
};

struct Violation {
  std::string entity;
  std::string rule;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

class InvalidGraph : public std::runtime_error {
 public:
  explicit InvalidGraph(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class UnknownEntity : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

ValidationReport validate(const StrandedGraph& g);

/// Throws InvalidGraph when validate(g) reports violations.
void require_valid(const StrandedGraph& g);

struct CountsRecord {
  int V = 0;
  int E = 0;
  int f = 0;
  int k = 0;
  int r = 0;
  int nullity = 0;
  int discs = 0;
  auto operator<=>(const CountsRecord&) const = default;
};

CountsRecord stats(const StrandedGraph& g);

/// Counts without running validation; callers guarantee validity.
CountsRecord stats_unchecked(const StrandedGraph& g);

StrandedGraph normalize(const StrandedGraph& g);
StrandedGraph with_discs(const StrandedGraph& g, int m);

/// Disjoint union; ids of `b` are shifted past those of `a`.
StrandedGraph disjoint_union(const StrandedGraph& a, const StrandedGraph& b);

}  // namespace wsg
