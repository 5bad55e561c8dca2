#pragma once

// Flat, index-based view of a stranded graph used by the enumeration and
// census kernels. Nodes are pre-edges; ports are node * rank + slot, where
// slot enumerates the other colors of the node in palette order.

#include <cstdint>
#include <vector>

#include "wsg/graph.hpp"

namespace wsg {

struct Frame {
  int rank = 0;
  int colors = 0;
  std::vector<Color> palette;
  int num_vertices = 0;
  int discs = 0;

  std::vector<PreEdgeId> node_ids;
  std::vector<VertexId> vertex_ids;
  std::vector<int> node_color;   // palette index
  std::vector<int> node_vertex;  // vertex index
  std::vector<int> node_edge;    // edge index, or -1 for a half-edge
  std::vector<int> node_half;    // half-edge index, or -1

  std::vector<int> chord;  // port -> chord partner port

  std::vector<EdgeId> edge_ids;
  std::vector<HalfEdgeId> half_ids;
  std::vector<int> edge_color;
  std::vector<std::array<int, 2>> edge_nodes;

  int num_nodes() const { return static_cast<int>(node_ids.size()); }
  int num_edges() const { return static_cast<int>(edge_ids.size()); }
  int port(int node, int other_color_index) const {
    int c = node_color[node];
    return node * rank + (other_color_index < c ? other_color_index : other_color_index - 1);
  }
  int port_node(int p) const { return p / rank; }
  /// Palette index of the other color of port p.
  int port_other(int p) const {
    int s = p % rank;
    return s < node_color[p / rank] ? s : s + 1;
  }
  /// Bitmask over palette indices of the pair carried by port p.
  std::uint32_t port_pair_mask(int p) const {
    return (1u << node_color[p / rank]) | (1u << port_other(p));
  }
  int node_index(PreEdgeId id) const;
  int edge_index(EdgeId id) const;
};

Frame build_frame(const StrandedGraph& g);

/// Every count a spanning state contributes to the polynomials.
/// Bubble vectors are indexed by the size p of the color set (0..rank+1);
/// boundary_bubbles is indexed by i in 0..rank.
struct StateCounts {
  int V = 0, E = 0, f = 0, k = 0;
  int F_int = 0, F_ext = 0;
  std::vector<int> B_int, B_ext;
  int C_bd = 0;
  std::vector<int> boundary_bubbles;
  int r() const { return V - k; }
  int nullity() const { return E - r(); }
  int B(int p) const { return B_int[p] + B_ext[p]; }
  int E_bd() const { return boundary_bubbles[1]; }
  int F_bd() const { return boundary_bubbles.size() > 2 ? boundary_bubbles[2] : 0; }
  int V_bd() const { return boundary_bubbles[0]; }
  bool operator==(const StateCounts&) const = default;
};

/// A face traced on the frame; ports alternate chord-step / strand-step.
struct FrameFace {
  std::vector<int> ports;
  std::uint32_t pair_mask = 0;
  bool closed = false;
};

/// Reusable scratch space; one instance per worker.
class CensusKernel {
 public:
  explicit CensusKernel(const Frame& frame);

  /// Counts for the spanning state keeping exactly the edges in `kept`
  /// (bit i = edge index i).
  const StateCounts& run(std::uint64_t kept);

  /// Faces of the last run(), discs excluded.
  std::vector<FrameFace> faces(std::uint64_t kept) const;

  const Frame& frame() const { return f_; }

 private:
  bool is_free(int node, std::uint64_t kept) const;
  const Frame& f_;
  StateCounts out_;
  std::vector<char> seen_;
  std::vector<std::uint32_t> subsets_;  // color subsets with >= 3 colors
  std::vector<int> parent_;
  std::vector<int> mark_;
  int stamp_ = 0;
  std::vector<int> free_nodes_;
  struct BEdge {
    int a, b;
    std::uint32_t pair;
  };
  std::vector<BEdge> bedges_;
};

}  // namespace wsg
