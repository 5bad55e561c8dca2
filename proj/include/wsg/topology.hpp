#pragma once

#include <map>
#include <vector>

#include "wsg/affine.hpp"
#include "wsg/frame.hpp"
#include "wsg/graph.hpp"

namespace wsg {

struct Face {
  bool disc = false;
  ColorPair pair;
  bool closed = true;
  /// Ports visited; ports[2i] and ports[2i+1] are joined by a chord,
  /// ports[2i+1] and ports[2i+2] by an edge strand (cyclically when closed).
  std::vector<PortRef> trace;
};

std::vector<Face> faces(const StrandedGraph& g);

struct Bubble {
  std::vector<Color> colors;
  std::vector<PreEdgeId> pre_edges;
  std::vector<EdgeId> edges;
  std::vector<HalfEdgeId> half_edges;
  int sub_vertices = 0;
  bool open = false;
};

/// Components of the restriction to color set S (|S| >= 3), ordered by
/// smallest pre-edge id.
std::vector<Bubble> bubbles(const StrandedGraph& g, const std::vector<Color>& S);

/// Standalone graph of rank |S|-1 for the index-th bubble of S.
StrandedGraph extract_bubble(const StrandedGraph& g, const std::vector<Color>& S, int index);

struct BoundaryVertex {
  HalfEdgeId half_edge;
  Color color = 0;
};

struct BoundaryEdge {
  HalfEdgeId a;
  HalfEdgeId b;
  ColorPair pair;
};

struct BoundaryStats {
  int V = 0;  // V_∂ = f
  int C = 0;  // components
  int E = 0;  // = F_ext
  int F = 0;  // = B^2(∂)
  /// B^i(∂) for i = 0..rank.
  std::vector<int> B;
  bool operator==(const BoundaryStats&) const = default;
};

struct BoundaryGraph {
  std::vector<BoundaryVertex> vertices;
  std::vector<BoundaryEdge> edges;
  BoundaryStats stats;
};

BoundaryGraph boundary(const StrandedGraph& g);

struct BubbleEuler {
  std::vector<Color> colors;
  int V = 0, E = 0, F_int = 0, C_bd = 0;
  int genus = 0;
  int euler() const { return V - E + F_int; }
};

struct CensusRecord {
  int rank = 0;
  int V = 0, E = 0, f = 0, k = 0;
  int F_int = 0, F_ext = 0;
  /// Indexed by bubble size p (entries for p < 3 are zero), up to rank+1.
  std::vector<int> B_int, B_ext;
  BoundaryStats boundary;
  std::vector<BubbleEuler> three_bubbles;
  int sum_three_bubble_C_bd = 0;
  /// Component count of all faces, and whether it equals F_int + C_∂.
  int B2 = 0;
  bool B2_matches_int_plus_C = false;
  int B(int p) const { return B_int.at(p) + B_ext.at(p); }
};

StateCounts state_counts(const StrandedGraph& g);
CensusRecord census(const StrandedGraph& g);

/// gamma from precomputed counts; rank >= 2.
AffineExpr gamma_from_counts(int rank, const StateCounts& c);
AffineExpr gamma_consecutive_from_counts(int rank, const StateCounts& c);
AffineExpr gamma(const StrandedGraph& g);
AffineExpr gamma_consecutive(const StrandedGraph& g);

/// Positive alphas (a3..an) with the alternating sign pattern in gamma.
std::vector<Rational> alternating_alphas(int n);
/// Coefficient of B^k in gamma at given alphas, k = 3..n.
Rational gamma_bubble_coefficient(int n, int k, const std::vector<Rational>& alphas);

}  // namespace wsg
