#include "wsg/frame.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "wsg/union_find.hpp"

namespace wsg {

int Frame::node_index(PreEdgeId id) const {
  auto it = std::lower_bound(node_ids.begin(), node_ids.end(), id);
  if (it == node_ids.end() || *it != id) throw UnknownEntity("unknown pre-edge " + std::to_string(id.value));
  return static_cast<int>(it - node_ids.begin());
}

int Frame::edge_index(EdgeId id) const {
  auto it = std::lower_bound(edge_ids.begin(), edge_ids.end(), id);
  if (it == edge_ids.end() || *it != id) throw UnknownEntity("unknown edge " + std::to_string(id.value));
  return static_cast<int>(it - edge_ids.begin());
}

Frame build_frame(const StrandedGraph& g) {
  Frame f;
  f.rank = g.rank;
  f.colors = g.rank + 1;
  f.palette = g.palette;
  f.discs = g.discs;
  if (f.colors > 31) throw std::invalid_argument("rank too large for the census kernel");
  if (g.edges.size() > 63) throw std::invalid_argument("too many edges for the census kernel");

  std::map<VertexId, int> vindex;
  for (const auto& [vid, v] : g.vertices) {
    vindex.emplace(vid, static_cast<int>(f.vertex_ids.size()));
    f.vertex_ids.push_back(vid);
  }
  f.num_vertices = static_cast<int>(f.vertex_ids.size());
  for (const auto& [eid, e] : g.edges) f.edge_ids.push_back(eid);
  for (const auto& [hid, h] : g.half_edges) f.half_ids.push_back(hid);
  for (const auto& [pid, pe] : g.pre_edges) f.node_ids.push_back(pid);

  const int n = f.num_nodes();
  f.node_color.resize(n);
  f.node_vertex.resize(n);
  f.node_edge.assign(n, -1);
  f.node_half.assign(n, -1);
  f.edge_color.resize(f.edge_ids.size());
  f.edge_nodes.resize(f.edge_ids.size());
  int i = 0;
  for (const auto& [pid, pe] : g.pre_edges) {
    f.node_color[i] = g.color_index(pe.color);
    f.node_vertex[i] = vindex.at(pe.vertex);
    if (const auto* ee = std::get_if<EdgeEnd>(&pe.attachment)) {
      int e = f.edge_index(ee->edge);
      f.node_edge[i] = e;
      f.edge_nodes[e][ee->end] = i;
      f.edge_color[e] = g.color_index(pe.color);
    } else {
      auto hid = std::get<HalfEdgeId>(pe.attachment);
      f.node_half[i] = static_cast<int>(std::lower_bound(f.half_ids.begin(), f.half_ids.end(), hid) -
                                        f.half_ids.begin());
    }
    ++i;
  }
  f.chord.assign(static_cast<std::size_t>(n) * f.rank, -1);
  for (const auto& [vid, v] : g.vertices) {
    for (const Chord& ch : v.chords) {
      int a = f.port(f.node_index(ch.a.pre), g.color_index(ch.a.other));
      int b = f.port(f.node_index(ch.b.pre), g.color_index(ch.b.other));
      f.chord[a] = b;
      f.chord[b] = a;
    }
  }
  if (std::find(f.chord.begin(), f.chord.end(), -1) != f.chord.end())
    throw std::invalid_argument("graph has uncovered ports");
  return f;
}

CensusKernel::CensusKernel(const Frame& frame) : f_(frame) {
  for (std::uint32_t s = 0; s < (1u << f_.colors); ++s)
    if (std::popcount(s) >= 3) subsets_.push_back(s);
  parent_.resize(f_.num_nodes());
  mark_.assign(f_.num_nodes(), 0);
  seen_.resize(f_.chord.size());
  out_.B_int.assign(f_.colors + 1, 0);
  out_.B_ext.assign(f_.colors + 1, 0);
  out_.boundary_bubbles.assign(f_.rank + 1, 0);
}

bool CensusKernel::is_free(int node, std::uint64_t kept) const {
  int e = f_.node_edge[node];
  return e < 0 || !((kept >> e) & 1u);
}

namespace {

int find(std::vector<int>& p, int x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

}  // namespace

const StateCounts& CensusKernel::run(std::uint64_t kept) {
  const Frame& F = f_;
  const int n = F.rank;
  const int nodes = F.num_nodes();
  StateCounts& o = out_;
  std::fill(o.B_int.begin(), o.B_int.end(), 0);
  std::fill(o.B_ext.begin(), o.B_ext.end(), 0);
  std::fill(o.boundary_bubbles.begin(), o.boundary_bubbles.end(), 0);

  o.E = std::popcount(kept);
  o.V = F.num_vertices + F.discs;
  o.f = 0;
  free_nodes_.clear();
  for (int u = 0; u < nodes; ++u)
    if (is_free(u, kept)) free_nodes_.push_back(u);
  o.f = static_cast<int>(free_nodes_.size());

  // Components of the collapsed graph.
  {
    UnionFind uf(F.num_vertices);
    for (int e = 0; e < F.num_edges(); ++e)
      if ((kept >> e) & 1u) uf.unite(F.node_vertex[F.edge_nodes[e][0]], F.node_vertex[F.edge_nodes[e][1]]);
    o.k = uf.components() + F.discs;
  }

  // Faces.
  std::fill(seen_.begin(), seen_.end(), 0);
  bedges_.clear();
  auto strand = [&](int q) {
    int u = q / n;
    int e = F.node_edge[u];
    int w = F.edge_nodes[e][0] == u ? F.edge_nodes[e][1] : F.edge_nodes[e][0];
    return w * n + q % n;
  };
  o.F_ext = 0;
  for (int u : free_nodes_) {
    for (int s = 0; s < n; ++s) {
      int p = u * n + s;
      if (seen_[p]) continue;
      int cur = p;
      for (;;) {
        seen_[cur] = 1;
        int q = F.chord[cur];
        seen_[q] = 1;
        if (is_free(q / n, kept)) {
          bedges_.push_back({u, q / n, F.port_pair_mask(p)});
          break;
        }
        cur = strand(q);
      }
      ++o.F_ext;
    }
  }
  o.F_int = F.discs;
  for (int p = 0; p < static_cast<int>(seen_.size()); ++p) {
    if (seen_[p]) continue;
    int cur = p;
    do {
      seen_[cur] = 1;
      int q = F.chord[cur];
      seen_[q] = 1;
      cur = strand(q);
    } while (cur != p);
    ++o.F_int;
  }

  // Bubbles over every color set of size >= 3.
  for (std::uint32_t S : subsets_) {
    for (int u = 0; u < nodes; ++u)
      if ((S >> F.node_color[u]) & 1u) parent_[u] = u;
    for (int u = 0; u < nodes; ++u) {
      if (!((S >> F.node_color[u]) & 1u)) continue;
      for (int s = 0; s < n; ++s) {
        int p = u * n + s;
        if (!((S >> F.port_other(p)) & 1u)) continue;
        int q = F.chord[p];
        if (q < p) continue;
        int a = find(parent_, u), b = find(parent_, q / n);
        if (a != b) parent_[a] = b;
      }
    }
    for (int e = 0; e < F.num_edges(); ++e) {
      if (!((kept >> e) & 1u) || !((S >> F.edge_color[e]) & 1u)) continue;
      int a = find(parent_, F.edge_nodes[e][0]), b = find(parent_, F.edge_nodes[e][1]);
      if (a != b) parent_[a] = b;
    }
    const int p = std::popcount(S);
    int total = 0, open = 0;
    for (int u = 0; u < nodes; ++u)
      if (((S >> F.node_color[u]) & 1u) && find(parent_, u) == u) ++total;
    ++stamp_;
    for (int u : free_nodes_) {
      if (!((S >> F.node_color[u]) & 1u)) continue;
      int r = find(parent_, u);
      if (mark_[r] != stamp_) {
        mark_[r] = stamp_;
        ++open;
      }
    }
    o.B_ext[p] += open;
    o.B_int[p] += total - open;
  }

  // Boundary graph on free nodes.
  o.boundary_bubbles[0] = o.f;
  o.boundary_bubbles[1] = static_cast<int>(bedges_.size());
  {
    for (int u : free_nodes_) parent_[u] = u;
    int comps = o.f;
    for (const auto& be : bedges_) {
      int a = find(parent_, be.a), b = find(parent_, be.b);
      if (a != b) {
        parent_[a] = b;
        --comps;
      }
    }
    o.C_bd = comps;
  }
  if (o.f > 0) {
    for (std::uint32_t T : subsets_) {
      int i = std::popcount(T) - 1;
      if (i > n) continue;
      int comps = 0;
      for (int u : free_nodes_)
        if ((T >> F.node_color[u]) & 1u) {
          parent_[u] = u;
          ++comps;
        }
      for (const auto& be : bedges_) {
        if ((be.pair & T) != be.pair) continue;
        int a = find(parent_, be.a), b = find(parent_, be.b);
        if (a != b) {
          parent_[a] = b;
          --comps;
        }
      }
      o.boundary_bubbles[i] += comps;
    }
  }
  return o;
}

std::vector<FrameFace> CensusKernel::faces(std::uint64_t kept) const {
  const Frame& F = f_;
  const int n = F.rank;
  std::vector<char> seen(F.chord.size(), 0);
  std::vector<FrameFace> out;
  auto strand = [&](int q) {
    int u = q / n;
    int e = F.node_edge[u];
    int w = F.edge_nodes[e][0] == u ? F.edge_nodes[e][1] : F.edge_nodes[e][0];
    return w * n + q % n;
  };
  for (int u = 0; u < F.num_nodes(); ++u) {
    if (!is_free(u, kept)) continue;
    for (int s = 0; s < n; ++s) {
      int p = u * n + s;
      if (seen[p]) continue;
      FrameFace face;
      face.pair_mask = F.port_pair_mask(p);
      int cur = p;
      for (;;) {
        seen[cur] = 1;
        face.ports.push_back(cur);
        int q = F.chord[cur];
        seen[q] = 1;
        face.ports.push_back(q);
        if (is_free(q / n, kept)) break;
        cur = strand(q);
      }
      out.push_back(std::move(face));
    }
  }
  for (int p = 0; p < static_cast<int>(seen.size()); ++p) {
    if (seen[p]) continue;
    FrameFace face;
    face.closed = true;
    face.pair_mask = F.port_pair_mask(p);
    int cur = p;
    do {
      seen[cur] = 1;
      face.ports.push_back(cur);
      int q = F.chord[cur];
      seen[q] = 1;
      face.ports.push_back(q);
      cur = strand(q);
    } while (cur != p);
    out.push_back(std::move(face));
  }
  return out;
}

}  // namespace wsg
