#include "wsg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "wsg/union_find.hpp"

namespace wsg {

namespace {

std::string name_of(VertexId v) { return "vertex " + std::to_string(v.value); }
std::string name_of(PreEdgeId p) { return "pre-edge " + std::to_string(p.value); }
std::string name_of(EdgeId e) { return "edge " + std::to_string(e.value); }
std::string name_of(HalfEdgeId h) { return "half-edge " + std::to_string(h.value); }

template <class K, class V>
K next_key(const std::map<K, V>& m) {
  return m.empty() ? K(0) : K(m.rbegin()->first.value + 1);
}

}  // namespace

StrandedGraph StrandedGraph::empty(int rank) {
  StrandedGraph g;
  g.rank = rank;
  g.palette.resize(rank + 1);
  std::iota(g.palette.begin(), g.palette.end(), 0);
  return g;
}

int StrandedGraph::color_index(Color c) const {
  auto it = std::lower_bound(palette.begin(), palette.end(), c);
  if (it == palette.end() || *it != c) return -1;
  return static_cast<int>(it - palette.begin());
}

const Vertex& StrandedGraph::vertex(VertexId id) const {
  auto it = vertices.find(id);
  if (it == vertices.end()) throw UnknownEntity("unknown " + name_of(id));
  return it->second;
}

const PreEdge& StrandedGraph::pre_edge(PreEdgeId id) const {
  auto it = pre_edges.find(id);
  if (it == pre_edges.end()) throw UnknownEntity("unknown " + name_of(id));
  return it->second;
}

const Edge& StrandedGraph::edge(EdgeId id) const {
  auto it = edges.find(id);
  if (it == edges.end()) throw UnknownEntity("unknown " + name_of(id));
  return it->second;
}

const HalfEdge& StrandedGraph::half_edge(HalfEdgeId id) const {
  auto it = half_edges.find(id);
  if (it == half_edges.end()) throw UnknownEntity("unknown " + name_of(id));
  return it->second;
}

VertexId StrandedGraph::next_vertex_id() const { return next_key(vertices); }
PreEdgeId StrandedGraph::next_pre_edge_id() const { return next_key(pre_edges); }
EdgeId StrandedGraph::next_edge_id() const { return next_key(edges); }
HalfEdgeId StrandedGraph::next_half_edge_id() const { return next_key(half_edges); }

std::vector<EdgeId> StrandedGraph::edge_ids() const {
  std::vector<EdgeId> ids;
  ids.reserve(edges.size());
  for (const auto& [id, e] : edges) ids.push_back(id);
  return ids;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& v : violations) os << v.entity << ": " << v.rule << '\n';
  return os.str();
}

InvalidGraph::InvalidGraph(ValidationReport report)
    : std::runtime_error("invalid graph:\n" + report.to_string()), report_(std::move(report)) {}

ValidationReport validate(const StrandedGraph& g) {
  ValidationReport rep;
  auto fail = [&](std::string entity, std::string rule) {
    rep.violations.push_back({std::move(entity), std::move(rule)});
  };

  if (g.rank < 1) fail("graph", "rank must be at least 1");
  if (static_cast<int>(g.palette.size()) != g.rank + 1) {
    fail("graph", "palette must have rank+1 colors");
  } else if (!std::is_sorted(g.palette.begin(), g.palette.end()) ||
             std::adjacent_find(g.palette.begin(), g.palette.end()) != g.palette.end()) {
    fail("graph", "palette must be sorted and distinct");
  }
  if (g.discs < 0) fail("graph", "disc count must be non-negative");

  for (const auto& [pid, pe] : g.pre_edges) {
    const std::string who = name_of(pid);
    if (pe.id != pid) fail(who, "id mismatch");
    if (!g.has_color(pe.color)) fail(who, "color outside palette");
    auto vit = g.vertices.find(pe.vertex);
    if (vit == g.vertices.end()) {
      fail(who, "owning vertex does not exist");
    } else {
      const auto& list = vit->second.pre_edges;
      if (std::find(list.begin(), list.end(), pid) == list.end())
        fail(who, "not listed by its owning vertex");
    }
    if (const auto* ee = std::get_if<EdgeEnd>(&pe.attachment)) {
      auto eit = g.edges.find(ee->edge);
      if (eit == g.edges.end() || ee->end < 0 || ee->end > 1) {
        fail(who, "dangling edge attachment");
      } else {
        const Edge& e = eit->second;
        if (e.ends[ee->end].pre != pid || e.ends[ee->end].vertex != pe.vertex)
          fail(who, "edge end does not point back");
        if (e.color != pe.color) fail(who, "color differs from attached edge");
      }
    } else {
      HalfEdgeId hid = std::get<HalfEdgeId>(pe.attachment);
      auto hit = g.half_edges.find(hid);
      if (hit == g.half_edges.end()) {
        fail(who, "dangling half-edge attachment");
      } else {
        if (hit->second.at.pre != pid || hit->second.at.vertex != pe.vertex)
          fail(who, "half-edge does not point back");
        if (hit->second.color != pe.color) fail(who, "color differs from attached half-edge");
      }
    }
  }

  for (const auto& [eid, e] : g.edges) {
    const std::string who = name_of(eid);
    if (e.id != eid) fail(who, "id mismatch");
    if (e.ends[0].pre == e.ends[1].pre) fail(who, "ends share a pre-edge");
    for (int s = 0; s < 2; ++s) {
      auto pit = g.pre_edges.find(e.ends[s].pre);
      if (pit == g.pre_edges.end()) {
        fail(who, "dangling end reference");
        continue;
      }
      const auto* ee = std::get_if<EdgeEnd>(&pit->second.attachment);
      if (!ee || ee->edge != eid || ee->end != s) fail(who, "end pre-edge not attached to this edge");
    }
  }

  for (const auto& [hid, h] : g.half_edges) {
    const std::string who = name_of(hid);
    if (h.id != hid) fail(who, "id mismatch");
    auto pit = g.pre_edges.find(h.at.pre);
    if (pit == g.pre_edges.end()) {
      fail(who, "dangling end reference");
      continue;
    }
    const auto* hp = std::get_if<HalfEdgeId>(&pit->second.attachment);
    if (!hp || *hp != hid) fail(who, "pre-edge not attached to this half-edge");
  }

  for (const auto& [vid, v] : g.vertices) {
    const std::string who = name_of(vid);
    if (v.id != vid) fail(who, "id mismatch");
    if (v.pre_edges.empty()) {
      fail(who, "vertex has no pre-edges (discs are counted, not stored)");
      continue;
    }
    std::map<PreEdgeId, int> local;
    for (PreEdgeId p : v.pre_edges) {
      auto pit = g.pre_edges.find(p);
      if (pit == g.pre_edges.end() || pit->second.vertex != vid) {
        fail(who, "lists " + name_of(p) + " which it does not own");
        continue;
      }
      if (!local.emplace(p, static_cast<int>(local.size())).second)
        fail(who, "lists " + name_of(p) + " twice");
    }
    std::set<std::pair<PreEdgeId, Color>> covered;
    UnionFind uf(local.size());
    bool chords_ok = true;
    for (const Chord& ch : v.chords) {
      bool ok = true;
      for (const PortRef* pr : {&ch.a, &ch.b}) {
        auto lit = local.find(pr->pre);
        if (pr->vertex != vid || lit == local.end()) {
          fail(who, "chord endpoint outside the vertex");
          ok = false;
          continue;
        }
        Color c = g.pre_edges.at(pr->pre).color;
        if (pr->other == c || !g.has_color(pr->other)) {
          fail(who, "chord endpoint names a missing port");
          ok = false;
          continue;
        }
        if (ColorPair(c, pr->other) != ch.pair) {
          fail(who, "chord pair inconsistent");
          ok = false;
        }
        if (!covered.insert({pr->pre, pr->other}).second) {
          fail(who, "port covered by more than one chord");
          ok = false;
        }
      }
      if (ch.a.pre == ch.b.pre && ch.a.other == ch.b.other) {
        fail(who, "chord endpoints coincide");
        ok = false;
      }
      if (ok) uf.unite(local.at(ch.a.pre), local.at(ch.b.pre));
      chords_ok = chords_ok && ok;
    }
    for (const auto& [p, idx] : local) {
      Color c = g.pre_edges.at(p).color;
      for (Color k : g.palette) {
        if (k != c && !covered.count({p, k}))
          fail(who, "port " + std::to_string(p.value) + "." + std::to_string(k) + " has no chord");
      }
    }
    if (chords_ok && uf.components() > 1) fail(who, "chord diagram is disconnected");
  }
  return rep;
}

void require_valid(const StrandedGraph& g) {
  auto rep = validate(g);
  if (!rep.ok()) throw InvalidGraph(std::move(rep));
}

CountsRecord stats_unchecked(const StrandedGraph& g) {
  CountsRecord c;
  std::map<VertexId, int> index;
  for (const auto& [vid, v] : g.vertices) index.emplace(vid, static_cast<int>(index.size()));
  UnionFind uf(index.size());
  for (const auto& [eid, e] : g.edges) uf.unite(index.at(e.ends[0].vertex), index.at(e.ends[1].vertex));
  c.discs = g.discs;
  c.V = static_cast<int>(g.vertices.size()) + g.discs;
  c.E = static_cast<int>(g.edges.size());
  c.f = static_cast<int>(g.half_edges.size());
  c.k = uf.components() + g.discs;
  c.r = c.V - c.k;
  c.nullity = c.E - c.r;
  return c;
}

CountsRecord stats(const StrandedGraph& g) {
  require_valid(g);
  return stats_unchecked(g);
}

StrandedGraph normalize(const StrandedGraph& g) {
  StrandedGraph out = g;
  out.discs = 0;
  return out;
}

StrandedGraph with_discs(const StrandedGraph& g, int m) {
  if (m < 0) throw std::invalid_argument("disc count must be non-negative");
  StrandedGraph out = g;
  out.discs += m;
  return out;
}

StrandedGraph disjoint_union(const StrandedGraph& a, const StrandedGraph& b) {
  if (a.rank != b.rank || a.palette != b.palette)
    throw std::invalid_argument("disjoint union needs equal rank and palette");
  StrandedGraph out = a;
  const int dv = a.next_vertex_id().value;
  const int dp = a.next_pre_edge_id().value;
  const int de = a.next_edge_id().value;
  const int dh = a.next_half_edge_id().value;
  auto sv = [&](VertexId v) { return VertexId(v.value + dv); };
  auto sp = [&](PreEdgeId p) { return PreEdgeId(p.value + dp); };
  for (const auto& [vid, v] : b.vertices) {
    Vertex nv;
    nv.id = sv(vid);
    for (PreEdgeId p : v.pre_edges) nv.pre_edges.push_back(sp(p));
    for (Chord ch : v.chords) {
      ch.a = {sv(ch.a.vertex), sp(ch.a.pre), ch.a.other};
      ch.b = {sv(ch.b.vertex), sp(ch.b.pre), ch.b.other};
      nv.chords.push_back(ch);
    }
    out.vertices.emplace(nv.id, std::move(nv));
  }
  for (const auto& [pid, pe] : b.pre_edges) {
    PreEdge np = pe;
    np.id = sp(pid);
    np.vertex = sv(pe.vertex);
    if (auto* ee = std::get_if<EdgeEnd>(&np.attachment)) {
      ee->edge = EdgeId(ee->edge.value + de);
    } else {
      np.attachment = HalfEdgeId(std::get<HalfEdgeId>(np.attachment).value + dh);
    }
    out.pre_edges.emplace(np.id, std::move(np));
  }
  for (const auto& [eid, e] : b.edges) {
    Edge ne = e;
    ne.id = EdgeId(eid.value + de);
    for (auto& end : ne.ends) end = {sv(end.vertex), sp(end.pre)};
    out.edges.emplace(ne.id, ne);
  }
  for (const auto& [hid, h] : b.half_edges) {
    HalfEdge nh = h;
    nh.id = HalfEdgeId(hid.value + dh);
    nh.at = {sv(h.at.vertex), sp(h.at.pre)};
    out.half_edges.emplace(nh.id, nh);
  }
  out.discs += b.discs;
  return out;
}

}  // namespace wsg
