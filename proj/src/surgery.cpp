#include "wsg/surgery.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "wsg/union_find.hpp"

namespace wsg {

int enumeration_budget() {
  if (const char* env = std::getenv("WSG_BUDGET")) {
    try {
      int v = std::stoi(env);
      if (v >= 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 20;
}

StrandedGraph cut(const StrandedGraph& g, EdgeId e) {
  const Edge ed = g.edge(e);
  StrandedGraph out = g;
  out.edges.erase(e);
  HalfEdgeId h = g.next_half_edge_id();
  for (int s = 0; s < 2; ++s) {
    HalfEdgeId hid(h.value + s);
    out.half_edges.emplace(hid, HalfEdge{hid, ed.color, ed.ends[s]});
    out.pre_edges.at(ed.ends[s].pre).attachment = hid;
  }
  return out;
}

StrandedGraph cut_complement(const StrandedGraph& g, const std::vector<EdgeId>& keep) {
  std::set<EdgeId> k(keep.begin(), keep.end());
  StrandedGraph out = g;
  for (const auto& [eid, e] : g.edges)
    if (!k.count(eid)) out = cut(out, eid);
  return out;
}

namespace {

void orient(Chord& ch) {
  if (ch.b < ch.a) std::swap(ch.a, ch.b);
}

struct PortKey {
  PreEdgeId pre;
  Color other;
  auto operator<=>(const PortKey&) const = default;
};

}  // namespace

ContractionResult contract_detailed(const StrandedGraph& g, EdgeId e) {
  const Edge ed = g.edge(e);
  const Color c = ed.color;
  const PreEdgeId pe0 = ed.ends[0].pre, pe1 = ed.ends[1].pre;
  const VertexId v0 = ed.ends[0].vertex, v1 = ed.ends[1].vertex;

  std::vector<const Vertex*> touched{&g.vertex(v0)};
  if (v1 != v0) touched.push_back(&g.vertex(v1));

  std::map<PortKey, PortRef> partner;
  std::vector<Chord> chords;
  std::vector<PreEdgeId> pres;
  for (const Vertex* v : touched) {
    for (const Chord& ch : v->chords) {
      partner[{ch.a.pre, ch.a.other}] = ch.b;
      partner[{ch.b.pre, ch.b.other}] = ch.a;
      if (ch.a.pre != pe0 && ch.a.pre != pe1 && ch.b.pre != pe0 && ch.b.pre != pe1) chords.push_back(ch);
    }
    for (PreEdgeId p : v->pre_edges)
      if (p != pe0 && p != pe1) pres.push_back(p);
  }

  ContractionResult res;
  for (Color k : g.palette) {
    if (k == c) continue;
    PortRef a = partner.at({pe0, k});
    if (a.pre == pe1) {
      ++res.inner_faces;
      continue;
    }
    PortRef b = partner.at({pe1, k});
    Chord ch{a, b, ColorPair(c, k)};
    chords.push_back(ch);
  }

  StrandedGraph out = g;
  out.edges.erase(e);
  out.pre_edges.erase(pe0);
  out.pre_edges.erase(pe1);
  out.vertices.erase(v0);
  out.vertices.erase(v1);
  out.discs += res.inner_faces;

  std::sort(pres.begin(), pres.end());
  std::map<PreEdgeId, int> local;
  for (PreEdgeId p : pres) local.emplace(p, static_cast<int>(local.size()));
  UnionFind uf(pres.size());
  for (const Chord& ch : chords) uf.unite(local.at(ch.a.pre), local.at(ch.b.pre));

  // Sectors ordered by smallest pre-edge id.
  std::map<int, int> root_to_sector;
  std::vector<std::vector<PreEdgeId>> sectors;
  for (PreEdgeId p : pres) {
    int r = uf.find(local.at(p));
    auto [it, inserted] = root_to_sector.emplace(r, static_cast<int>(sectors.size()));
    if (inserted) sectors.emplace_back();
    sectors[it->second].push_back(p);
  }
  std::vector<VertexId> ids;
  int next = g.next_vertex_id().value;
  for (std::size_t i = 0; i < sectors.size(); ++i) ids.push_back(i == 0 ? std::min(v0, v1) : VertexId(next++));

  std::map<PreEdgeId, VertexId> owner;
  for (std::size_t i = 0; i < sectors.size(); ++i)
    for (PreEdgeId p : sectors[i]) owner[p] = ids[i];

  for (std::size_t i = 0; i < sectors.size(); ++i) {
    Vertex v;
    v.id = ids[i];
    v.pre_edges = sectors[i];
    out.vertices.emplace(v.id, std::move(v));
  }
  for (Chord ch : chords) {
    VertexId vid = owner.at(ch.a.pre);
    ch.a.vertex = vid;
    ch.b.vertex = vid;
    orient(ch);
    out.vertices.at(vid).chords.push_back(ch);
  }
  for (VertexId vid : ids) {
    auto& v = out.vertices.at(vid);
    std::sort(v.chords.begin(), v.chords.end());
  }
  for (const auto& [p, vid] : owner) {
    PreEdge& pe = out.pre_edges.at(p);
    pe.vertex = vid;
    if (const auto* ee = std::get_if<EdgeEnd>(&pe.attachment)) {
      out.edges.at(ee->edge).ends[ee->end] = {vid, p};
    } else {
      out.half_edges.at(std::get<HalfEdgeId>(pe.attachment)).at = {vid, p};
    }
  }
  res.sectors = ids;
  res.graph = std::move(out);
  return res;
}

StrandedGraph contract(const StrandedGraph& g, EdgeId e) { return contract_detailed(g, e).graph; }

std::string EdgeClass::to_string() const {
  switch (kind) {
    case Kind::Bridge:
      return "Bridge";
    case Kind::Regular:
      return "Regular";
    case Kind::Loop:
      return "Loop{p_inner=" + std::to_string(p_inner) + ", trivial=" + (trivial ? "true" : "false") + "}";
  }
  return "?";
}

int inner_faces(const StrandedGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  if (!ed.is_loop()) return 0;
  const PreEdgeId pe0 = ed.ends[0].pre, pe1 = ed.ends[1].pre;
  int p = 0;
  for (const Chord& ch : g.vertex(ed.ends[0].vertex).chords) {
    if ((ch.a.pre == pe0 && ch.b.pre == pe1) || (ch.a.pre == pe1 && ch.b.pre == pe0)) ++p;
  }
  return p;
}

namespace {

std::map<VertexId, int> component_labels(const StrandedGraph& g) {
  std::map<VertexId, int> index;
  for (const auto& [vid, v] : g.vertices) index.emplace(vid, static_cast<int>(index.size()));
  UnionFind uf(index.size());
  for (const auto& [eid, ed] : g.edges) uf.unite(index.at(ed.ends[0].vertex), index.at(ed.ends[1].vertex));
  std::map<VertexId, int> label;
  for (const auto& [vid, i] : index) label[vid] = uf.find(i);
  return label;
}

}  // namespace

EdgeClass classify(const StrandedGraph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  EdgeClass cls;
  if (ed.is_loop()) {
    cls.kind = EdgeClass::Kind::Loop;
    cls.p_inner = inner_faces(g, e);
    const int n = g.rank;
    if (cls.p_inner >= n - 1) {
      cls.trivial = true;
    } else {
      auto res = contract_detailed(g, e);
      if (static_cast<int>(res.sectors.size()) == n - cls.p_inner) {
        auto label = component_labels(res.graph);
        std::set<int> seen;
        for (VertexId s : res.sectors) seen.insert(label.at(s));
        cls.trivial = seen.size() == res.sectors.size();
      }
    }
    return cls;
  }
  std::map<VertexId, int> index;
  for (const auto& [vid, v] : g.vertices) index.emplace(vid, static_cast<int>(index.size()));
  UnionFind uf(index.size());
  for (const auto& [eid, other] : g.edges)
    if (eid != e) uf.unite(index.at(other.ends[0].vertex), index.at(other.ends[1].vertex));
  bool split = uf.find(index.at(ed.ends[0].vertex)) != uf.find(index.at(ed.ends[1].vertex));
  cls.kind = split ? EdgeClass::Kind::Bridge : EdgeClass::Kind::Regular;
  return cls;
}

CountsRecord SpanningSubgraphState::counts_record() const {
  CountsRecord c;
  c.V = counts_.V;
  c.E = counts_.E;
  c.f = counts_.f;
  c.k = counts_.k;
  c.r = counts_.r();
  c.nullity = counts_.nullity();
  c.discs = g_->discs;
  return c;
}

StrandedGraph SpanningSubgraphState::materialize() const { return cut_complement(*g_, subset_); }

void for_each_state_counts(const Frame& frame,
                           const std::function<void(std::uint64_t, const StateCounts&)>& visit,
                           std::optional<int> budget) {
  const int E = frame.num_edges();
  const int cap = budget.value_or(enumeration_budget());
  if (E > cap)
    throw BudgetExceeded("graph has " + std::to_string(E) + " edges; enumeration budget is " +
                         std::to_string(cap));
  if (E > 40) throw BudgetExceeded("enumeration over more than 40 edges is not supported");
  CensusKernel kernel(frame);
  const std::uint64_t total = std::uint64_t{1} << E;
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(mask, kernel.run(mask));
}

void for_each_spanning_subset(const StrandedGraph& g,
                              const std::function<void(const SpanningSubgraphState&)>& visit,
                              std::optional<int> budget) {
  Frame frame = build_frame(g);
  for_each_state_counts(
      frame,
      [&](std::uint64_t mask, const StateCounts& counts) {
        std::vector<EdgeId> subset;
        for (int i = 0; i < frame.num_edges(); ++i)
          if ((mask >> i) & 1u) subset.push_back(frame.edge_ids[i]);
        visit(SpanningSubgraphState(&g, mask, std::move(subset), counts));
      },
      budget);
}

std::vector<SpanningSubgraphState> spanning_subsets(const StrandedGraph& g, std::optional<int> budget) {
  std::vector<SpanningSubgraphState> out;
  for_each_spanning_subset(g, [&](const SpanningSubgraphState& s) { out.push_back(s); }, budget);
  return out;
}

StrandedGraph full_contract(const StrandedGraph& g, const std::vector<EdgeId>& order) {
  std::vector<EdgeId> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edge_ids()) throw std::invalid_argument("contraction order is not a permutation of the edges");
  StrandedGraph out = g;
  for (EdgeId e : order) out = contract(out, e);
  return out;
}

}  // namespace wsg
