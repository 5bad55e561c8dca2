#include "wsg/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <tuple>

#include "wsg/union_find.hpp"

namespace wsg {

namespace {

std::uint64_t all_edges(const Frame& f) {
  return f.num_edges() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.num_edges()) - 1;
}

PortRef port_ref(const Frame& f, int p) {
  int u = f.port_node(p);
  return PortRef{f.vertex_ids[f.node_vertex[u]], f.node_ids[u], f.palette[f.port_other(p)]};
}

std::uint32_t color_mask(const StrandedGraph& g, const std::vector<Color>& S) {
  std::uint32_t m = 0;
  for (Color c : S) {
    int i = g.color_index(c);
    if (i < 0) throw std::invalid_argument("color " + std::to_string(c) + " is not in the palette");
    if (m & (1u << i)) throw std::invalid_argument("repeated color in color set");
    m |= 1u << i;
  }
  return m;
}

struct Restriction {
  std::vector<int> comp;         // node -> component id, -1 when color not in S
  std::vector<int> sub;          // node -> chord-only component id
  int components = 0;
};

Restriction restrict_to(const Frame& f, std::uint32_t S) {
  const int n = f.rank;
  UnionFind all(f.num_nodes()), chords_only(f.num_nodes());
  for (int u = 0; u < f.num_nodes(); ++u) {
    if (!((S >> f.node_color[u]) & 1u)) continue;
    for (int s = 0; s < n; ++s) {
      int p = u * n + s;
      if ((S >> f.port_other(p)) & 1u) {
        all.unite(u, f.port_node(f.chord[p]));
        chords_only.unite(u, f.port_node(f.chord[p]));
      }
    }
  }
  for (int e = 0; e < f.num_edges(); ++e)
    if ((S >> f.edge_color[e]) & 1u) all.unite(f.edge_nodes[e][0], f.edge_nodes[e][1]);
  Restriction r;
  r.comp.assign(f.num_nodes(), -1);
  r.sub.assign(f.num_nodes(), -1);
  std::map<int, int> ids, sub_ids;
  for (int u = 0; u < f.num_nodes(); ++u) {
    if (!((S >> f.node_color[u]) & 1u)) continue;
    auto [it, ins] = ids.emplace(all.find(u), static_cast<int>(ids.size()));
    r.comp[u] = it->second;
    auto [it2, ins2] = sub_ids.emplace(chords_only.find(u), static_cast<int>(sub_ids.size()));
    r.sub[u] = it2->second;
  }
  r.components = static_cast<int>(ids.size());
  return r;
}

}  // namespace

std::vector<Face> faces(const StrandedGraph& g) {
  Frame f = build_frame(g);
  CensusKernel kernel(f);
  std::vector<Face> out;
  for (const FrameFace& ff : kernel.faces(all_edges(f))) {
    Face face;
    face.closed = ff.closed;
    int lo = std::countr_zero(ff.pair_mask);
    int hi = 31 - std::countl_zero(ff.pair_mask);
    face.pair = ColorPair(f.palette[lo], f.palette[hi]);
    for (int p : ff.ports) face.trace.push_back(port_ref(f, p));
    out.push_back(std::move(face));
  }
  for (int i = 0; i < g.discs; ++i) {
    Face d;
    d.disc = true;
    out.push_back(d);
  }
  return out;
}

std::vector<Bubble> bubbles(const StrandedGraph& g, const std::vector<Color>& S) {
  if (S.size() < 3) throw std::invalid_argument("bubbles need at least 3 colors");
  std::uint32_t mask = color_mask(g, S);
  Frame f = build_frame(g);
  Restriction r = restrict_to(f, mask);
  std::vector<Bubble> out(r.components);
  std::vector<std::set<int>> subs(r.components);
  std::vector<Color> colors = S;
  std::sort(colors.begin(), colors.end());
  for (auto& b : out) b.colors = colors;
  for (int u = 0; u < f.num_nodes(); ++u) {
    int c = r.comp[u];
    if (c < 0) continue;
    Bubble& b = out[c];
    b.pre_edges.push_back(f.node_ids[u]);
    subs[c].insert(r.sub[u]);
    if (f.node_half[u] >= 0) {
      b.half_edges.push_back(f.half_ids[f.node_half[u]]);
      b.open = true;
    } else if (f.edge_nodes[f.node_edge[u]][0] == u) {
      b.edges.push_back(f.edge_ids[f.node_edge[u]]);
    }
  }
  for (int c = 0; c < r.components; ++c) {
    out[c].sub_vertices = static_cast<int>(subs[c].size());
    std::sort(out[c].edges.begin(), out[c].edges.end());
    std::sort(out[c].half_edges.begin(), out[c].half_edges.end());
  }
  return out;
}

StrandedGraph extract_bubble(const StrandedGraph& g, const std::vector<Color>& S, int index) {
  auto list = bubbles(g, S);
  if (index < 0 || index >= static_cast<int>(list.size()))
    throw std::out_of_range("bubble index " + std::to_string(index) + " out of range");
  const Bubble& b = list[index];
  Frame f = build_frame(g);
  Restriction r = restrict_to(f, color_mask(g, S));

  StrandedGraph out;
  out.rank = static_cast<int>(S.size()) - 1;
  out.palette = b.colors;
  std::set<PreEdgeId> members(b.pre_edges.begin(), b.pre_edges.end());
  std::map<int, VertexId> sub_vertex;
  for (PreEdgeId p : b.pre_edges) {
    int u = f.node_index(p);
    auto [it, ins] = sub_vertex.emplace(r.sub[u], VertexId(static_cast<int>(sub_vertex.size())));
    VertexId vid = it->second;
    auto& v = out.vertices[vid];
    v.id = vid;
    v.pre_edges.push_back(p);
    PreEdge pe = g.pre_edge(p);
    pe.vertex = vid;
    out.pre_edges.emplace(p, pe);
  }
  for (const auto& [vid, v] : g.vertices) {
    for (const Chord& ch : v.chords) {
      if (!members.count(ch.a.pre)) continue;
      if (!std::binary_search(out.palette.begin(), out.palette.end(), ch.pair.lo) ||
          !std::binary_search(out.palette.begin(), out.palette.end(), ch.pair.hi))
        continue;
      Chord nc = ch;
      VertexId nv = out.pre_edges.at(ch.a.pre).vertex;
      nc.a.vertex = nv;
      nc.b.vertex = nv;
      out.vertices.at(nv).chords.push_back(nc);
    }
  }
  for (auto& [vid, v] : out.vertices) {
    std::sort(v.pre_edges.begin(), v.pre_edges.end());
    std::sort(v.chords.begin(), v.chords.end());
  }
  for (EdgeId e : b.edges) {
    Edge ed = g.edge(e);
    for (auto& end : ed.ends) end.vertex = out.pre_edges.at(end.pre).vertex;
    out.edges.emplace(e, ed);
  }
  for (HalfEdgeId h : b.half_edges) {
    HalfEdge he = g.half_edge(h);
    he.at.vertex = out.pre_edges.at(he.at.pre).vertex;
    out.half_edges.emplace(h, he);
  }
  return out;
}

StateCounts state_counts(const StrandedGraph& g) {
  Frame f = build_frame(g);
  CensusKernel kernel(f);
  return kernel.run(all_edges(f));
}

BoundaryGraph boundary(const StrandedGraph& g) {
  Frame f = build_frame(g);
  CensusKernel kernel(f);
  const StateCounts& c = kernel.run(all_edges(f));
  BoundaryGraph bg;
  for (const auto& [hid, h] : g.half_edges) bg.vertices.push_back({hid, h.color});
  for (const FrameFace& ff : kernel.faces(all_edges(f))) {
    if (ff.closed) continue;
    int a = f.port_node(ff.ports.front()), b = f.port_node(ff.ports.back());
    HalfEdgeId ha = f.half_ids[f.node_half[a]], hb = f.half_ids[f.node_half[b]];
    if (hb < ha) std::swap(ha, hb);
    int lo = std::countr_zero(ff.pair_mask);
    int hi = 31 - std::countl_zero(ff.pair_mask);
    bg.edges.push_back({ha, hb, ColorPair(f.palette[lo], f.palette[hi])});
  }
  std::sort(bg.edges.begin(), bg.edges.end(), [](const BoundaryEdge& x, const BoundaryEdge& y) {
    return std::tie(x.a, x.b, x.pair) < std::tie(y.a, y.b, y.pair);
  });
  bg.stats.V = c.V_bd();
  bg.stats.C = c.C_bd;
  bg.stats.E = c.E_bd();
  bg.stats.F = c.F_bd();
  bg.stats.B = c.boundary_bubbles;
  return bg;
}

CensusRecord census(const StrandedGraph& g) {
  StateCounts c = state_counts(g);
  CensusRecord r;
  r.rank = g.rank;
  r.V = c.V;
  r.E = c.E;
  r.f = c.f;
  r.k = c.k;
  r.F_int = c.F_int;
  r.F_ext = c.F_ext;
  r.B_int = c.B_int;
  r.B_ext = c.B_ext;
  r.boundary = {c.V_bd(), c.C_bd, c.E_bd(), c.F_bd(), c.boundary_bubbles};
  r.B2 = c.F_int + c.F_ext;
  r.B2_matches_int_plus_C = r.B2 == c.F_int + c.C_bd;
  if (g.rank >= 2) {
    const auto& pal = g.palette;
    for (std::size_t i = 0; i < pal.size(); ++i)
      for (std::size_t j = i + 1; j < pal.size(); ++j)
        for (std::size_t k = j + 1; k < pal.size(); ++k) {
          std::vector<Color> S{pal[i], pal[j], pal[k]};
          int count = static_cast<int>(bubbles(g, S).size());
          for (int b = 0; b < count; ++b) {
            StateCounts bc = state_counts(extract_bubble(g, S, b));
            BubbleEuler be;
            be.colors = S;
            be.V = bc.V;
            be.E = bc.E;
            be.F_int = bc.F_int;
            be.C_bd = bc.C_bd;
            be.genus = 2 - (be.V - be.E + be.F_int + be.C_bd);
            r.sum_three_bubble_C_bd += be.C_bd;
            r.three_bubbles.push_back(be);
          }
        }
  }
  return r;
}

AffineExpr gamma_from_counts(int n, const StateCounts& c) {
  if (n < 2) throw std::invalid_argument("gamma needs rank >= 2");
  if (n == 2) return AffineExpr(Rational(c.V - c.E + c.F_int));
  AffineExpr g(Rational(n * (n - 1) / 2 * (c.V - c.E) + (n - 1) * c.F_int - 2 * c.B(3)));
  for (int j = 3; j <= n; ++j) {
    std::int64_t coef = -static_cast<std::int64_t>(n - j + 1) * c.B(j);
    if (j + 1 <= n) coef += static_cast<std::int64_t>(j) * c.B(j + 1);
    g.set_coeff(j, Rational(coef));
  }
  return g;
}

namespace {

std::int64_t factorial(int m) {
  std::int64_t r = 1;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

}  // namespace

AffineExpr gamma_consecutive_from_counts(int n, const StateCounts& c) {
  if (n < 4) throw std::invalid_argument("consecutive gamma needs rank >= 4");
  AffineExpr g(Rational(factorial(n) / 2 * (c.V - c.E) + factorial(n - 1) * c.F_int -
                        2 * factorial(n - 2) * c.B(3)));
  std::vector<Rational> coef(n + 1, Rational(0));
  coef[3] -= Rational(factorial(n - 2) * c.B(3));
  for (int k = 4; k <= n; ++k) {
    std::int64_t w = factorial(n - k + 1) * c.B(k);
    coef[k - 1] += Rational((k - 1) * w);
    coef[k] -= Rational(w);
  }
  for (int j = 3; j <= n; ++j) g.set_coeff(j, coef[j]);
  return g;
}

AffineExpr gamma(const StrandedGraph& g) {
  if (g.rank < 2) throw std::invalid_argument("gamma needs rank >= 2");
  require_valid(g);
  return gamma_from_counts(g.rank, state_counts(g));
}

AffineExpr gamma_consecutive(const StrandedGraph& g) {
  if (g.rank < 4) throw std::invalid_argument("consecutive gamma needs rank >= 4");
  require_valid(g);
  return gamma_consecutive_from_counts(g.rank, state_counts(g));
}

Rational gamma_bubble_coefficient(int n, int k, const std::vector<Rational>& a) {
  auto alpha = [&](int j) { return a.at(j - 3); };
  if (k == 3) return -(Rational(2) + Rational(n - 2) * alpha(3));
  return Rational(k - 1) * alpha(k - 1) - Rational(n - k + 1) * alpha(k);
}

std::vector<Rational> alternating_alphas(int n) {
  if (n < 4) throw std::invalid_argument("alternating alphas need rank >= 4");
  std::vector<Rational> a(n - 2, Rational(0));
  a[n - 3] = 1;
  for (int k = n; k >= 4; --k) {
    Rational ak = a[k - 3];
    if (k % 2 == 0) {
      a[k - 4] = (Rational(n - k + 1) * ak + 1) / Rational(k - 1);
    } else {
      a[k - 4] = Rational(n - k + 1) * ak / Rational(2 * (k - 1));
    }
  }
  for (int k = 4; k <= n; ++k) {
    Rational c = gamma_bubble_coefficient(n, k, a);
    bool ok = k % 2 == 0 ? c > 0 : c < 0;
    if (!ok || a[k - 4] <= 0) throw std::logic_error("alternating alpha back-substitution failed");
  }
  return a;
}

}  // namespace wsg
