// Reference polynomials computed directly from the graph records, without
// the frame, census or face code used by invariant().

#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wsg/verify.hpp"

namespace wsg {

namespace {

using Coeffs = std::map<std::pair<int, int>, std::int64_t>;  // (deg x, deg y) -> coeff

void axpy(Coeffs& out, const Coeffs& in, int dx, int dy, std::int64_t scale = 1) {
  for (const auto& [k, c] : in) out[{k.first + dx, k.second + dy}] += scale * c;
}

int root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x] = p[p[x]];
  return x;
}

bool connected(int nv, const std::vector<std::pair<int, int>>& edges, int a, int b) {
  std::vector<int> p(nv);
  std::iota(p.begin(), p.end(), 0);
  for (auto [u, v] : edges) p[root(p, u)] = root(p, v);
  return root(p, a) == root(p, b);
}

Coeffs tutte_rec(int nv, const std::vector<std::pair<int, int>>& edges) {
  Coeffs out;
  if (edges.empty()) {
    out[{0, 0}] = 1;
    return out;
  }
  auto [u, v] = edges.back();
  std::vector<std::pair<int, int>> rest(edges.begin(), edges.end() - 1);
  if (u == v) {
    axpy(out, tutte_rec(nv, rest), 0, 1);
    return out;
  }
  std::vector<std::pair<int, int>> merged = rest;
  for (auto& [a, b] : merged) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  if (!connected(nv, rest, u, v)) {
    axpy(out, tutte_rec(nv, merged), 1, 0);
    return out;
  }
  axpy(out, tutte_rec(nv, rest), 0, 0);
  axpy(out, tutte_rec(nv, merged), 0, 0);
  return out;
}

Polynomial br_oracle(const StrandedGraph& g) {
  std::vector<int> vids;
  std::map<int, int> vindex;
  for (const auto& [vid, v] : g.vertices) {
    vindex[vid.value] = static_cast<int>(vids.size());
    vids.push_back(vid.value);
  }
  std::vector<const Edge*> edges;
  for (const auto& [eid, e] : g.edges) edges.push_back(&e);
  if (edges.size() > 20) throw std::invalid_argument("BR oracle limited to 20 edges");

  using Dart = std::pair<int, int>;  // (pre-edge id, other color)
  std::map<Dart, Dart> chord;
  for (const auto& [vid, v] : g.vertices)
    for (const Chord& ch : v.chords) {
      Dart a{ch.a.pre.value, ch.a.other}, b{ch.b.pre.value, ch.b.other};
      chord[a] = b;
      chord[b] = a;
    }
  auto others = [&](Color c) {
    std::vector<Color> o;
    for (Color k : g.palette)
      if (k != c) o.push_back(k);
    return o;
  };

  const int nv = static_cast<int>(vids.size());
  auto rank_of = [&](std::uint32_t mask) {
    std::vector<int> p(nv);
    std::iota(p.begin(), p.end(), 0);
    int comps = nv;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!((mask >> i) & 1u)) continue;
      int a = root(p, vindex.at(edges[i]->ends[0].vertex.value));
      int b = root(p, vindex.at(edges[i]->ends[1].vertex.value));
      if (a != b) {
        p[a] = b;
        --comps;
      }
    }
    return std::pair<int, int>{nv - comps, comps};
  };

  const std::uint32_t all = (1u << edges.size()) - 1;
  const int rG = rank_of(all).first;
  Polynomial out(Schema::ribbon(), 2);
  for (std::uint32_t mask = 0; mask <= all; ++mask) {
    std::map<int, int> kept_edge_of_pre;  // pre id -> index into edges when kept
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1u)
        for (int s = 0; s < 2; ++s) kept_edge_of_pre[edges[i]->ends[s].pre.value] = static_cast<int>(i);
    // Second connection of a dart: along a kept strand, or across a leg.
    auto step = [&](const Dart& d, bool& leg) {
      auto it = kept_edge_of_pre.find(d.first);
      if (it != kept_edge_of_pre.end()) {
        const Edge* e = edges[it->second];
        int other_pre = e->ends[0].pre.value == d.first ? e->ends[1].pre.value : e->ends[0].pre.value;
        return Dart{other_pre, d.second};
      }
      leg = true;
      Color c = g.pre_edges.at(PreEdgeId(d.first)).color;
      for (Color k : others(c))
        if (k != d.second) return Dart{d.first, k};
      throw std::logic_error("rank-2 pre-edge without a second strand");
    };
    std::set<Dart> seen;
    int f_int = 0, bc = 0;
    for (const auto& [start, partner] : chord) {
      if (seen.count(start)) continue;
      bool leg = false;
      Dart d = start;
      do {
        seen.insert(d);
        Dart c = chord.at(d);
        seen.insert(c);
        d = step(c, leg);
      } while (d != start);
      (leg ? bc : f_int) += 1;
    }
    auto [r, k] = rank_of(mask);
    int nA = std::popcount(mask) - r;
    Monomial m;
    m.exps = {Rational(rG - r), Rational(nA)};
    m.z = AffineExpr(Rational(k + nA - (f_int + bc)));
    out.add(m, 1);
  }
  return out;
}

}  // namespace

Polynomial tutte_oracle(int num_vertices, const std::vector<std::pair<int, int>>& edges) {
  for (auto [u, v] : edges)
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw std::invalid_argument("edge endpoint out of range");
  Polynomial out(Schema::tutte(), 1);
  for (const auto& [k, c] : tutte_rec(num_vertices, edges)) {
    Monomial m;
    m.exps = {Rational(k.first), Rational(k.second)};
    out.add(m, c);
  }
  return out;
}

Polynomial oracle(const StrandedGraph& g, OracleKind kind) {
  if (kind == OracleKind::Tutte) {
    if (g.rank != 1) throw std::invalid_argument("Tutte oracle needs rank 1");
    std::map<int, int> vindex;
    for (const auto& [vid, v] : g.vertices) vindex.emplace(vid.value, static_cast<int>(vindex.size()));
    std::vector<std::pair<int, int>> es;
    for (const auto& [eid, e] : g.edges) es.emplace_back(vindex.at(e.ends[0].vertex.value), vindex.at(e.ends[1].vertex.value));
    return tutte_oracle(static_cast<int>(vindex.size()), es);
  }
  if (g.rank != 2) throw std::invalid_argument("BR oracle needs rank 2");
  return br_oracle(g);
}

}  // namespace wsg
