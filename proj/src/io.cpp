#include "wsg/io.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "wsg/surgery.hpp"

namespace wsg {

ParseError::ParseError(Kind kind, int line, std::string message)
    : std::runtime_error((kind == Kind::Syntax ? "syntax error" : "semantic error") +
                         (line > 0 ? " at line " + std::to_string(line) : std::string()) + ": " + message),
      kind_(kind),
      line_(line) {}

namespace {

[[noreturn]] void syntax(int line, const std::string& msg) { throw ParseError(ParseError::Kind::Syntax, line, msg); }
[[noreturn]] void semantic(int line, const std::string& msg) {
  throw ParseError(ParseError::Kind::Semantic, line, msg);
}

int to_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) syntax(line, "expected an integer, got '" + tok + "'");
    return v;
  } catch (const std::invalid_argument&) {
    syntax(line, "expected an integer, got '" + tok + "'");
  } catch (const std::out_of_range&) {
    syntax(line, "integer out of range: '" + tok + "'");
  }
}

std::pair<int, int> split_pair(const std::string& tok, char sep, int line) {
  auto pos = tok.find(sep);
  if (pos == std::string::npos) syntax(line, std::string("expected a '") + sep + "'-separated pair, got '" + tok + "'");
  return {to_int(tok.substr(0, pos), line), to_int(tok.substr(pos + 1), line)};
}

void expect(const std::vector<std::string>& t, std::size_t i, const char* word, int line) {
  if (i >= t.size() || t[i] != word)
    syntax(line, std::string("expected '") + word + "'" + (i < t.size() ? ", got '" + t[i] + "'" : ""));
}

struct PendingChord {
  int line;
  int vertex;
  int pa, ka, pb, kb;
};

void sort_vertex(Vertex& v) {
  std::sort(v.pre_edges.begin(), v.pre_edges.end());
  for (Chord& ch : v.chords)
    if (ch.b < ch.a) std::swap(ch.a, ch.b);
  std::sort(v.chords.begin(), v.chords.end());
}

}  // namespace

StrandedGraph parse_wsg(const std::string& text) {
  StrandedGraph g;
  bool have_rank = false, have_palette = false;
  std::optional<VertexId> current;
  std::vector<PendingChord> chords;
  std::map<EdgeId, int> edge_line;
  std::map<HalfEdgeId, int> half_line;
  std::map<PreEdgeId, int> pre_line;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::istringstream ls(raw);
    std::vector<std::string> t;
    for (std::string w; ls >> w;) t.push_back(w);
    if (t.empty()) continue;
    const std::string& kw = t[0];
    if (!have_rank && kw != "rank") syntax(line, "document must start with 'rank', got '" + kw + "'");
    if (kw == "rank") {
      if (have_rank) syntax(line, "duplicate 'rank'");
      if (t.size() != 2) syntax(line, "usage: rank N");
      int n = to_int(t[1], line);
      if (n < 1) semantic(line, "rank must be at least 1");
      g = StrandedGraph::empty(n);
      have_rank = true;
    } else if (kw == "palette") {
      if (have_palette || !g.vertices.empty()) syntax(line, "'palette' must follow 'rank' directly");
      if (static_cast<int>(t.size()) != g.rank + 2) semantic(line, "palette must list rank+1 colors");
      g.palette.clear();
      for (std::size_t i = 1; i < t.size(); ++i) g.palette.push_back(to_int(t[i], line));
      if (!std::is_sorted(g.palette.begin(), g.palette.end()) ||
          std::adjacent_find(g.palette.begin(), g.palette.end()) != g.palette.end())
        semantic(line, "palette must be sorted and distinct");
      have_palette = true;
    } else if (kw == "vertex") {
      if (t.size() != 2) syntax(line, "usage: vertex V");
      VertexId v(to_int(t[1], line));
      if (g.vertices.count(v)) semantic(line, "duplicate vertex " + t[1]);
      g.vertices[v].id = v;
      current = v;
    } else if (kw == "pre") {
      if (!current) syntax(line, "'pre' outside a vertex block");
      if (t.size() < 6) syntax(line, "usage: pre P color C (edge E end S | half H)");
      PreEdgeId p(to_int(t[1], line));
      expect(t, 2, "color", line);
      PreEdge pe;
      pe.id = p;
      pe.vertex = *current;
      pe.color = to_int(t[3], line);
      if (t[4] == "edge") {
        expect(t, 6, "end", line);
        if (t.size() != 8) syntax(line, "usage: pre P color C edge E end S");
        pe.attachment = EdgeEnd{EdgeId(to_int(t[5], line)), to_int(t[7], line)};
      } else if (t[4] == "half") {
        if (t.size() != 6) syntax(line, "usage: pre P color C half H");
        pe.attachment = HalfEdgeId(to_int(t[5], line));
      } else {
        syntax(line, "expected 'edge' or 'half', got '" + t[4] + "'");
      }
      if (g.pre_edges.count(p)) semantic(line, "duplicate pre-edge " + t[1]);
      if (!g.has_color(pe.color)) semantic(line, "color " + t[3] + " outside the palette");
      g.pre_edges.emplace(p, pe);
      g.vertices[*current].pre_edges.push_back(p);
      pre_line[p] = line;
    } else if (kw == "chord") {
      if (t.size() != 4) syntax(line, "usage: chord V P.K P.K");
      auto [pa, ka] = split_pair(t[2], '.', line);
      auto [pb, kb] = split_pair(t[3], '.', line);
      chords.push_back({line, to_int(t[1], line), pa, ka, pb, kb});
      current.reset();
    } else if (kw == "edge") {
      current.reset();
      if (t.size() != 6) syntax(line, "usage: edge E color C V:P V:P");
      expect(t, 2, "color", line);
      Edge e;
      e.id = EdgeId(to_int(t[1], line));
      e.color = to_int(t[3], line);
      for (int s = 0; s < 2; ++s) {
        auto [v, p] = split_pair(t[4 + s], ':', line);
        e.ends[s] = {VertexId(v), PreEdgeId(p)};
      }
      if (g.edges.count(e.id)) semantic(line, "duplicate edge " + t[1]);
      g.edges.emplace(e.id, e);
      edge_line[e.id] = line;
    } else if (kw == "half") {
      current.reset();
      if (t.size() != 5) syntax(line, "usage: half H color C V:P");
      expect(t, 2, "color", line);
      HalfEdge h;
      h.id = HalfEdgeId(to_int(t[1], line));
      h.color = to_int(t[3], line);
      auto [v, p] = split_pair(t[4], ':', line);
      h.at = {VertexId(v), PreEdgeId(p)};
      if (g.half_edges.count(h.id)) semantic(line, "duplicate half-edge " + t[1]);
      g.half_edges.emplace(h.id, h);
      half_line[h.id] = line;
    } else if (kw == "discs") {
      current.reset();
      if (t.size() != 2) syntax(line, "usage: discs N");
      int d = to_int(t[1], line);
      if (d < 0) semantic(line, "disc count must be non-negative");
      g.discs += d;
    } else {
      syntax(line, "unknown record '" + kw + "'");
    }
  }
  if (!have_rank) syntax(line, "missing 'rank' header");

  for (const PendingChord& pc : chords) {
    VertexId v(pc.vertex);
    auto vit = g.vertices.find(v);
    if (vit == g.vertices.end()) semantic(pc.line, "chord on unknown vertex " + std::to_string(pc.vertex));
    PortRef a{v, PreEdgeId(pc.pa), pc.ka}, b{v, PreEdgeId(pc.pb), pc.kb};
    for (const PortRef* r : {&a, &b}) {
      auto pit = g.pre_edges.find(r->pre);
      if (pit == g.pre_edges.end()) semantic(pc.line, "chord references absent pre-edge " + std::to_string(r->pre.value));
      if (pit->second.vertex != v)
        semantic(pc.line, "chord endpoint " + std::to_string(r->pre.value) + " is not on vertex " +
                              std::to_string(pc.vertex));
    }
    ColorPair pa(g.pre_edges.at(a.pre).color, a.other), pb(g.pre_edges.at(b.pre).color, b.other);
    if (pa != pb) semantic(pc.line, "chord pair inconsistent");
    vit->second.chords.push_back({a, b, pa});
  }
  for (auto& [vid, v] : g.vertices) sort_vertex(v);

  auto rep = validate(g);
  if (!rep.ok()) {
    // Point at the first offending record when one can be identified.
    const auto& first = rep.violations.front();
    int at = 0;
    auto id_of = [](const std::string& entity) {
      auto pos = entity.rfind(' ');
      return std::stoi(entity.substr(pos + 1));
    };
    try {
      if (first.entity.rfind("edge ", 0) == 0) at = edge_line[EdgeId(id_of(first.entity))];
      if (first.entity.rfind("half-edge ", 0) == 0) at = half_line[HalfEdgeId(id_of(first.entity))];
      if (first.entity.rfind("pre-edge ", 0) == 0) at = pre_line[PreEdgeId(id_of(first.entity))];
    } catch (const std::exception&) {
    }
    semantic(at, rep.to_string());
  }
  return g;
}

std::string emit_wsg(const StrandedGraph& g) {
  std::ostringstream os;
  os << "rank " << g.rank << '\n';
  StrandedGraph def = StrandedGraph::empty(g.rank);
  if (g.palette != def.palette) {
    os << "palette";
    for (Color c : g.palette) os << ' ' << c;
    os << '\n';
  }
  for (const auto& [vid, v] : g.vertices) {
    os << "vertex " << vid.value << '\n';
    std::vector<const PreEdge*> pres;
    for (PreEdgeId p : v.pre_edges) pres.push_back(&g.pre_edge(p));
    std::sort(pres.begin(), pres.end(), [](const PreEdge* a, const PreEdge* b) {
      return std::tie(a->color, a->id) < std::tie(b->color, b->id);
    });
    for (const PreEdge* pe : pres) {
      os << "  pre " << pe->id.value << " color " << pe->color;
      if (const auto* ee = std::get_if<EdgeEnd>(&pe->attachment)) {
        os << " edge " << ee->edge.value << " end " << ee->end << '\n';
      } else {
        os << " half " << std::get<HalfEdgeId>(pe->attachment).value << '\n';
      }
    }
    std::vector<Chord> chords = v.chords;
    for (Chord& ch : chords)
      if (ch.b < ch.a) std::swap(ch.a, ch.b);
    std::sort(chords.begin(), chords.end(), [](const Chord& a, const Chord& b) {
      return std::tie(a.pair, a.a, a.b) < std::tie(b.pair, b.a, b.b);
    });
    for (const Chord& ch : chords)
      os << "chord " << vid.value << ' ' << ch.a.pre.value << '.' << ch.a.other << ' ' << ch.b.pre.value << '.'
         << ch.b.other << '\n';
  }
  std::vector<const Edge*> edges;
  for (const auto& [id, e] : g.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(),
            [](const Edge* a, const Edge* b) { return std::tie(a->color, a->id) < std::tie(b->color, b->id); });
  for (const Edge* e : edges)
    os << "edge " << e->id.value << " color " << e->color << ' ' << e->ends[0].vertex.value << ':'
       << e->ends[0].pre.value << ' ' << e->ends[1].vertex.value << ':' << e->ends[1].pre.value << '\n';
  std::vector<const HalfEdge*> halves;
  for (const auto& [id, h] : g.half_edges) halves.push_back(&h);
  std::sort(halves.begin(), halves.end(), [](const HalfEdge* a, const HalfEdge* b) {
    return std::tie(a->color, a->id) < std::tie(b->color, b->id);
  });
  for (const HalfEdge* h : halves)
    os << "half " << h->id.value << " color " << h->color << ' ' << h->at.vertex.value << ':' << h->at.pre.value
       << '\n';
  if (g.discs > 0) os << "discs " << g.discs << '\n';
  return os.str();
}

nlohmann::json to_json(const StrandedGraph& g) {
  using nlohmann::json;
  json j;
  j["rank"] = g.rank;
  j["palette"] = g.palette;
  json vs = json::array();
  for (const auto& [vid, v] : g.vertices) {
    json jv;
    jv["id"] = vid.value;
    json ps = json::array();
    for (PreEdgeId p : v.pre_edges) {
      const PreEdge& pe = g.pre_edge(p);
      json jp{{"id", p.value}, {"color", pe.color}};
      if (const auto* ee = std::get_if<EdgeEnd>(&pe.attachment)) {
        jp["edge"] = ee->edge.value;
        jp["end"] = ee->end;
      } else {
        jp["half"] = std::get<HalfEdgeId>(pe.attachment).value;
      }
      ps.push_back(jp);
    }
    jv["pre_edges"] = ps;
    json cs = json::array();
    for (const Chord& ch : v.chords)
      cs.push_back({{"a", {ch.a.pre.value, ch.a.other}},
                    {"b", {ch.b.pre.value, ch.b.other}},
                    {"pair", {ch.pair.lo, ch.pair.hi}}});
    jv["chords"] = cs;
    vs.push_back(jv);
  }
  j["vertices"] = vs;
  json es = json::array();
  for (const auto& [eid, e] : g.edges)
    es.push_back({{"id", eid.value},
                  {"color", e.color},
                  {"ends", {{e.ends[0].vertex.value, e.ends[0].pre.value}, {e.ends[1].vertex.value, e.ends[1].pre.value}}}});
  j["edges"] = es;
  json hs = json::array();
  for (const auto& [hid, h] : g.half_edges)
    hs.push_back({{"id", hid.value}, {"color", h.color}, {"at", {h.at.vertex.value, h.at.pre.value}}});
  j["half_edges"] = hs;
  j["discs"] = g.discs;
  return j;
}

StrandedGraph from_json(const nlohmann::json& j) {
  try {
    StrandedGraph g = StrandedGraph::empty(j.at("rank").get<int>());
    if (j.contains("palette")) g.palette = j.at("palette").get<std::vector<Color>>();
    for (const auto& jv : j.at("vertices")) {
      Vertex v;
      v.id = VertexId(jv.at("id").get<int>());
      for (const auto& jp : jv.at("pre_edges")) {
        PreEdge pe;
        pe.id = PreEdgeId(jp.at("id").get<int>());
        pe.vertex = v.id;
        pe.color = jp.at("color").get<int>();
        if (jp.contains("edge")) {
          pe.attachment = EdgeEnd{EdgeId(jp.at("edge").get<int>()), jp.at("end").get<int>()};
        } else {
          pe.attachment = HalfEdgeId(jp.at("half").get<int>());
        }
        v.pre_edges.push_back(pe.id);
        g.pre_edges.emplace(pe.id, pe);
      }
      for (const auto& jc : jv.at("chords")) {
        auto a = jc.at("a"), b = jc.at("b");
        Chord ch{{v.id, PreEdgeId(a.at(0).get<int>()), a.at(1).get<int>()},
                 {v.id, PreEdgeId(b.at(0).get<int>()), b.at(1).get<int>()},
                 ColorPair(jc.at("pair").at(0).get<int>(), jc.at("pair").at(1).get<int>())};
        v.chords.push_back(ch);
      }
      sort_vertex(v);
      g.vertices.emplace(v.id, std::move(v));
    }
    for (const auto& je : j.at("edges")) {
      Edge e;
      e.id = EdgeId(je.at("id").get<int>());
      e.color = je.at("color").get<int>();
      for (int s = 0; s < 2; ++s)
        e.ends[s] = {VertexId(je.at("ends").at(s).at(0).get<int>()), PreEdgeId(je.at("ends").at(s).at(1).get<int>())};
      g.edges.emplace(e.id, e);
    }
    for (const auto& jh : j.at("half_edges")) {
      HalfEdge h;
      h.id = HalfEdgeId(jh.at("id").get<int>());
      h.color = jh.at("color").get<int>();
      h.at = {VertexId(jh.at("at").at(0).get<int>()), PreEdgeId(jh.at("at").at(1).get<int>())};
      g.half_edges.emplace(h.id, h);
    }
    g.discs = j.value("discs", 0);
    auto rep = validate(g);
    if (!rep.ok()) semantic(0, rep.to_string());
    return g;
  } catch (const nlohmann::json::exception& e) {
    syntax(0, e.what());
  }
}

StrandedGraph parse_any(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      syntax(0, e.what());
    }
    return from_json(j);
  }
  return parse_wsg(text);
}

namespace {

// Vertex whose pre-edges (one per color, ids base+c) carry a complete chord diagram.
void add_complete_vertex(StrandedGraph& g, VertexId v, int base) {
  Vertex vx;
  vx.id = v;
  const int colors = g.rank + 1;
  for (int c = 0; c < colors; ++c) vx.pre_edges.push_back(PreEdgeId(base + c));
  for (int i = 0; i < colors; ++i)
    for (int j = i + 1; j < colors; ++j)
      vx.chords.push_back({{v, PreEdgeId(base + i), j}, {v, PreEdgeId(base + j), i}, ColorPair(i, j)});
  std::sort(vx.chords.begin(), vx.chords.end());
  g.vertices.emplace(v, std::move(vx));
}

void attach(StrandedGraph& g, EdgeId e, Color c, VertexId v0, PreEdgeId p0, VertexId v1, PreEdgeId p1) {
  g.edges.emplace(e, Edge{e, c, {EndRef{v0, p0}, EndRef{v1, p1}}});
  g.pre_edges.emplace(p0, PreEdge{p0, v0, c, EdgeEnd{e, 0}});
  g.pre_edges.emplace(p1, PreEdge{p1, v1, c, EdgeEnd{e, 1}});
}

}  // namespace

StrandedGraph gen_dipole(int n) {
  if (n < 1) throw std::invalid_argument("dipole needs rank >= 1");
  StrandedGraph g = StrandedGraph::empty(n);
  const int colors = n + 1;
  add_complete_vertex(g, VertexId(0), 0);
  add_complete_vertex(g, VertexId(1), colors);
  for (int c = 0; c < colors; ++c)
    attach(g, EdgeId(c), c, VertexId(0), PreEdgeId(c), VertexId(1), PreEdgeId(colors + c));
  return g;
}

StrandedGraph gen_chain(int n, int m) {
  if (n < 1) throw std::invalid_argument("chain needs rank >= 1");
  if (m < 2) throw std::invalid_argument("chain needs at least 2 dipole pairs");
  StrandedGraph g = StrandedGraph::empty(n);
  const int colors = n + 1;
  auto a = [&](int i) { return VertexId(2 * i); };
  auto b = [&](int i) { return VertexId(2 * i + 1); };
  auto pre = [&](VertexId v, int c) { return PreEdgeId(v.value * colors + c); };
  for (int i = 0; i < m; ++i) {
    add_complete_vertex(g, a(i), a(i).value * colors);
    add_complete_vertex(g, b(i), b(i).value * colors);
  }
  for (int i = 0; i < m; ++i) {
    for (int c = 1; c < colors; ++c)
      attach(g, EdgeId(i * colors + c), c, a(i), pre(a(i), c), b(i), pre(b(i), c));
    int j = (i + 1) % m;
    attach(g, EdgeId(i * colors), 0, b(i), pre(b(i), 0), a(j), pre(a(j), 0));
  }
  return g;
}

StrandedGraph gen_random(int n, int num_cuts, int num_contractions, std::uint64_t seed, int max_edges) {
  if (n < 1) throw std::invalid_argument("random graph needs rank >= 1");
  if (num_cuts < 0 || num_contractions < 0) throw std::invalid_argument("surgery counts must be non-negative");
  const int colors = n + 1;
  const int moves = num_cuts + num_contractions;
  const int m_lo = std::max(2, (moves + colors - 1) / colors);
  const int m_hi = std::max(0, (max_edges + moves) / colors);
  if (m_hi < m_lo)
    throw BudgetExceeded("no chain of rank " + std::to_string(n) + " fits " + std::to_string(max_edges) +
                         " edges after " + std::to_string(moves) + " moves");
  std::mt19937_64 rng(seed);
  const int m = m_lo + static_cast<int>(rng() % static_cast<std::uint64_t>(m_hi - m_lo + 1));
  StrandedGraph g = gen_chain(n, m);
  auto pick = [&] {
    auto ids = g.edge_ids();
    return ids[rng() % ids.size()];
  };
  for (int i = 0; i < num_cuts; ++i) g = cut(g, pick());
  for (int i = 0; i < num_contractions; ++i) g = contract(g, pick());
  return g;
}

}  // namespace wsg
