// Command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "wsg/affine.hpp"
#include "wsg/graph.hpp"
#include "wsg/invariant.hpp"
#include "wsg/io.hpp"
#include "wsg/polynomial.hpp"
#include "wsg/surgery.hpp"
#include "wsg/topology.hpp"
#include "wsg/verify.hpp"

using namespace wsg;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string in = "-";
  std::string format = "text";
  std::string alpha = "symbolic";
  std::optional<int> budget;
  bool normalize = false;
  int add_discs = 0;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

StrandedGraph read_input(const Common& c) {
  std::string text;
  if (c.in == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(c.in);
    if (!f) throw UsageError("cannot open " + c.in);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  StrandedGraph g = parse_any(text);
  if (c.normalize) g = normalize(g);
  if (c.add_discs > 0) g = with_discs(g, c.add_discs);
  return g;
}

AlphaMode parse_alpha(const std::string& s, int rank) {
  if (s == "symbolic") return AlphaMode::symbolic();
  std::vector<Rational> v;
  try {
    for (const auto& t : split(s, ',')) v.push_back(parse_rational(t));
  } catch (const std::exception& e) {
    throw UsageError("bad --alpha: " + std::string(e.what()));
  }
  const int want = std::max(0, rank - 2);
  if (static_cast<int>(v.size()) != want)
    throw UsageError("--alpha needs " + std::to_string(want) + " values for rank " + std::to_string(rank));
  return AlphaMode::fixed(v);
}

void emit_graph(const StrandedGraph& g, const Common& c) {
  if (c.format == "json") {
    std::cout << to_json(g).dump(2) << '\n';
  } else {
    std::cout << emit_wsg(g);
  }
}

json poly_json(const Polynomial& p) {
  json terms = json::array();
  for (const auto& [m, coeff] : p.terms()) {
    json exps = json::object();
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] != 0) exps[p.schema().vars[i]] = to_string(m.exps[i]);
    json t{{"coeff", coeff}, {"exps", exps}};
    if (p.schema().has_z()) t["z"] = m.z.to_string();
    terms.push_back(t);
  }
  return {{"text", p.to_text()}, {"terms", terms}};
}

void print_poly(const Polynomial& p, const Common& c) {
  if (c.format == "json") {
    std::cout << poly_json(p).dump(2) << '\n';
  } else {
    std::cout << p.to_text() << '\n';
  }
}

std::string port_text(const PortRef& r) { return std::to_string(r.pre.value) + "." + std::to_string(r.other); }

std::string colors_text(const std::vector<Color>& cs) {
  std::string s;
  for (std::size_t i = 0; i < cs.size(); ++i) s += (i ? "," : "") + std::to_string(cs[i]);
  return s;
}

json counts_json(const StateCounts& s) {
  return {{"V", s.V},         {"E", s.E},         {"f", s.f},         {"k", s.k},
          {"F_int", s.F_int}, {"F_ext", s.F_ext}, {"B_int", s.B_int}, {"B_ext", s.B_ext},
          {"C_bd", s.C_bd},   {"boundary_bubbles", s.boundary_bubbles}};
}

json census_json(const CensusRecord& r) {
  json tb = json::array();
  for (const auto& b : r.three_bubbles)
    tb.push_back({{"colors", b.colors}, {"V", b.V}, {"E", b.E}, {"F_int", b.F_int}, {"C_bd", b.C_bd}, {"genus", b.genus}});
  return {{"rank", r.rank},
          {"V", r.V},
          {"E", r.E},
          {"f", r.f},
          {"k", r.k},
          {"F_int", r.F_int},
          {"F_ext", r.F_ext},
          {"B_int", r.B_int},
          {"B_ext", r.B_ext},
          {"boundary", {{"V", r.boundary.V}, {"C", r.boundary.C}, {"E", r.boundary.E}, {"F", r.boundary.F}, {"B", r.boundary.B}}},
          {"three_bubbles", tb},
          {"B2", r.B2}};
}

int report_invalid(const Common& c, const std::string& why) {
  if (c.format == "json") {
    std::cout << json{{"valid", false}, {"error", why}}.dump() << '\n';
  } else {
    std::cout << "invalid: " << why << '\n';
  }
  return 1;
}

int cmd_validate(const Common& c) {
  try {
    StrandedGraph g = read_input(c);
    if (c.format == "json") {
      std::cout << json{{"valid", true}}.dump() << '\n';
    } else {
      std::cout << "valid\n";
    }
    return 0;
  } catch (const ParseError& e) {
    if (e.kind() != ParseError::Kind::Semantic) throw;
    return report_invalid(c, e.what());
  } catch (const InvalidGraph& e) {
    return report_invalid(c, e.report().to_string());
  }
}

int cmd_stats(const Common& c) {
  StrandedGraph g = read_input(c);
  CountsRecord cr = stats(g);
  CensusRecord r = census(g);
  if (c.format == "json") {
    json j = census_json(r);
    j["r"] = cr.r;
    j["nullity"] = cr.nullity;
    j["discs"] = cr.discs;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "V=" << r.V << " E=" << r.E << " F_int=" << r.F_int;
  for (int p = 3; p <= g.rank + 1 && p < static_cast<int>(r.B_int.size()); ++p)
    if (p <= g.rank) std::cout << " B" << p << "=" << r.B(p);
  std::cout << '\n';
  return 0;
}

int cmd_gamma(const Common& c, bool consecutive, bool alternating) {
  StrandedGraph g = read_input(c);
  AlphaMode a = parse_alpha(c.alpha, g.rank);
  json j;
  auto show = [&](const std::string& name, const AffineExpr& e) {
    std::string v = a.values ? to_string(e.evaluate(*a.values)) : e.to_string();
    j[name] = v;
    if (c.format != "json") std::cout << name << " = " << v << '\n';
  };
  show("gamma", gamma(g));
  if (consecutive) show("gamma_consecutive", gamma_consecutive(g));
  if (alternating) {
    auto alts = alternating_alphas(g.rank);
    std::vector<std::string> s;
    for (const auto& r : alts) s.push_back(to_string(r));
    j["alternating_alphas"] = s;
    if (c.format != "json") {
      std::cout << "alternating_alphas =";
      for (const auto& x : s) std::cout << ' ' << x;
      std::cout << '\n';
    }
  }
  if (c.format == "json") std::cout << j.dump(2) << '\n';
  return 0;
}

int cmd_faces(const Common& c) {
  StrandedGraph g = read_input(c);
  json arr = json::array();
  for (const Face& f : faces(g)) {
    if (c.format == "json") {
      std::vector<std::string> tr;
      for (const auto& p : f.trace) tr.push_back(port_text(p));
      arr.push_back({{"disc", f.disc}, {"pair", {f.pair.lo, f.pair.hi}}, {"closed", f.closed}, {"trace", tr}});
      continue;
    }
    if (f.disc) {
      std::cout << "disc\n";
      continue;
    }
    std::cout << "face " << f.pair.lo << "," << f.pair.hi << (f.closed ? " closed" : " open") << ":";
    for (const auto& p : f.trace) std::cout << ' ' << port_text(p);
    std::cout << '\n';
  }
  if (c.format == "json") std::cout << arr.dump(2) << '\n';
  return 0;
}

int cmd_bubbles(const Common& c, const std::string& colors, std::optional<int> extract) {
  StrandedGraph g = read_input(c);
  if (colors.empty()) {
    if (extract) throw UsageError("--extract needs --colors");
    CensusRecord r = census(g);
    if (c.format == "json") {
      std::cout << census_json(r).dump(2) << '\n';
      return 0;
    }
    for (int p = 3; p <= g.rank + 1; ++p)
      std::cout << "B" << p << " int=" << r.B_int[p] << " ext=" << r.B_ext[p] << '\n';
    for (const auto& b : r.three_bubbles)
      std::cout << "3-bubble " << colors_text(b.colors) << " V=" << b.V << " E=" << b.E << " F_int=" << b.F_int
                << " C_bd=" << b.C_bd << " genus=" << b.genus << '\n';
    return 0;
  }
  std::vector<Color> S;
  try {
    for (const auto& t : split(colors, ',')) S.push_back(std::stoi(t));
  } catch (const std::exception&) {
    throw UsageError("bad --colors '" + colors + "'");
  }
  if (extract) {
    emit_graph(extract_bubble(g, S, *extract), c);
    return 0;
  }
  json arr = json::array();
  for (const Bubble& b : bubbles(g, S)) {
    std::vector<int> pres, es, hs;
    for (auto p : b.pre_edges) pres.push_back(p.value);
    for (auto e : b.edges) es.push_back(e.value);
    for (auto h : b.half_edges) hs.push_back(h.value);
    if (c.format == "json") {
      arr.push_back({{"colors", b.colors}, {"pre_edges", pres}, {"edges", es}, {"half_edges", hs},
                     {"sub_vertices", b.sub_vertices}, {"open", b.open}});
      continue;
    }
    std::cout << "bubble " << colors_text(b.colors) << (b.open ? " open" : " closed") << " vertices "
              << b.sub_vertices << " edges [" << colors_text(es) << "] half-edges [" << colors_text(hs) << "]\n";
  }
  if (c.format == "json") std::cout << arr.dump(2) << '\n';
  return 0;
}

int cmd_boundary(const Common& c) {
  StrandedGraph g = read_input(c);
  BoundaryGraph b = boundary(g);
  if (c.format == "json") {
    json vs = json::array(), es = json::array();
    for (const auto& v : b.vertices) vs.push_back({{"half_edge", v.half_edge.value}, {"color", v.color}});
    for (const auto& e : b.edges) es.push_back({{"a", e.a.value}, {"b", e.b.value}, {"pair", {e.pair.lo, e.pair.hi}}});
    std::cout << json{{"vertices", vs},
                      {"edges", es},
                      {"stats", {{"V", b.stats.V}, {"C", b.stats.C}, {"E", b.stats.E}, {"F", b.stats.F}, {"B", b.stats.B}}}}
                     .dump(2)
              << '\n';
    return 0;
  }
  for (const auto& v : b.vertices) std::cout << "vertex " << v.half_edge.value << " color " << v.color << '\n';
  for (const auto& e : b.edges)
    std::cout << "edge " << e.a.value << " " << e.b.value << " pair " << e.pair.lo << "," << e.pair.hi << '\n';
  std::cout << "V=" << b.stats.V << " C=" << b.stats.C << " E=" << b.stats.E << " F=" << b.stats.F << " B=[";
  for (std::size_t i = 0; i < b.stats.B.size(); ++i) std::cout << (i ? "," : "") << b.stats.B[i];
  std::cout << "]\n";
  return 0;
}

Assignment parse_assignment(const std::string& s, const AlphaMode& a) {
  Assignment out;
  for (const auto& kv : split(s, ',')) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("bad --at entry '" + kv + "'");
    std::string name = kv.substr(0, eq);
    Rational v;
    try {
      v = parse_rational(kv.substr(eq + 1));
    } catch (const std::exception& e) {
      throw UsageError("bad --at value '" + kv + "'");
    }
    if (name == "z") {
      out.z = v;
    } else {
      out.values[name] = v;
    }
  }
  if (a.values) out.alphas = *a.values;
  return out;
}

int cmd_poly(const Common& c, const std::string& form, const std::string& layout, const std::string& at) {
  StrandedGraph g = read_input(c);
  AlphaMode a = parse_alpha(c.alpha, g.rank);
  if (form == "multivariate") {
    MultivariateLayout l = layout == "rank3" ? MultivariateLayout::Rank3 : MultivariateLayout::General;
    MultivariateForm m = multivariate(g, l, c.budget);
    if (c.format == "json") {
      std::cout << json{{"vars", m.vars()}, {"text", m.to_text()}}.dump(2) << '\n';
    } else {
      std::cout << m.to_text() << '\n';
    }
    return 0;
  }
  Polynomial p = form == "extended" ? extended(g, a, c.budget) : invariant(g, a, c.budget);
  if (!at.empty()) {
    Evaluation e = evaluate(p, parse_assignment(at, a));
    if (c.format == "json") {
      std::cout << json{{"exact", e.exact}, {"value", e.to_string()}}.dump() << '\n';
    } else {
      std::cout << e.to_string() << '\n';
    }
    return 0;
  }
  print_poly(p, c);
  return 0;
}

int cmd_reduce(const Common& c, const std::string& target, bool use_oracle) {
  StrandedGraph g = read_input(c);
  if (use_oracle) {
    if (target == "tutte") {
      print_poly(oracle(g, OracleKind::Tutte), c);
    } else if (target == "br") {
      print_poly(oracle(g, OracleKind::BR), c);
    } else {
      throw UsageError("--oracle applies to tutte and br");
    }
    return 0;
  }
  AlphaMode a = parse_alpha(c.alpha, g.rank);
  Polynomial p = invariant(g, a, c.budget);
  if (target == "tutte") {
    p = specialize(p, Target::Tutte);
  } else if (target == "br") {
    p = specialize(p, Target::BR);
  } else if (target == "t1") {
    p = reduce_t1(p);
  } else if (target == "t2") {
    p = reduce_t2(p);
  } else {
    p = reduce_t3(p);
  }
  print_poly(p, c);
  return 0;
}

int cmd_surgery(const Common& c, const std::string& op, std::optional<int> edge, const std::string& order) {
  StrandedGraph g = read_input(c);
  if (op == "full") {
    std::vector<EdgeId> ord;
    if (order.empty()) {
      ord = g.edge_ids();
    } else {
      try {
        for (const auto& t : split(order, ',')) ord.push_back(EdgeId(std::stoi(t)));
      } catch (const std::exception&) {
        throw UsageError("bad --order '" + order + "'");
      }
    }
    emit_graph(full_contract(g, ord), c);
    return 0;
  }
  if (op == "states") {
    json arr = json::array();
    for_each_spanning_subset(
        g,
        [&](const SpanningSubgraphState& s) {
          std::vector<int> ids;
          for (auto e : s.subset()) ids.push_back(e.value);
          const StateCounts& k = s.counts();
          if (c.format == "json") {
            json j = counts_json(k);
            j["subset"] = ids;
            arr.push_back(j);
            return;
          }
          std::cout << "{" << colors_text(ids) << "} V=" << k.V << " E=" << k.E << " k=" << k.k << " F_int=" << k.F_int
                    << " C_bd=" << k.C_bd << " F_bd=" << k.F_bd() << " E_bd=" << k.E_bd() << " f=" << k.f << '\n';
        },
        c.budget);
    if (c.format == "json") std::cout << arr.dump(2) << '\n';
    return 0;
  }
  if (!edge) throw UsageError("surgery " + op + " needs --edge");
  EdgeId e(*edge);
  if (op == "classify") {
    EdgeClass k = classify(g, e);
    if (c.format == "json") {
      std::cout << json{{"class", k.to_string()}, {"p_inner", k.p_inner}, {"trivial", k.trivial}}.dump() << '\n';
    } else {
      std::cout << k.to_string() << '\n';
    }
    return 0;
  }
  emit_graph(op == "cut" ? cut(g, e) : contract(g, e), c);
  return 0;
}

struct GenerateArgs {
  std::string kind;
  int rank = 3;
  int pairs = 2;
  int cuts = 0;
  int contractions = 0;
  std::uint64_t seed = 0;
  int max_edges = 16;
};

int cmd_generate(const Common& c, const GenerateArgs& a) {
  StrandedGraph g;
  if (a.kind == "dipole") {
    g = gen_dipole(a.rank);
  } else if (a.kind == "chain") {
    g = gen_chain(a.rank, a.pairs);
  } else {
    g = gen_random(a.rank, a.cuts, a.contractions, a.seed, a.max_edges);
  }
  if (c.normalize) g = normalize(g);
  if (c.add_discs > 0) g = with_discs(g, c.add_discs);
  emit_graph(g, c);
  return 0;
}

struct VerifyArgs {
  std::string ranks = "3,4,5";
  std::string seeds = "0..69";
  int jobs = 1;
  int max_edges = 10;
  bool no_fixtures = false;
  bool no_oracles = false;
  std::string corrupt;
  bool single = false;
};

int cmd_verify(const Common& c, const VerifyArgs& v) {
  CheckOptions opt;
  opt.budget = c.budget;
  opt.corrupt = v.corrupt;
  Report rep;
  if (v.single) {
    GraphCase gc{c.in == "-" ? "stdin" : c.in, std::nullopt, read_input(c)};
    rep.graphs = 1;
    rep.verdicts = verify_graph(gc, opt, &rep.notes);
  } else {
    CorpusSpec spec;
    spec.ranks.clear();
    try {
      for (const auto& t : split(v.ranks, ',')) spec.ranks.push_back(std::stoi(t));
      auto dots = v.seeds.find("..");
      if (dots == std::string::npos) {
        spec.seed_lo = spec.seed_hi = std::stoull(v.seeds);
      } else {
        spec.seed_lo = std::stoull(v.seeds.substr(0, dots));
        spec.seed_hi = std::stoull(v.seeds.substr(dots + 2));
      }
    } catch (const std::exception&) {
      throw UsageError("bad --ranks or --seeds");
    }
    for (int r : spec.ranks)
      if (r < 1) throw UsageError("ranks must be positive");
    spec.jobs = v.jobs;
    spec.max_edges = v.max_edges;
    spec.fixtures = !v.no_fixtures;
    spec.oracle_corpora = !v.no_oracles;
    spec.options = opt;
    rep = run_suite(spec);
    std::cerr << "elapsed " << rep.seconds << " s\n";
  }
  if (c.format == "json") {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    std::cout << rep.to_text();
  }
  return rep.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"w-colored stranded graph toolkit"};
  app.require_subcommand(1);
  Common c;
  std::optional<int> budget;
  auto common = [&](CLI::App* s, bool input = true) {
    if (input) s->add_option("--in", c.in, "input .wsg or JSON file, - for stdin");
    s->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--budget", budget, "maximum edge count for 2^E enumeration");
    s->add_flag("--normalize", c.normalize, "drop discs before running");
    s->add_option("--add-discs", c.add_discs, "add this many discs before running")->check(CLI::NonNegativeNumber);
  };

  auto* validate = app.add_subcommand("validate", "check well-formedness");
  common(validate);
  auto* stats_cmd = app.add_subcommand("stats", "counts and bubble census summary");
  common(stats_cmd);
  auto* gamma_cmd = app.add_subcommand("gamma", "weighted Euler characteristic");
  common(gamma_cmd);
  gamma_cmd->add_option("--alpha", c.alpha, "symbolic or a3,a4,... as p/q");
  bool consecutive = false, alternating = false;
  gamma_cmd->add_flag("--consecutive", consecutive, "also print the consecutive-bubble variant");
  gamma_cmd->add_flag("--alternating", alternating, "print alphas with alternating bubble signs");
  auto* faces_cmd = app.add_subcommand("faces", "list faces");
  common(faces_cmd);
  auto* bubbles_cmd = app.add_subcommand("bubbles", "bubble census, or bubbles of one color set");
  common(bubbles_cmd);
  std::string colors;
  std::optional<int> extract;
  bubbles_cmd->add_option("--colors", colors, "comma-separated color set");
  bubbles_cmd->add_option("--extract", extract, "emit the bubble with this index as a graph");
  auto* boundary_cmd = app.add_subcommand("boundary", "boundary graph");
  common(boundary_cmd);

  auto* poly = app.add_subcommand("poly", "polynomial invariant");
  common(poly);
  std::string form = "invariant", layout = "general", at;
  poly->add_option("form", form, "invariant, multivariate or extended")
      ->check(CLI::IsMember({"invariant", "multivariate", "extended"}));
  poly->add_option("--alpha", c.alpha, "symbolic or a3,a4,... as p/q");
  poly->add_option("--layout", layout, "multivariate layout: general or rank3")->check(CLI::IsMember({"general", "rank3"}));
  poly->add_option("--at", at, "evaluate at x=..,y=..,z=..,s=.. (exact rationals)");

  auto* reduce = app.add_subcommand("reduce", "specializations and reductions");
  common(reduce);
  std::string target;
  bool use_oracle = false;
  reduce->add_option("target", target, "tutte, br, t1, t2 or t3")
      ->required()
      ->check(CLI::IsMember({"tutte", "br", "t1", "t2", "t3"}));
  reduce->add_option("--alpha", c.alpha, "symbolic or a3,a4,... as p/q");
  reduce->add_flag("--oracle", use_oracle, "use the independent reference implementation");

  auto* surgery = app.add_subcommand("surgery", "cut, contract, classify, full contraction, states");
  common(surgery);
  std::string op;
  std::optional<int> edge;
  std::string order;
  surgery->add_option("op", op, "cut, contract, classify, full or states")
      ->required()
      ->check(CLI::IsMember({"cut", "contract", "classify", "full", "states"}));
  surgery->add_option("--edge", edge, "edge id");
  surgery->add_option("--order", order, "contraction order for full, comma-separated");

  auto* generate = app.add_subcommand("generate", "generate graphs");
  common(generate, false);
  GenerateArgs ga;
  generate->add_option("kind", ga.kind, "dipole, chain or random")
      ->required()
      ->check(CLI::IsMember({"dipole", "chain", "random"}));
  generate->add_option("--rank", ga.rank, "rank n")->check(CLI::PositiveNumber);
  generate->add_option("--pairs", ga.pairs, "dipole pairs in a chain");
  generate->add_option("--cuts", ga.cuts, "random cuts");
  generate->add_option("--contractions", ga.contractions, "random contractions");
  generate->add_option("--seed", ga.seed, "random seed");
  generate->add_option("--max-edges", ga.max_edges, "edge cap for random graphs");

  auto* verify = app.add_subcommand("verify", "run the claim suite");
  common(verify);
  VerifyArgs va;
  verify->add_option("--ranks", va.ranks, "comma-separated ranks");
  verify->add_option("--seeds", va.seeds, "seed range a..b");
  verify->add_option("--jobs", va.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--max-edges", va.max_edges, "edge cap for generated graphs");
  verify->add_flag("--no-fixtures", va.no_fixtures, "skip the fixed examples");
  verify->add_flag("--no-oracles", va.no_oracles, "skip the rank-1 and rank-2 oracle corpora");
  verify->add_option("--corrupt", va.corrupt, "perturb claims with this id prefix (self-test)");
  verify->add_flag("--single", va.single, "check only the --in graph");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  c.budget = budget;

  try {
    if (*validate) return cmd_validate(c);
    if (*stats_cmd) return cmd_stats(c);
    if (*gamma_cmd) return cmd_gamma(c, consecutive, alternating);
    if (*faces_cmd) return cmd_faces(c);
    if (*bubbles_cmd) return cmd_bubbles(c, colors, extract);
    if (*boundary_cmd) return cmd_boundary(c);
    if (*poly) return cmd_poly(c, form, layout, at);
    if (*reduce) return cmd_reduce(c, target, use_oracle);
    if (*surgery) return cmd_surgery(c, op, edge, order);
    if (*generate) return cmd_generate(c, ga);
    if (*verify) return cmd_verify(c, va);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
