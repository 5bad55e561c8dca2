#include "wsg/invariant.hpp"

#include <algorithm>
#include <stdexcept>

#include "wsg/surgery.hpp"
#include "wsg/topology.hpp"

namespace wsg {

void MultivariateForm::add(const Key& k, std::int64_t c) {
  if (c == 0) return;
  auto [it, ins] = terms_.emplace(k, c);
  if (!ins) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultivariateForm& MultivariateForm::operator+=(const MultivariateForm& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  if (vars_ != o.vars_) throw std::invalid_argument("multivariate forms have different variables");
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

MultivariateForm MultivariateForm::times_x_beta(int edge_id) const {
  MultivariateForm out(vars_);
  for (const auto& [k, c] : terms_) {
    Key nk = k;
    auto pos = std::lower_bound(nk.betas.begin(), nk.betas.end(), edge_id);
    if (pos != nk.betas.end() && *pos == edge_id) throw std::invalid_argument("beta squared");
    nk.betas.insert(pos, edge_id);
    nk.exps[0] += 1;
    out.add(nk, c);
  }
  return out;
}

std::string MultivariateForm::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::vector<std::string> f;
    auto pw = [&](const std::string& name, int e) {
      if (e == 0) return;
      f.push_back(e == 1 ? name : name + "^" + std::to_string(e));
    };
    pw("x", k.exps[0]);
    for (int b : k.betas) f.push_back("b" + std::to_string(b));
    for (std::size_t i = 0; i < vars_.size(); ++i) pw(vars_[i], k.exps[i + 1]);
    std::int64_t mag = c < 0 ? -c : c;
    std::string term;
    if (f.empty() || mag != 1) term = std::to_string(mag);
    for (const auto& s : f) term += (term.empty() ? "" : " ") + s;
    out += first ? (c < 0 ? "-" : "") + term : (c < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

AffineExpr z_exponent(int n, const StateCounts& c) {
  if (n < 2) return AffineExpr();
  AffineExpr z(Rational((n - 1) * (n + 2) / 2 * c.k));
  return z - gamma_from_counts(n, c);
}

namespace {

std::vector<std::string> multivariate_vars(int n, MultivariateLayout layout) {
  if (layout == MultivariateLayout::Rank3) return {"z1", "z2", "z3", "s", "w", "q", "t"};
  std::vector<std::string> v;
  for (int i = 2; i <= n; ++i) v.push_back("z" + std::to_string(i));
  for (int i = 3; i <= n; ++i) v.push_back("zb" + std::to_string(i));
  for (int i = 0; i <= n; ++i) v.push_back("y" + std::to_string(i));
  return v;
}

MultivariateForm::Key multivariate_key(const Frame& f, std::uint64_t mask, const StateCounts& c,
                                       MultivariateLayout layout) {
  MultivariateForm::Key k;
  for (int i = 0; i < f.num_edges(); ++i)
    if ((mask >> i) & 1u) k.betas.push_back(f.edge_ids[i].value);
  const int n = f.rank;
  k.exps.push_back(c.r());
  if (layout == MultivariateLayout::Rank3) {
    k.exps.insert(k.exps.end(), {c.F_int, c.B_int[3], c.B_ext[3], c.C_bd, c.F_bd(), c.E_bd(), c.f});
    return k;
  }
  if (n >= 2) k.exps.push_back(c.F_int);
  for (int i = 3; i <= n; ++i) k.exps.push_back(c.B_int[i]);
  for (int i = 3; i <= n; ++i) k.exps.push_back(c.B_ext[i]);
  for (int i = 0; i <= n; ++i) k.exps.push_back(c.boundary_bubbles[i]);
  return k;
}

AffineExpr state_z(int n, const StateCounts& c, const AlphaMode& alpha) {
  AffineExpr z = z_exponent(n, c);
  if (alpha.values) return AffineExpr(z.evaluate(*alpha.values));
  return z;
}

// Accumulates terms under integer keys before building monomials.
struct Accumulator {
  std::map<std::vector<std::int64_t>, std::int64_t> terms;
  void add(std::vector<std::int64_t> key) { terms[std::move(key)] += 1; }
};

void push_affine(std::vector<std::int64_t>& key, const AffineExpr& z, int n) {
  // Exponents from counts are integral; fixed rational alphas are not, so
  // store numerator/denominator pairs.
  auto push = [&](const Rational& r) {
    key.push_back(r.numerator());
    key.push_back(r.denominator());
  };
  push(z.constant());
  for (int j = 3; j <= n; ++j) push(z.coeff(j));
}

AffineExpr pop_affine(const std::vector<std::int64_t>& key, std::size_t at, int n) {
  AffineExpr z(Rational(key[at], key[at + 1]));
  for (int j = 3; j <= n; ++j) {
    std::size_t i = at + 2 * (j - 2);
    z.set_coeff(j, Rational(key[i], key[i + 1]));
  }
  return z;
}

Polynomial build(const Schema& schema, int rank, const Accumulator& acc) {
  Polynomial p(schema, rank);
  const std::size_t nv = schema.vars.size();
  for (const auto& [key, c] : acc.terms) {
    Monomial m;
    for (std::size_t i = 0; i < nv; ++i) m.exps.push_back(Rational(key[i]));
    m.z = pop_affine(key, nv, rank);
    p.add(m, c);
  }
  return p;
}

std::vector<std::int64_t> invariant_key(int rG, const StateCounts& c, const AffineExpr& z, int n) {
  std::vector<std::int64_t> key{rG - c.r(), c.nullity(), c.C_bd, c.F_bd(), c.E_bd(), c.f};
  push_affine(key, z, n);
  return key;
}

std::vector<std::int64_t> extended_key(int rG, const StateCounts& c, const AffineExpr& z, int n) {
  std::vector<std::int64_t> key{rG - c.r(), c.nullity()};
  for (int i = 0; i <= n; ++i) key.push_back(c.boundary_bubbles[i]);
  push_affine(key, z, n);
  return key;
}

int full_rank(const Frame& f) {
  CensusKernel k(f);
  std::uint64_t all = f.num_edges() >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << f.num_edges()) - 1;
  return k.run(all).r();
}

}  // namespace

Polynomial invariant(const StrandedGraph& g, const AlphaMode& alpha, std::optional<int> budget) {
  require_valid(g);
  Frame f = build_frame(g);
  const int n = g.rank;
  const int rG = full_rank(f);
  Accumulator acc;
  for_each_state_counts(
      f, [&](std::uint64_t, const StateCounts& c) { acc.add(invariant_key(rG, c, state_z(n, c, alpha), n)); },
      budget);
  return build(Schema::invariant(), n, acc);
}

Polynomial extended(const StrandedGraph& g, const AlphaMode& alpha, std::optional<int> budget) {
  require_valid(g);
  Frame f = build_frame(g);
  const int n = g.rank;
  const int rG = full_rank(f);
  Accumulator acc;
  for_each_state_counts(
      f, [&](std::uint64_t, const StateCounts& c) { acc.add(extended_key(rG, c, state_z(n, c, alpha), n)); },
      budget);
  return build(Schema::extended(n), n, acc);
}

MultivariateForm multivariate(const StrandedGraph& g, MultivariateLayout layout, std::optional<int> budget) {
  require_valid(g);
  if (layout == MultivariateLayout::Rank3 && g.rank != 3)
    throw std::invalid_argument("the seven-variable form needs rank 3");
  Frame f = build_frame(g);
  MultivariateForm mv(multivariate_vars(g.rank, layout));
  for_each_state_counts(
      f, [&](std::uint64_t mask, const StateCounts& c) { mv.add(multivariate_key(f, mask, c, layout), 1); },
      budget);
  return mv;
}

AllForms all_forms(const StrandedGraph& g, std::optional<int> budget) {
  require_valid(g);
  Frame f = build_frame(g);
  const int n = g.rank;
  const int rG = full_rank(f);
  Accumulator inv, ext;
  MultivariateForm mv(multivariate_vars(n, MultivariateLayout::General));
  const AlphaMode sym = AlphaMode::symbolic();
  for_each_state_counts(
      f,
      [&](std::uint64_t mask, const StateCounts& c) {
        AffineExpr z = state_z(n, c, sym);
        inv.add(invariant_key(rG, c, z, n));
        ext.add(extended_key(rG, c, z, n));
        mv.add(multivariate_key(f, mask, c, MultivariateLayout::General), 1);
      },
      budget);
  return {build(Schema::invariant(), n, inv), build(Schema::extended(n), n, ext), std::move(mv)};
}

namespace {

std::vector<std::int64_t> binomial_row(std::int64_t a) {
  std::vector<std::int64_t> row(a + 1, 1);
  for (std::int64_t i = 1; i < a; ++i) row[i] = row[i - 1] * (a - i + 1) / i;
  return row;
}

}  // namespace

Polynomial specialize(const Polynomial& p, Target target) {
  const Schema& sc = p.schema();
  const int ix = sc.index_of("(x-1)"), iy = sc.index_of("(y-1)");
  if (ix < 0 || iy < 0) throw std::invalid_argument("specialization needs (x-1) and (y-1)");
  if (target == Target::Tutte) {
    if (p.rank() != 1) throw std::invalid_argument("Tutte specialization needs a rank-1 polynomial");
    Polynomial out(Schema::tutte(), 1);
    for (const auto& [m, c] : p.terms()) {
      std::int64_t a = m.exps[ix].numerator(), b = m.exps[iy].numerator();
      auto ra = binomial_row(a), rb = binomial_row(b);
      for (std::int64_t i = 0; i <= a; ++i)
        for (std::int64_t j = 0; j <= b; ++j) {
          std::int64_t sign = ((a - i) + (b - j)) % 2 ? -1 : 1;
          Monomial t;
          t.exps = {Rational(i), Rational(j)};
          out.add(t, c * sign * ra[i] * rb[j]);
        }
    }
    return out;
  }
  if (p.rank() != 2) throw std::invalid_argument("BR specialization needs a rank-2 polynomial");
  for (const char* v : {"s", "w", "q", "t"})
    if (sc.index_of(v) < 0) throw std::invalid_argument("BR specialization needs s, w, q, t");
  Polynomial sub = substitute(p, {{"s", Replacement{{}, AffineExpr(Rational(-1))}},
                                  {"w", Replacement{}},
                                  {"q", Replacement{}},
                                  {"t", Replacement{}}});
  Polynomial out(Schema::ribbon(), 2);
  for (const auto& [m, c] : sub.terms()) {
    Monomial t;
    t.exps = {m.exps[ix], m.exps[iy]};
    t.z = m.z;
    out.add(t, c);
  }
  return out;
}

}  // namespace wsg
