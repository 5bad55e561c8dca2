#include "wsg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace wsg {

int Schema::index_of(const std::string& name) const {
  auto it = std::find(vars.begin(), vars.end(), name);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

Schema Schema::invariant() { return {{"(x-1)", "(y-1)", "s", "w", "q", "t"}, 2}; }

Schema Schema::extended(int rank) {
  Schema s{{"(x-1)", "(y-1)"}, 2};
  for (int i = 0; i <= rank; ++i) s.vars.push_back("y" + std::to_string(i));
  return s;
}

Schema Schema::tutte() { return {{"x", "y"}, -1}; }

Schema Schema::ribbon() { return {{"(x-1)", "(y-1)"}, 2}; }

int compare(const Monomial& a, const Monomial& b) {
  Rational da(0), db(0);
  for (const auto& e : a.exps) da += e;
  for (const auto& e : b.exps) db += e;
  if (int c = compare(da, db)) return c;
  std::size_t n = std::max(a.exps.size(), b.exps.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = i < a.exps.size() ? a.exps[i] : Rational(0);
    Rational y = i < b.exps.size() ? b.exps[i] : Rational(0);
    if (int c = compare(x, y)) return c;
  }
  return compare(a.z, b.z);
}

Polynomial Polynomial::constant(Schema schema, std::int64_t c, int rank) {
  Polynomial p(std::move(schema), rank);
  Monomial m;
  m.exps.assign(p.schema_.vars.size(), Rational(0));
  p.add(m, c);
  return p;
}

void Polynomial::add(const Monomial& m, std::int64_t coeff) {
  if (m.exps.size() != schema_.vars.size()) throw std::invalid_argument("monomial does not match schema");
  if (!schema_.has_z() && m.z != AffineExpr()) throw std::invalid_argument("schema has no z");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same(const Schema& a, const Schema& b) {
  if (!(a == b)) throw std::invalid_argument("polynomials have different variables");
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (schema_.vars.empty() && terms_.empty() && !schema_.has_z()) {
    schema_ = o.schema_;
    rank_ = o.rank_;
  }
  require_same(schema_, o.schema_);
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (schema_.vars.empty() && terms_.empty() && !schema_.has_z()) {
    schema_ = o.schema_;
    rank_ = o.rank_;
  }
  require_same(schema_, o.schema_);
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same(a.schema_, b.schema_);
  Polynomial out(a.schema_, a.rank_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      m.exps.resize(ma.exps.size());
      for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
      m.z = ma.z + mb.z;
      out.add(m, ca * cb);
    }
  return out;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!(schema_ == o.schema_) || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (compare(a->first, b->first) != 0 || a->second != b->second) return false;
  return true;
}

namespace {

std::string power(const std::string& name, const Rational& e) {
  if (e == 1) return name;
  if (is_integer(e) && e > 0) return name + "^" + to_string(e);
  return name + "^(" + to_string(e) + ")";
}

std::string z_power(const AffineExpr& z) {
  if (z.is_constant()) return power("z", z.constant());
  return "z^(" + z.to_string() + ")";
}

}  // namespace

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::vector<std::string> factors;
    for (std::size_t i = 0; i <= m.exps.size(); ++i) {
      if (schema_.has_z() && static_cast<int>(i) == schema_.z_slot && m.z != AffineExpr())
        factors.push_back(z_power(m.z));
      if (i < m.exps.size() && m.exps[i] != 0) factors.push_back(power(schema_.vars[i], m.exps[i]));
    }
    std::int64_t mag = c < 0 ? -c : c;
    std::string term;
    if (factors.empty() || mag != 1) term = std::to_string(mag);
    for (const auto& f : factors) {
      if (!term.empty()) term += " ";
      term += f;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
    first = false;
  }
  return out;
}

Polynomial Polynomial::parse(const std::string& text, const Schema& schema, int rank) {
  Polynomial p(schema, rank);
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(i) + ": " + why);
  };
  auto skip = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  std::vector<std::string> names = schema.vars;
  if (schema.has_z()) names.push_back("z");
  std::vector<std::size_t> order(names.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a].size() > names[b].size(); });

  skip();
  if (text.compare(i, std::string::npos, "0") == 0) return p;
  bool first = true;
  while (true) {
    skip();
    if (i >= n) {
      if (first) fail("empty polynomial");
      break;
    }
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    std::int64_t coeff = 1;
    std::size_t s = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > s) coeff = std::stoll(text.substr(s, i - s));
    Monomial m;
    m.exps.assign(schema.vars.size(), Rational(0));
    bool any = i > s;
    while (true) {
      skip();
      if (i >= n || text[i] == '+' || text[i] == '-') break;
      bool matched = false;
      for (std::size_t k : order) {
        const std::string& nm = names[k];
        if (text.compare(i, nm.size(), nm) != 0) continue;
        // Single-letter names must not swallow a longer identifier.
        std::size_t after = i + nm.size();
        if (std::isalnum(static_cast<unsigned char>(nm.back())) && after < n &&
            std::isalnum(static_cast<unsigned char>(text[after])))
          continue;
        i = after;
        std::string exp = "1";
        if (i < n && text[i] == '^') {
          ++i;
          if (i < n && text[i] == '(') {
            std::size_t close = text.find(')', i);
            if (close == std::string::npos) fail("unclosed exponent");
            exp = text.substr(i + 1, close - i - 1);
            i = close + 1;
          } else {
            std::size_t e0 = i;
            while (i < n && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
            if (i == e0) fail("missing exponent");
            exp = text.substr(e0, i - e0);
          }
        }
        if (nm == "z" && schema.has_z() && k == names.size() - 1) {
          m.z += AffineExpr::parse(exp);
        } else {
          m.exps[k] += parse_rational(exp);
        }
        matched = true;
        any = true;
        break;
      }
      if (!matched) fail("unknown factor");
    }
    if (!any) fail("empty term");
    p.add(m, neg ? -coeff : coeff);
  }
  return p;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Replacement>& repl) {
  const Schema& sc = p.schema();
  std::vector<const Replacement*> by_var(sc.vars.size(), nullptr);
  const Replacement* z_repl = nullptr;
  for (const auto& [name, r] : repl) {
    if (name == "z" && sc.has_z()) {
      z_repl = &r;
      continue;
    }
    int idx = sc.index_of(name);
    if (idx < 0) throw std::invalid_argument("unknown variable '" + name + "'");
    by_var[idx] = &r;
    for (const auto& [target, e] : r.exps)
      if (sc.index_of(target) < 0) throw std::invalid_argument("unknown variable '" + target + "'");
    if (!sc.has_z() && r.z != AffineExpr()) throw std::invalid_argument("schema has no z");
  }
  Polynomial out(sc, p.rank());
  const int ix = sc.index_of("(x-1)"), iy = sc.index_of("(y-1)");
  for (const auto& [m, c] : p.terms()) {
    Monomial nm;
    nm.exps.assign(sc.vars.size(), Rational(0));
    for (std::size_t i = 0; i < sc.vars.size(); ++i) {
      const Rational e = m.exps[i];
      if (!by_var[i]) {
        nm.exps[i] += e;
        continue;
      }
      for (const auto& [target, r] : by_var[i]->exps) nm.exps[sc.index_of(target)] += r * e;
      nm.z += by_var[i]->z * e;
    }
    if (z_repl) {
      const AffineExpr& A = m.z;
      bool pure_z = z_repl->z.is_constant();
      bool has_vars = false;
      for (const auto& [t, r] : z_repl->exps) has_vars = has_vars || r != 0;
      if (!A.is_constant() && (has_vars || !pure_z))
        throw std::invalid_argument("cannot raise the replacement of z to a symbolic power");
      if (A.is_constant()) {
        for (const auto& [target, r] : z_repl->exps) nm.exps[sc.index_of(target)] += r * A.constant();
        nm.z += z_repl->z * A.constant();
      } else {
        nm.z += A * z_repl->z.constant();
      }
    } else {
      nm.z += m.z;
    }
    for (int idx : {ix, iy}) {
      if (idx < 0) continue;
      if (nm.exps[idx] < 0 || !is_integer(nm.exps[idx]))
        throw std::invalid_argument("substitution gives a negative or fractional power of " + sc.vars[idx]);
    }
    out.add(nm, c);
  }
  return out;
}

namespace {

Replacement mono(std::map<std::string, Rational> exps, std::int64_t zexp = 0) {
  return Replacement{std::move(exps), AffineExpr(Rational(zexp))};
}

void require_invariant_schema(const Polynomial& p) {
  for (const char* v : {"s", "w", "q", "t"})
    if (p.schema().index_of(v) < 0 || !p.schema().has_z())
      throw std::invalid_argument("reduction needs the (x-1),(y-1),z,s,w,q,t variables");
}

}  // namespace

Polynomial reduce_t1(const Polynomial& p) {
  require_invariant_schema(p);
  return substitute(p, {{"s", mono({}, -2)}});
}

Polynomial reduce_t2(const Polynomial& p) {
  require_invariant_schema(p);
  return substitute(p, {{"s", mono({{"s", Rational(2)}}, -2)},
                        {"w", mono({{"s", Rational(-1)}})},
                        {"q", mono({{"s", Rational(1)}})},
                        {"t", mono({{"s", Rational(-1)}})}});
}

Polynomial reduce_t3(const Polynomial& p) {
  require_invariant_schema(p);
  return substitute(p, {{"s", mono({})}, {"w", mono({}, -1)}, {"q", mono({}, 1)}, {"t", mono({}, -1)}});
}

Polynomial fix_alphas(const Polynomial& p, const std::vector<Rational>& alphas) {
  Polynomial out(p.schema(), p.rank());
  for (const auto& [m, c] : p.terms()) {
    Monomial nm = m;
    nm.z = AffineExpr(m.z.evaluate(alphas));
    out.add(nm, c);
  }
  return out;
}

namespace {

BigRational to_big(const Rational& r) { return BigRational(r.numerator()) / BigRational(r.denominator()); }

BigRational ipow(const BigRational& b, std::int64_t e) {
  if (e < 0) {
    if (b == 0) throw std::domain_error("zero raised to a negative power");
    return BigRational(1) / ipow(b, -e);
  }
  BigRational r(1), base = b;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

BigFloat to_float(const BigRational& r) {
  return BigFloat(boost::multiprecision::numerator(r)) / BigFloat(boost::multiprecision::denominator(r));
}

BigFloat fpow(const BigRational& base, const Rational& e) {
  if (is_integer(e)) return to_float(ipow(base, e.numerator()));
  if (base <= 0) throw std::domain_error("non-integral exponent needs a positive base");
  BigFloat b = to_float(base);
  BigFloat x = BigFloat(e.numerator()) / BigFloat(e.denominator());
  return boost::multiprecision::pow(b, x);
}

}  // namespace

std::string Evaluation::to_string() const {
  if (exact) {
    std::ostringstream os;
    os << value;
    return os.str();
  }
  std::ostringstream os;
  os << std::setprecision(40) << approx << " +/- " << std::setprecision(3) << error_bound;
  return os.str();
}

Evaluation evaluate(const Polynomial& p, const Assignment& a) {
  const Schema& sc = p.schema();
  std::vector<BigRational> vals(sc.vars.size());
  for (std::size_t i = 0; i < sc.vars.size(); ++i) {
    const std::string& v = sc.vars[i];
    auto it = a.values.find(v);
    if (it != a.values.end()) {
      vals[i] = to_big(it->second);
      continue;
    }
    if (v == "(x-1)" || v == "(y-1)") {
      auto alt = a.values.find(v.substr(1, 1));
      if (alt != a.values.end()) {
        vals[i] = to_big(alt->second) - 1;
        continue;
      }
    }
    bool used = false;
    for (const auto& [m, c] : p.terms()) used = used || m.exps[i] != 0;
    if (used) throw std::invalid_argument("no value for variable " + v);
    vals[i] = 1;
  }
  BigRational zval(1);
  if (sc.has_z()) {
    bool needed = false;
    for (const auto& [m, c] : p.terms()) needed = needed || m.z != AffineExpr();
    if (needed) {
      if (!a.z) throw std::invalid_argument("no value for variable z");
      zval = to_big(*a.z);
    }
  }

  bool integral = true;
  std::vector<Rational> zexp;
  for (const auto& [m, c] : p.terms()) {
    Rational ze = m.z.evaluate(a.alphas);
    zexp.push_back(ze);
    integral = integral && is_integer(ze);
    for (const auto& e : m.exps) integral = integral && is_integer(e);
  }

  Evaluation out;
  if (integral) {
    BigRational sum(0);
    std::size_t t = 0;
    for (const auto& [m, c] : p.terms()) {
      BigRational term(c);
      for (std::size_t i = 0; i < m.exps.size(); ++i)
        if (m.exps[i] != 0) term *= ipow(vals[i], m.exps[i].numerator());
      if (zexp[t] != 0) term *= ipow(zval, zexp[t].numerator());
      sum += term;
      ++t;
    }
    out.exact = true;
    out.value = sum;
    out.approx = to_float(sum);
    out.error_bound = 0;
    return out;
  }
  BigFloat sum(0), mag(0);
  std::size_t t = 0;
  for (const auto& [m, c] : p.terms()) {
    BigFloat term(c);
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      if (m.exps[i] != 0) term *= fpow(vals[i], m.exps[i]);
    if (zexp[t] != 0) term *= fpow(zval, zexp[t]);
    sum += term;
    mag += boost::multiprecision::abs(term);
    ++t;
  }
  out.exact = false;
  out.approx = sum;
  // Each factor carries at most a few ulps at 50 digits.
  out.error_bound = mag * BigFloat(static_cast<long long>(8 * (p.size() + 1))) * BigFloat("1e-48");
  return out;
}

}  // namespace wsg
