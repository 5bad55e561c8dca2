#pragma once

// Sparse polynomials with exact integer coefficients over a named variable
// list plus an optional z whose exponent is affine in the alpha symbols.

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsg/affine.hpp"

namespace wsg {

using BigRational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_dec_float_50;

struct Schema {
  std::vector<std::string> vars;
  /// z is printed after this many variables; -1 means no z.
  int z_slot = -1;
  bool has_z() const { return z_slot >= 0; }
  int index_of(const std::string& name) const;
  bool operator==(const Schema&) const = default;

  static Schema invariant();        // (x-1) (y-1) z s w q t
  static Schema extended(int rank);  // (x-1) (y-1) z y0 .. yn
  static Schema tutte();            // x y
  static Schema ribbon();           // (x-1) (y-1) z
};

struct Monomial {
  std::vector<Rational> exps;
  AffineExpr z;
};

/// Canonical order: total degree of the named variables, then
/// lexicographic on them, then the z exponent.
int compare(const Monomial& a, const Monomial& b);
struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Replacement target for substitute(): a coefficient-free monomial.
struct Replacement {
  std::map<std::string, Rational> exps;
  AffineExpr z;
};

struct Assignment {
  /// Values by schema variable name; "x" and "y" also set "(x-1)" and "(y-1)".
  std::map<std::string, Rational> values;
  std::optional<Rational> z;
  std::vector<Rational> alphas;  // a3, a4, ...
};

struct Evaluation {
  bool exact = false;
  BigRational value;      // valid when exact
  BigFloat approx;        // always filled
  BigFloat error_bound;   // absolute bound on |approx - true value|
  std::string to_string() const;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t, MonomialLess>;

  Polynomial() = default;
  explicit Polynomial(Schema schema, int rank = 0) : schema_(std::move(schema)), rank_(rank) {}

  static Polynomial constant(Schema schema, std::int64_t c, int rank = 0);

  const Schema& schema() const { return schema_; }
  int rank() const { return rank_; }
  void set_rank(int r) { rank_ = r; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Monomial& m, std::int64_t coeff);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// "(y-1) z^(28+7a3+5a4) s w^11 q^12 t^6 + ...".
  std::string to_text() const;
  static Polynomial parse(const std::string& text, const Schema& schema, int rank = 0);

 private:
  Schema schema_;
  int rank_ = 0;
  Terms terms_;
};

/// Simultaneous substitution. Throws when a (x-1) or (y-1) exponent would
/// become negative or fractional.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Replacement>& repl);

Evaluation evaluate(const Polynomial& p, const Assignment& a);

/// Common reductions of the invariant.
Polynomial reduce_t1(const Polynomial& p);  // s -> z^-2
Polynomial reduce_t2(const Polynomial& p);  // s -> z^-2 s^2, w -> s^-1, q -> s, t -> s^-1
Polynomial reduce_t3(const Polynomial& p);  // s -> 1, w -> z^-1, q -> z, t -> z^-1

/// Fixes the alpha symbols to the given values.
Polynomial fix_alphas(const Polynomial& p, const std::vector<Rational>& alphas);

}  // namespace wsg
