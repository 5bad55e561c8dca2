#pragma once

// Exact affine expressions c0 + c3*a3 + ... + cn*an over the rationals.

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace boost {

// Boost's mixed rational/integer equality recurses forever under C++20
// reversed-operator lookup; these exact overloads take precedence.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }

}  // namespace boost

namespace wsg {

using Rational = boost::rational<std::int64_t>;

int compare(const Rational& a, const Rational& b);
std::string to_string(const Rational& r);
/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& r);

/// Symbols are a3, a4, ...; coefficient i belongs to a_{i+3}.
class AffineExpr {
 public:
  AffineExpr() = default;
  explicit AffineExpr(Rational constant) : constant_(constant) {}
  AffineExpr(Rational constant, std::vector<Rational> coeffs);

  static AffineExpr symbol(int index);  // index >= 3

  const Rational& constant() const { return constant_; }
  /// Coefficient of a_index; zero when absent.
  Rational coeff(int index) const;
  void set_coeff(int index, Rational value);
  /// Largest symbol index with a non-zero coefficient, or 2 if none.
  int max_symbol() const;
  bool is_constant() const { return max_symbol() < 3; }

  AffineExpr& operator+=(const AffineExpr& o);
  AffineExpr& operator-=(const AffineExpr& o);
  AffineExpr& operator*=(const Rational& k);
  friend AffineExpr operator+(AffineExpr a, const AffineExpr& b) { return a += b; }
  friend AffineExpr operator-(AffineExpr a, const AffineExpr& b) { return a -= b; }
  friend AffineExpr operator*(AffineExpr a, const Rational& k) { return a *= k; }
  friend AffineExpr operator*(const Rational& k, AffineExpr a) { return a *= k; }
  AffineExpr operator-() const { return *this * Rational(-1); }

  /// alphas[i] is the value of a_{i+3}; missing symbols count as zero.
  Rational evaluate(const std::vector<Rational>& alphas) const;

  /// Total order: constant first, then coefficients by symbol index.
  friend int compare(const AffineExpr& a, const AffineExpr& b);
  friend bool operator==(const AffineExpr& a, const AffineExpr& b) { return compare(a, b) == 0; }
  friend bool operator!=(const AffineExpr& a, const AffineExpr& b) { return compare(a, b) != 0; }
  friend bool operator<(const AffineExpr& a, const AffineExpr& b) { return compare(a, b) < 0; }

  /// "28+7a3+5a4", "-3", "a3-1/2a4".
  std::string to_string() const;
  static AffineExpr parse(std::string_view text);

 private:
  void trim();
  Rational constant_{0};
  std::vector<Rational> coeffs_;
};

}  // namespace wsg
