#include "wsg/affine.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace wsg {

int compare(const Rational& a, const Rational& b) {
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

namespace {

std::int64_t parse_int(std::string_view t, std::string_view whole) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("bad rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  bool neg = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    neg = t.front() == '-';
    t.remove_prefix(1);
  }
  auto slash = t.find('/');
  std::int64_t num = parse_int(t.substr(0, slash), text);
  std::int64_t den = 1;
  if (slash != std::string_view::npos) den = parse_int(t.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(neg ? -num : num, den);
}

AffineExpr::AffineExpr(Rational constant, std::vector<Rational> coeffs)
    : constant_(constant), coeffs_(std::move(coeffs)) {
  trim();
}

AffineExpr AffineExpr::symbol(int index) {
  AffineExpr e;
  e.set_coeff(index, Rational(1));
  return e;
}

Rational AffineExpr::coeff(int index) const {
  int i = index - 3;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

void AffineExpr::set_coeff(int index, Rational value) {
  if (index < 3) throw std::invalid_argument("alpha symbols start at index 3");
  std::size_t i = static_cast<std::size_t>(index - 3);
  if (coeffs_.size() <= i) coeffs_.resize(i + 1, Rational(0));
  coeffs_[i] = value;
  trim();
}

int AffineExpr::max_symbol() const { return static_cast<int>(coeffs_.size()) + 2; }

void AffineExpr::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
  constant_ += o.constant_;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

AffineExpr& AffineExpr::operator-=(const AffineExpr& o) {
  constant_ -= o.constant_;
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

AffineExpr& AffineExpr::operator*=(const Rational& k) {
  constant_ *= k;
  for (auto& c : coeffs_) c *= k;
  trim();
  return *this;
}

Rational AffineExpr::evaluate(const std::vector<Rational>& alphas) const {
  Rational v = constant_;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (i >= alphas.size())
      throw std::invalid_argument("no value for a" + std::to_string(i + 3));
    v += coeffs_[i] * alphas[i];
  }
  return v;
}

int compare(const AffineExpr& a, const AffineExpr& b) {
  if (int c = compare(a.constant_, b.constant_)) return c;
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
    Rational y = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
    if (int c = compare(x, y)) return c;
  }
  return 0;
}

std::string AffineExpr::to_string() const {
  std::string out;
  if (constant_ != 0 || is_constant()) out = wsg::to_string(constant_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (neg) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (c != 1) out += wsg::to_string(c);
    out += "a" + std::to_string(i + 3);
  }
  return out;
}

AffineExpr AffineExpr::parse(std::string_view text) {
  AffineExpr e;
  std::size_t i = 0;
  auto fail = [&] { throw std::invalid_argument("bad affine expression '" + std::string(text) + "'"); };
  bool any = false;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
      neg = text[i] == '-';
      ++i;
    } else if (any) {
      fail();
    }
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    Rational c(1);
    if (i > start) c = parse_rational(text.substr(start, i - start));
    if (neg) c = -c;
    if (i < text.size() && text[i] == '*') ++i;
    if (i < text.size() && text[i] == 'a') {
      ++i;
      std::size_t s2 = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == s2) fail();
      int idx = std::stoi(std::string(text.substr(s2, i - s2)));
      if (idx < 3) fail();
      e.set_coeff(idx, e.coeff(idx) + c);
    } else {
      if (i == start) fail();
      e.constant_ += c;
    }
    any = true;
  }
  if (!any) fail();
  return e;
}

}  // namespace wsg
