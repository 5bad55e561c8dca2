#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsg/frame.hpp"
#include "wsg/graph.hpp"
#include "wsg/polynomial.hpp"

namespace wsg {

/// Symbolic alphas when empty, otherwise the values of a3..an.
struct AlphaMode {
  std::optional<std::vector<Rational>> values;
  static AlphaMode symbolic() { return {}; }
  static AlphaMode fixed(std::vector<Rational> v) { return {std::move(v)}; }
};

/// Polynomial in x, one beta per edge, and per-state count variables.
class MultivariateForm {
 public:
  struct Key {
    std::vector<int> betas;  // sorted edge ids
    std::vector<int> exps;   // x first, then vars()
    auto operator<=>(const Key&) const = default;
  };

  MultivariateForm() = default;
  explicit MultivariateForm(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<Key, std::int64_t>& terms() const { return terms_; }
  void add(const Key& k, std::int64_t c);
  MultivariateForm& operator+=(const MultivariateForm& o);
  bool operator==(const MultivariateForm& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
  /// Multiplies by x * beta_e.
  MultivariateForm times_x_beta(int edge_id) const;
  std::string to_text() const;

 private:
  std::vector<std::string> vars_;
  std::map<Key, std::int64_t> terms_;
};

enum class MultivariateLayout {
  General,  // z2..zn internal, zb3..zbn external, y0..yn boundary bubbles
  Rank3,    // z1 = F_int, z2 = B3_int, z3 = B3_ext, s, w, q, t
};

/// z exponent (n-1)(n+2)/2 k - gamma for one state; zero at rank 1.
AffineExpr z_exponent(int rank, const StateCounts& c);

Polynomial invariant(const StrandedGraph& g, const AlphaMode& alpha = AlphaMode::symbolic(),
                     std::optional<int> budget = std::nullopt);
Polynomial extended(const StrandedGraph& g, const AlphaMode& alpha = AlphaMode::symbolic(),
                    std::optional<int> budget = std::nullopt);
MultivariateForm multivariate(const StrandedGraph& g, MultivariateLayout layout = MultivariateLayout::General,
                              std::optional<int> budget = std::nullopt);

struct AllForms {
  Polynomial invariant;
  Polynomial extended;
  MultivariateForm multivariate;
};

/// One enumeration feeding the invariant, extended and general multivariate forms.
AllForms all_forms(const StrandedGraph& g, std::optional<int> budget = std::nullopt);

enum class Target { Tutte, BR };

/// Tutte: rank 1, z=s=w=q=t=1, expanded in x, y.
/// BR: rank 2, s=z^-1 and w=q=t=1, in (x-1), (y-1), z.
Polynomial specialize(const Polynomial& p, Target target);

}  // namespace wsg
