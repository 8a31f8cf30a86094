#pragma once

#include <optional>
#include <vector>

#include "confspace/configuration.hpp"
#include "confspace/rational.hpp"

namespace confspace {

/// Positive per-vertex weights, extended multiplicatively: f(x) is the
/// product of the weights of x, and f(empty) = 1.
class Valuation {
 public:
  Valuation() = default;
  /// Throws NonPositiveWeight.
  explicit Valuation(std::vector<Rational> weights);
  static Valuation uniform(int n);

  int size() const noexcept { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const noexcept { return weights_; }
  const Rational& weight(int v) const { return weights_.at(static_cast<std::size_t>(v)); }
  bool is_uniform() const;

  /// f(x) = product of member weights.
  Rational operator()(VertexSet x) const;

  /// The valuation of a relative view's standalone configuration.
  Valuation restricted(const RelativeView& view) const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<Rational> weights_;
};

/// Uniform when weights is empty; otherwise checks the count against c.
Valuation valuation_of(const Configuration& c, const std::vector<Rational>& weights = {});

}  // namespace confspace
