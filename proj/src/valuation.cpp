#include "confspace/valuation.hpp"

#include <algorithm>

#include "confspace/error.hpp"

namespace confspace {

Valuation::Valuation(std::vector<Rational> weights) : weights_(std::move(weights)) {
  for (std::size_t v = 0; v < weights_.size(); ++v) {
    if (weights_[v] <= 0) {
      throw Error(ErrorCode::NonPositiveWeight,
                  "weight of vertex " + std::to_string(v) + " is " + to_string(weights_[v]));
    }
  }
}

Valuation Valuation::uniform(int n) { return Valuation(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))); }

bool Valuation::is_uniform() const {
  return std::all_of(weights_.begin(), weights_.end(), [](const Rational& w) { return w == 1; });
}

Rational Valuation::operator()(VertexSet x) const {
  Rational product = 1;
  x.for_each([&](int v) { product *= weight(v); });
  return product;
}

Valuation Valuation::restricted(const RelativeView& view) const {
  std::vector<Rational> out;
  out.reserve(view.original_index.size());
  for (int v : view.original_index) out.push_back(weight(v));
  return Valuation(std::move(out));
}

Valuation valuation_of(const Configuration& c, const std::vector<Rational>& weights) {
  if (weights.empty()) return Valuation::uniform(c.size());
  if (static_cast<int>(weights.size()) != c.size()) {
    throw Error(ErrorCode::ValidationError, "expected one weight per vertex");
  }
  return Valuation(weights);
}

}  // namespace confspace
