#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "confspace/configuration.hpp"
#include "confspace/polynomial.hpp"
#include "confspace/roots.hpp"
#include "confspace/valuation.hpp"

namespace confspace {

/// sum over independent x of (-1)^|x| f(x) t^|x|, by enumeration.
Polynomial mobius_polynomial(const Configuration& c, const Valuation& f, int cap = kDefaultEnumerationCap);

/// Write-once cache of Möbius polynomials keyed by standalone configuration
/// and weights. Concurrent lookups are safe; racing writers store equal values.
class MobiusCache {
 public:
  Polynomial get_or_compute(const Configuration& c, const Valuation& f, int cap);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Polynomial> table_;
};

/// All relative Möbius polynomials of a weighted configuration.
class MobiusFamily {
 public:
  MobiusFamily(Configuration c, Valuation f, int cap = kDefaultEnumerationCap);

  const Configuration& config() const noexcept { return config_; }
  const Valuation& valuation() const noexcept { return valuation_; }
  const std::vector<VertexSet>& independence_sets() const noexcept { return sets_; }

  /// mu = mu^{||empty}.
  const Polynomial& mobius() const;
  /// mu^{||x}. Throws NotIndependent.
  const Polynomial& relative(VertexSet x) const;
  /// H(x) = f(x) t^|x| mu^{||x}.
  Polynomial transform(VertexSet x) const;
  std::size_t distinct_relatives() const noexcept { return cache_->size(); }

 private:
  Configuration config_;
  Valuation valuation_;
  std::vector<VertexSet> sets_;
  std::map<VertexSet, Polynomial> table_;
  std::unique_ptr<MobiusCache> cache_;
};

/// Möbius polynomial of the relative configuration at x with restricted weights.
Polynomial relative_mobius(const Configuration& c, const Valuation& f, VertexSet x);
/// H(x) through the relative polynomial.
Polynomial mobius_transform(const Configuration& c, const Valuation& f, VertexSet x);
/// H(x) as the alternating sum over independent supersets y of x of
/// (-1)^(|y|-|x|) f(y) t^|y|.
Polynomial mobius_transform_by_sum(const Configuration& c, const Valuation& f, VertexSet x);

/// Checks F(x) = sum over independent y containing x of H(y) for every
/// independent x.
bool inversion_check(const Configuration& c, const Valuation& f);

/// mu' + sum_a f(a) mu^{||a}; the zero polynomial when the derivative
/// identity holds.
Polynomial derivative_identity_residual(const Configuration& c, const Valuation& f);
Polynomial derivative_identity_residual(const MobiusFamily& family);

struct CriticalRoot {
  AlgebraicRoot root;
  /// Independent sets whose relative polynomial vanishes first.
  std::vector<VertexSet> attained_at;
};

/// Smallest positive zero over all relative polynomials. Throws
/// TrivialConfiguration when there are no vertices.
CriticalRoot critical_root(const MobiusFamily& family);
CriticalRoot critical_root(const Configuration& c, const Valuation& f);

enum class ConfigType { TypeI, TypeII };

std::string_view to_string(ConfigType type) noexcept;

/// The rest mu(t0). Exact when t0 is rational or when it is certified zero;
/// otherwise a certified sign with an enclosure.
struct Rest {
  bool exact = false;
  Rational value;
  int sign = 0;
  Interval enclosure;
};

struct Classification {
  AlgebraicRoot critical_root;
  std::vector<VertexSet> attained_at;
  ConfigType type;
  Rest rest;
};

Classification classify(const MobiusFamily& family);
Classification classify(const Configuration& c, const Valuation& f);

/// The rest R(t) of the canonical space, which is mu itself.
Polynomial rest_polynomial(const Configuration& c, const Valuation& f);

}  // namespace confspace
