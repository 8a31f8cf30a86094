#pragma once

// Hand-rolled generators for the property tests.

#include <vector>

#include "confspace/configuration.hpp"
#include "confspace/rng.hpp"
#include "confspace/valuation.hpp"

namespace gen {

using confspace::Configuration;
using confspace::Rational;
using confspace::SplitMix64;
using confspace::Valuation;
using confspace::VertexSet;

/// Nubs drawn as random subsets of size 2..max_nub_size; both very sparse
/// and very dense families come up.
inline Configuration configuration(SplitMix64& rng, int max_n, int max_nub_size = 4) {
  const int n = static_cast<int>(rng.between(0, max_n));
  const int nub_count = n < 2 ? 0 : static_cast<int>(rng.between(0, 2 * n));
  std::vector<VertexSet> nubs;
  for (int i = 0; i < nub_count; ++i) {
    const int size = static_cast<int>(rng.between(2, std::min(n, max_nub_size)));
    VertexSet d;
    while (d.size() < size) d = d.with(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
    nubs.push_back(d);
  }
  return Configuration::from_nubs(n, nubs);
}

inline Configuration nonempty_configuration(SplitMix64& rng, int max_n, int max_nub_size = 4) {
  while (true) {
    Configuration c = configuration(rng, max_n, max_nub_size);
    if (c.size() > 0) return c;
  }
}

inline Configuration graph(SplitMix64& rng, int max_n) { return nonempty_configuration(rng, max_n, 2); }

inline Valuation valuation(SplitMix64& rng, int n) {
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) {
    w.emplace_back(static_cast<long>(rng.between(1, 9)), static_cast<unsigned long>(rng.between(1, 9)));
    w.back().canonicalize();
  }
  return Valuation(std::move(w));
}

/// A random independent set of c (greedy over a random vertex order).
inline VertexSet independent_set(SplitMix64& rng, const Configuration& c) {
  VertexSet x;
  for (int v = 0; v < c.size(); ++v) {
    if (rng.chance(1, 2) && c.is_independent(x.with(v))) x = x.with(v);
  }
  return x;
}

}  // namespace gen
