#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "confspace/configuration.hpp"
#include "confspace/mobius.hpp"
#include "confspace/polynomial.hpp"
#include "confspace/valuation.hpp"

namespace confspace {

struct Component {
  Configuration config;
  /// Component vertex i is original vertex original_index[i].
  std::vector<int> original_index;

  VertexSet original_vertices() const;
};

/// Connected components of the nub hypergraph, ordered by smallest vertex.
struct Decomposition {
  std::vector<Component> components;
};

Decomposition components(const Configuration& c);
/// Exactly one component (so the trivial configuration is not irreducible).
bool is_irreducible(const Configuration& c);
/// Every nub is a pair (vacuously true without nubs).
bool is_right_angled(const Configuration& c);

/// Weights of the component's vertices.
Valuation restrict_valuation(const Valuation& f, const Component& component);

/// Nubs = edges of the dependence graph. Throws SelfLoop, VertexOutOfRange.
Configuration from_dependence_graph(int n, std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& edges);

/// S_{n,k}: every set of at most k of the n vertices is independent.
/// Throws BadParameters unless 1 <= k <= n, TooLarge past the enumeration cap.
Configuration star(int n, int k);

/// Transfer table of the Cartier-Foata normal form over the nonempty
/// commuting cliques (the nonempty independent sets).
struct CliqueTransfer {
  std::vector<VertexSet> cliques;
  /// follows[i][j]: clique j may follow clique i, i.e. every vertex of j is
  /// equal or dependent to some vertex of i.
  std::vector<std::vector<bool>> follows;
};

/// Throws NotRightAngled.
CliqueTransfer clique_transfer(const Configuration& c);

/// Generating series of the trace monoid, as the inverse of mu. Throws
/// NotRightAngled; a negative coefficient raises Internal.
Series trace_series(const Configuration& c, const Valuation& f, std::size_t order);

/// Number of traces of the given length, by dynamic programming over
/// Cartier-Foata normal forms.
BigInt trace_count_cf(const Configuration& c, std::size_t length);
/// Weighted variant: each trace contributes the product of its letter weights.
Rational trace_weight_cf(const Configuration& c, const Valuation& f, std::size_t length);

struct RightAngledReport {
  bool type_one = false;
  bool irreducible = false;
  /// Set for irreducible configurations: t0 is a simple root of mu.
  std::optional<bool> simple_root;
  /// Set for irreducible configurations: mu^{||x}(t0) > 0 for all x != empty.
  std::optional<bool> relatives_positive;
  /// mu^{||x}(t) <= mu^{||x+a}(t) at sampled rationals t in (0, t0].
  bool monotone = false;
  std::size_t monotone_checks = 0;

  bool ok() const noexcept {
    return type_one && monotone && simple_root.value_or(true) && relatives_positive.value_or(true);
  }
};

/// Throws NotRightAngled.
RightAngledReport right_angled_properties(const Configuration& c, const Valuation& f,
                                          int cap = kDefaultEnumerationCap);

struct SymmetricCounts {
  /// counts[j]: independent sets of size j, for j = 0..K (K the largest size).
  std::vector<BigInt> counts;
  /// eta[j]: the common size of V^{||x} over |x| = j; stops at the first
  /// level where the size is not constant.
  std::vector<BigInt> eta;
  /// First level without a common eta, if any.
  std::optional<int> undefined_level;
  /// N_k * k! == eta_0 ... eta_{k-1} for k = 0..K+1.
  bool formula_ok = false;
  /// mu == sum_k (-1)^k eta_0 ... eta_{k-1} t^k / k!.
  bool coefficient_form_ok = false;
};

SymmetricCounts symmetric_counts(const Configuration& c, int cap = kDefaultEnumerationCap);

}  // namespace confspace
