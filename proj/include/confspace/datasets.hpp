#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "confspace/configuration.hpp"
#include "confspace/rng.hpp"
#include "confspace/valuation.hpp"

namespace confspace {

/// Built-in configurations by name:
///   fig1-left, fig1-right, dodecahedron,
///   star-N-K, path-N, cycle-N, complete-N, free-N.
/// Throws UnknownDataset.
Configuration builtin(std::string_view name);
std::vector<std::string> builtin_names();

/// Undirected edges of the dodecahedral graph on vertices 0..19.
std::vector<std::pair<int, int>> dodecahedron_edges();

/// Path 1 - 2 - ... - n as a dependence graph.
Configuration path_configuration(int n);
/// Cycle on n >= 3 vertices as a dependence graph.
Configuration cycle_configuration(int n);
/// Every pair of vertices is a nub.
Configuration complete_configuration(int n);
/// No nubs.
Configuration free_configuration(int n);

/// Each subset of size 2..4 becomes a candidate nub with probability 1/4;
/// the candidates are reduced to an antichain.
Configuration random_configuration(int n, SplitMix64& rng);
/// Each pair becomes a nub with probability num/den.
Configuration random_graph_configuration(int n, SplitMix64& rng, std::uint64_t num = 1, std::uint64_t den = 2);
/// Weights p/q with 1 <= p, q <= max_part.
Valuation random_valuation(int n, SplitMix64& rng, int max_part = 8);

/// Vertices of b follow those of a, with no nub across.
Configuration disjoint_union(const Configuration& a, const Configuration& b);
Valuation concatenate(const Valuation& a, const Valuation& b);

}  // namespace confspace
