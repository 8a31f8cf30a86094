#include "confspace/datasets.hpp"

#include <array>
#include <charconv>

#include "confspace/error.hpp"
#include "confspace/structure.hpp"

namespace confspace {

namespace {

// Reads "<prefix>N" or "<prefix>N-K".
bool parse_params(std::string_view name, std::string_view prefix, std::vector<int>& out, std::size_t expected) {
  if (name.substr(0, prefix.size()) != prefix) return false;
  std::string_view rest = name.substr(prefix.size());
  out.clear();
  while (!rest.empty()) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (ec != std::errc() || ptr == rest.data()) return false;
    out.push_back(value);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty()) {
      if (rest.front() != '-') return false;
      rest.remove_prefix(1);
      if (rest.empty()) return false;
    }
  }
  return out.size() == expected;
}

VertexSet set_of(std::initializer_list<int> one_based) {
  VertexSet out;
  for (int v : one_based) out = out.with(v - 1);
  return out;
}

void require_positive(int n, std::string_view what) {
  if (n < 1) throw Error(ErrorCode::BadParameters, std::string(what) + " needs at least one vertex");
}

}  // namespace

std::vector<std::pair<int, int>> dodecahedron_edges() {
  // LCF notation [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2 on a Hamiltonian 20-cycle.
  constexpr std::array<int, 10> lcf{10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 20; ++i) {
    const int j = (i + 1) % 20;
    edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (int i = 0; i < 20; ++i) {
    const int j = ((i + lcf[static_cast<std::size_t>(i % 10)]) % 20 + 20) % 20;
    if (i < j) edges.emplace_back(i, j);
  }
  return edges;
}

Configuration path_configuration(int n) {
  require_positive(n, "path");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return from_dependence_graph(n, numbered_labels(n), edges);
}

Configuration cycle_configuration(int n) {
  if (n < 3) throw Error(ErrorCode::BadParameters, "cycle needs at least three vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return from_dependence_graph(n, numbered_labels(n), edges);
}

Configuration complete_configuration(int n) {
  require_positive(n, "complete");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return from_dependence_graph(n, numbered_labels(n), edges);
}

Configuration free_configuration(int n) {
  require_positive(n, "free");
  return Configuration::from_nubs(n, {});
}

Configuration builtin(std::string_view name) {
  if (name == "fig1-left") {
    return Configuration::from_nubs(5, {set_of({1, 2}), set_of({1, 4}), set_of({3, 5}), set_of({2, 4, 5})});
  }
  if (name == "fig1-right") return path_configuration(5);
  if (name == "dodecahedron") {
    // Commutation graph = dodecahedron, so the nubs are the non-adjacent pairs.
    std::vector<std::vector<bool>> adjacent(20, std::vector<bool>(20, false));
    for (const auto& [a, b] : dodecahedron_edges()) adjacent[a][b] = adjacent[b][a] = true;
    std::vector<std::pair<int, int>> dependent;
    for (int a = 0; a < 20; ++a) {
      for (int b = a + 1; b < 20; ++b) {
        if (!adjacent[a][b]) dependent.emplace_back(a, b);
      }
    }
    return from_dependence_graph(20, numbered_labels(20), dependent);
  }
  std::vector<int> p;
  if (parse_params(name, "star-", p, 2)) return star(p[0], p[1]);
  if (parse_params(name, "path-", p, 1)) return path_configuration(p[0]);
  if (parse_params(name, "cycle-", p, 1)) return cycle_configuration(p[0]);
  if (parse_params(name, "complete-", p, 1)) return complete_configuration(p[0]);
  if (parse_params(name, "free-", p, 1)) return free_configuration(p[0]);
  throw Error(ErrorCode::UnknownDataset, "unknown built-in '" + std::string(name) + "'");
}

std::vector<std::string> builtin_names() {
  return {"fig1-left", "fig1-right", "dodecahedron", "star-N-K", "path-N", "cycle-N", "complete-N", "free-N"};
}

Configuration random_configuration(int n, SplitMix64& rng) {
  if (n < 0 || n > 16) throw Error(ErrorCode::BadParameters, "random configurations take 0 <= n <= 16");
  std::vector<VertexSet> candidates;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const VertexSet x(mask);
    if (x.size() >= 2 && x.size() <= 4 && rng.chance(1, 4)) candidates.push_back(x);
  }
  return Configuration::from_nubs(n, candidates);
}

Configuration random_graph_configuration(int n, SplitMix64& rng, std::uint64_t num, std::uint64_t den) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::BadParameters, "vertex count out of range");
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.chance(num, den)) edges.emplace_back(a, b);
    }
  }
  return from_dependence_graph(n, numbered_labels(n), edges);
}

Valuation random_valuation(int n, SplitMix64& rng, int max_part) {
  std::vector<Rational> weights;
  for (int i = 0; i < n; ++i) {
    const auto p = rng.between(1, max_part);
    const auto q = rng.between(1, max_part);
    weights.push_back(make_rational(BigInt(static_cast<long>(p)), BigInt(static_cast<long>(q))));
  }
  return Valuation(std::move(weights));
}

Configuration disjoint_union(const Configuration& a, const Configuration& b) {
  const int n = a.size() + b.size();
  if (n > kMaxVertices) throw Error(ErrorCode::TooManyVertices, "disjoint union exceeds the vertex limit");
  std::vector<VertexSet> nubs(a.nubs().begin(), a.nubs().end());
  for (VertexSet d : b.nubs()) nubs.emplace_back(d.bits() << a.size());
  return Configuration::from_nubs(n, nubs);
}

Valuation concatenate(const Valuation& a, const Valuation& b) {
  std::vector<Rational> weights(a.weights().begin(), a.weights().end());
  weights.insert(weights.end(), b.weights().begin(), b.weights().end());
  return Valuation(std::move(weights));
}

}  // namespace confspace
