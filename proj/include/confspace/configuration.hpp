#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "confspace/vertex_set.hpp"

namespace confspace {

inline constexpr int kDefaultEnumerationCap = 24;

/// A finite vertex set with a downward-closed independence family, stored
/// through its nubs (minimal dependent sets). Immutable once built.
class Configuration {
 public:
  /// The trivial configuration: no vertices.
  Configuration() = default;

  /// Drops listed sets that contain another listed set, then sorts.
  /// Throws SingletonNub, VertexOutOfRange, TooManyVertices.
  static Configuration from_nubs(int n, std::vector<std::string> labels, const std::vector<VertexSet>& nubs);
  static Configuration from_nubs(int n, const std::vector<VertexSet>& nubs);

  /// Rebuilds the nubs of an explicitly listed independence family.
  /// Throws NotDownwardClosed or MissingSingleton naming the offending set.
  static Configuration from_independence_list(int n, std::vector<std::string> labels,
                                              const std::vector<VertexSet>& independent);
  static Configuration from_independence_list(int n, const std::vector<VertexSet>& independent);

  int size() const noexcept { return n_; }
  bool trivial() const noexcept { return n_ == 0; }
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  /// Index of a label, or -1.
  int index_of(const std::string& label) const;
  const std::vector<VertexSet>& nubs() const noexcept { return nubs_; }
  /// Nubs containing vertex v.
  const std::vector<VertexSet>& nubs_through(int v) const { return nubs_by_vertex_.at(static_cast<std::size_t>(v)); }

  bool is_independent(VertexSet x) const;

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.n_ == b.n_ && a.nubs_ == b.nubs_;
  }

 private:
  Configuration(int n, std::vector<std::string> labels, std::vector<VertexSet> nubs);

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<VertexSet> nubs_;
  std::vector<std::vector<VertexSet>> nubs_by_vertex_;
};

/// Labels "1", "2", ..., "n".
std::vector<std::string> numbered_labels(int n);

/// Calls visit(x) once per independent set; backtracking never extends a set
/// that already contains a nub. Throws TooLarge when n exceeds the cap.
void for_each_independent(const Configuration& c, const std::function<void(VertexSet)>& visit,
                          int cap = kDefaultEnumerationCap);
/// Independent sets ordered by size, then by bit pattern.
std::vector<VertexSet> enumerate_independence_sets(const Configuration& c, int cap = kDefaultEnumerationCap);

bool is_independent(const Configuration& c, VertexSet x);
const std::vector<VertexSet>& nubs_of(const Configuration& c);

/// x and y disjoint with independent union. Throws NotIndependent.
bool is_parallel(const Configuration& c, VertexSet x, VertexSet y);

/// The configuration relative to an independent anchor x, in two views:
/// original vertex indices, and a compacted standalone configuration.
struct RelativeView {
  VertexSet anchor;
  /// Vertices a outside the anchor with anchor + a independent.
  VertexSet vertices;
  /// Minimal y within `vertices` with anchor + y dependent (original indices).
  std::vector<VertexSet> relative_nubs;
  Configuration standalone;
  /// standalone vertex i corresponds to original vertex original_index[i].
  std::vector<int> original_index;

  /// Maps a set of standalone indices back to original indices.
  VertexSet to_original(VertexSet local) const;
  /// Maps a subset of `vertices` to standalone indices.
  VertexSet to_local(VertexSet original) const;
};

/// Throws NotIndependent.
RelativeView relative_configuration(const Configuration& c, VertexSet x);

/// Identity key over (n, sorted nubs); labels are ignored. Not an
/// isomorphism invariant.
std::string canonical_key(const Configuration& c);

}  // namespace confspace
