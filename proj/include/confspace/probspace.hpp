#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "confspace/configuration.hpp"
#include "confspace/error.hpp"
#include "confspace/mobius.hpp"
#include "confspace/rational.hpp"
#include "confspace/roots.hpp"
#include "confspace/valuation.hpp"

namespace confspace {

/// A word over vertices and their complements, each vertex occurring at most
/// once. Full when every vertex occurs.
struct SignedWord {
  VertexSet positives;
  VertexSet negatives;

  /// Throws BadParameters when the two parts overlap.
  SignedWord(VertexSet pos = {}, VertexSet neg = {});
  bool full(int n) const noexcept { return (positives | negatives) == VertexSet::range(n); }
  /// Does the full word with positive part y (over n vertices) extend this one?
  bool extended_by(VertexSet y) const noexcept { return positives.subset_of(y) && !negatives.intersects(y); }

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// Atoms of the free model over n events. A full word is identified by its
/// positive part.
struct AtomTable {
  int n = 0;
  std::map<VertexSet, Rational> atoms;
  /// Full words with negative mass; empty iff a realization exists.
  std::vector<SignedWord> negative_atoms;

  bool feasible() const noexcept { return negative_atoms.empty(); }
};

/// Largest n accepted by atoms_from_intersections (it stores 2^n values).
inline constexpr int kAtomTableCap = 20;

/// Atom masses from prescribed intersection probabilities q (one entry per
/// subset, q(empty) = 1): the mass of the full word with positive part y is
/// the alternating sum of q over supersets of y. Throws MissingEntry for a
/// partial q and TooLarge past kAtomTableCap.
AtomTable atoms_from_intersections(int n, const std::map<VertexSet, Rational>& q);

/// q(x) = t^|x| f(x) on independent sets, 0 on dependent ones.
std::map<VertexSet, Rational> canonical_intersections(const Configuration& c, const Valuation& f, const Rational& t);

Rational event_probability(const AtomTable& table, const SignedWord& w);

/// Finite space on the independence sets with masses H(x)[t]; the event of
/// vertex a holds the sets containing a.
struct ConfiguredSpace {
  Configuration config;
  Valuation valuation;
  Rational t;
  std::map<VertexSet, Rational> atoms;
};

class OutOfRangeError : public Error {
 public:
  OutOfRangeError(VertexSet witness, Rational value, const std::string& what)
      : Error(ErrorCode::OutOfRange, what), witness_(witness), value_(std::move(value)) {}

  /// An independent set whose atom would be negative.
  VertexSet witness() const noexcept { return witness_; }
  const Rational& value() const noexcept { return value_; }

 private:
  VertexSet witness_;
  Rational value_;
};

/// Throws OutOfRangeError when t < 0 or some H(x)[t] < 0.
ConfiguredSpace canonical_space(const MobiusFamily& family, const Rational& t);
ConfiguredSpace canonical_space(const Configuration& c, const Valuation& f, const Rational& t);

Rational event_probability(const ConfiguredSpace& space, const SignedWord& w);

struct RealizationReport {
  bool mass_ok = false;
  bool nonnegative_ok = false;
  bool marginals_ok = false;
  bool independence_ok = false;
  bool exclusivity_ok = false;
  bool covering = false;
  Rational rest;
  std::vector<std::string> violations;

  bool ok() const noexcept { return mass_ok && nonnegative_ok && marginals_ok && independence_ok && exclusivity_ok; }
};

/// Exact check of marginals t f(a), independence over every independent set,
/// exclusivity over the nubs, and the rest against mu(t).
RealizationReport verify_realization(const ConfiguredSpace& space);

/// t0, the right end of the probabilistic range [0, t0].
AlgebraicRoot probabilistic_range(const Configuration& c, const Valuation& f);

/// Multinomial draw of `count` atoms, deterministic in (seed, count).
std::map<VertexSet, std::uint64_t> sample(const ConfiguredSpace& space, std::uint64_t count, std::uint64_t seed);

}  // namespace confspace
