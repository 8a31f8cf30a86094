#pragma once

#include <optional>
#include <vector>

#include "confspace/polynomial.hpp"

namespace confspace {

/// A real algebraic number: the unique root of a squarefree witness in
/// [lo, hi]. When lo == hi the number is the rational lo and the witness
/// vanishes there; otherwise the witness is nonzero at both ends and changes
/// sign across the interval.
class AlgebraicRoot {
 public:
  /// Validates the invariant; throws ValidationError when it does not hold.
  AlgebraicRoot(Polynomial witness, Rational lo, Rational hi);
  static AlgebraicRoot exact(const Rational& value);

  const Polynomial& witness() const noexcept { return witness_; }
  const Rational& lo() const noexcept { return lo_; }
  const Rational& hi() const noexcept { return hi_; }
  bool is_rational() const noexcept { return lo_ == hi_; }
  Interval interval() const { return {lo_, hi_}; }

  /// Halves the isolating interval (or pins the root when the midpoint hits it).
  void bisect();
  /// Bisects until hi - lo <= width (no-op for rational roots).
  void refine_to(const Rational& width);

  /// Sign of p at this number. Exact: uses gcd for the zero test.
  int sign_of(const Polynomial& p) const;

 private:
  AlgebraicRoot() = default;
  Polynomial witness_;
  Rational lo_;
  Rational hi_;
  int sign_lo_ = 0;
};

enum class Ordering { Less, Equal, Greater };

/// Sturm chain of the squarefree part of p.
std::vector<Polynomial> sturm_sequence(const Polynomial& p);
/// Sign variations of a Sturm chain at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Distinct real roots of p in (lo, hi]. Requires p nonzero, lo < hi, and
/// p(lo), p(hi) nonzero (EndpointRoot otherwise).
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);
/// Distinct real roots in the closed interval [lo, hi]; no endpoint restriction.
int count_roots_closed(const Polynomial& p, const Rational& lo, const Rational& hi);

/// 1 + max |c_i / c_n|.
Rational cauchy_bound(const Polynomial& p);

/// Smallest root in (0, inf), or nullopt. Throws ZeroAtOrigin if p(0) == 0.
/// Rational roots come back exact; irrational ones are isolated to width
/// <= 2^-64 * max(1, cauchy bound).
std::optional<AlgebraicRoot> first_positive_root(const Polynomial& p);

/// Exact comparison by interval refinement, with a gcd test for equality.
Ordering compare_roots(AlgebraicRoot a, AlgebraicRoot b);

/// Default reporting width, 2^-64.
Rational default_width();

}  // namespace confspace
