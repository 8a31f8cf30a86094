#include "confspace/roots.hpp"

#include <utility>

#include "confspace/error.hpp"

namespace confspace {

namespace {

Polynomial scaled_positive(const Polynomial& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / abs(p.leading()));
}

int sign_at(const Polynomial& p, const Rational& x) { return sign(p.evaluate(x)); }

BigInt primitive_leading(const Polynomial& p) {
  BigInt den_lcm = 1;
  BigInt num_gcd = 0;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : p.coefficients()) {
    const BigInt scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  const Rational& lc = p.leading();
  BigInt lead = lc.get_num() * (den_lcm / lc.get_den()) / num_gcd;
  return abs(lead);
}

}  // namespace

Rational default_width() {
  Rational w(1);
  mpq_div_2exp(w.get_mpq_t(), w.get_mpq_t(), 64);
  return w;
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> chain;
  const Polynomial q = squarefree_part(p);
  if (q.is_zero()) return chain;
  chain.push_back(q);
  Polynomial next = scaled_positive(q.derivative());
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    next = scaled_positive(-divmod(a, b).second);
  }
  return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  int variations = 0;
  int previous = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++variations;
    previous = s;
  }
  return variations;
}

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::BadParameters, "sturm_count of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::BadParameters, "sturm_count needs lo < hi");
  if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0) {
    throw Error(ErrorCode::EndpointRoot, "polynomial vanishes at an interval endpoint");
  }
  const auto chain = sturm_sequence(p);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int count_roots_closed(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::BadParameters, "root count of the zero polynomial");
  if (lo > hi) return 0;
  const int at_lo = p.evaluate(lo) == 0 ? 1 : 0;
  if (lo == hi) return at_lo;
  // V(a) - V(b) counts the roots in (a, b] for a squarefree chain, even when a or b is a root.
  const auto chain = sturm_sequence(p);
  return at_lo + sign_variations(chain, lo) - sign_variations(chain, hi);
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.degree() < 1) return Rational(1);
  const Rational lc = abs(p.leading());
  Rational best = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Rational ratio = abs(c[k]) / lc;
    if (ratio > best) best = ratio;
  }
  return Rational(1 + best);
}

AlgebraicRoot::AlgebraicRoot(Polynomial witness, Rational lo, Rational hi)
    : witness_(std::move(witness)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (witness_.degree() < 1) throw Error(ErrorCode::ValidationError, "algebraic root witness must be nonconstant");
  if (gcd(witness_, witness_.derivative()).degree() > 0) {
    throw Error(ErrorCode::ValidationError, "algebraic root witness must be squarefree");
  }
  if (lo_ > hi_) throw Error(ErrorCode::ValidationError, "algebraic root interval has lo > hi");
  if (lo_ == hi_) {
    if (witness_.evaluate(lo_) != 0) throw Error(ErrorCode::ValidationError, "witness does not vanish at the exact root");
    return;
  }
  sign_lo_ = sign_at(witness_, lo_);
  const int sign_hi = sign_at(witness_, hi_);
  if (sign_lo_ == 0 || sign_hi == 0 || sign_lo_ == sign_hi) {
    throw Error(ErrorCode::ValidationError, "witness must change sign strictly inside the interval");
  }
  if (sturm_count(witness_, lo_, hi_) != 1) {
    throw Error(ErrorCode::ValidationError, "interval does not isolate a single root");
  }
}

AlgebraicRoot AlgebraicRoot::exact(const Rational& value) {
  AlgebraicRoot r;
  r.witness_ = Polynomial{Rational(-value), Rational(1)};
  r.lo_ = value;
  r.hi_ = value;
  return r;
}

void AlgebraicRoot::bisect() {
  if (is_rational()) return;
  Rational mid = (lo_ + hi_) / 2;
  const int s = sign_at(witness_, mid);
  if (s == 0) {
    lo_ = mid;
    hi_ = std::move(mid);
  } else if (s == sign_lo_) {
    lo_ = std::move(mid);
  } else {
    hi_ = std::move(mid);
  }
}

void AlgebraicRoot::refine_to(const Rational& width) {
  while (!is_rational() && hi_ - lo_ > width) bisect();
}

int AlgebraicRoot::sign_of(const Polynomial& p) const {
  if (p.is_zero()) return 0;
  if (is_rational()) return sign_at(p, lo_);
  const Polynomial g = gcd(witness_, p);
  if (g.degree() >= 1 && count_roots_closed(g, lo_, hi_) >= 1) return 0;
  AlgebraicRoot copy = *this;
  while (true) {
    if (copy.is_rational()) return sign_at(p, copy.lo_);
    const Interval e = evaluate_enclosure(p, copy.interval());
    if (e.lo > 0) return 1;
    if (e.hi < 0) return -1;
    copy.bisect();
  }
}

std::optional<AlgebraicRoot> first_positive_root(const Polynomial& p) {
  if (p.is_zero() || p.evaluate(Rational(0)) == 0) {
    throw Error(ErrorCode::ZeroAtOrigin, "first_positive_root needs p(0) != 0");
  }
  const Polynomial q = squarefree_part(p);
  if (q.degree() < 1) return std::nullopt;
  const auto chain = sturm_sequence(q);
  const Rational bound = cauchy_bound(q);
  Rational lo = 0;
  Rational hi = bound;
  if (sign_variations(chain, lo) - sign_variations(chain, hi) == 0) return std::nullopt;

  const Rational report_width = default_width() * (bound > 1 ? bound : Rational(1));
  // Two distinct rationals whose denominators divide the primitive leading
  // coefficient a_n are at least 1/a_n^2 apart, so below that width the
  // simplest rational in the interval is the only rational-root candidate.
  const BigInt an = primitive_leading(q);
  const Rational detect_width = make_rational(1, 2 * an * an);
  const Rational width = report_width < detect_width ? report_width : detect_width;

  while (true) {
    const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (hi - lo <= width && count == 1 && sign_at(q, hi) != 0) break;
    Rational mid = (lo + hi) / 2;
    const int at_mid = sign_variations(chain, mid);
    const int below = sign_variations(chain, lo) - at_mid;  // roots in (lo, mid]
    if (sign_at(q, mid) == 0) {
      if (below == 1) return AlgebraicRoot::exact(mid);
      hi = std::move(mid);
    } else if (below >= 1) {
      hi = std::move(mid);
    } else {
      lo = std::move(mid);
    }
  }

  const Rational candidate = simplest_between(lo, hi);
  if (q.evaluate(candidate) == 0) return AlgebraicRoot::exact(candidate);
  return AlgebraicRoot(q, lo, hi);
}

Ordering compare_roots(AlgebraicRoot a, AlgebraicRoot b) {
  bool equality_checked = false;
  while (true) {
    if (a.hi() < b.lo()) return Ordering::Less;
    if (b.hi() < a.lo()) return Ordering::Greater;
    if (a.is_rational() && b.is_rational()) return Ordering::Equal;  // overlapping points coincide
    if (!equality_checked) {
      // Both numbers lie in the overlap; they coincide iff the gcd of the
      // witnesses has a root there.
      const Rational lo = a.lo() > b.lo() ? a.lo() : b.lo();
      const Rational hi = a.hi() < b.hi() ? a.hi() : b.hi();
      const Polynomial g = gcd(a.witness(), b.witness());
      if (g.degree() >= 1 && count_roots_closed(g, lo, hi) >= 1) return Ordering::Equal;
      equality_checked = true;
    }
    a.bisect();
    b.bisect();
  }
}

}  // namespace confspace
