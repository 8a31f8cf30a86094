#include <doctest.h>

#include <cmath>
#include <functional>

#include "confspace/error.hpp"
#include "confspace/rng.hpp"
#include "confspace/roots.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> out;
  for (long c : coeffs) out.emplace_back(c);
  return Polynomial(std::move(out));
}

// Product of (t - r) over the given rationals.
Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p = p * Polynomial({Rational(-r), Rational(1)});
  return p;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_SUITE("roots") {
  TEST_CASE("sturm counts") {
    // Roots of 1 - 5t + 6t^2 - t^3: 0.30798, 0.64310, 5.04892.
    const Polynomial p = poly({1, -5, 6, -1});
    CHECK(sturm_count(p, 0, 1) == 2);
    CHECK(sturm_count(p, 0, 6) == 3);
    CHECK(sturm_count(p, Rational(1, 2), 1) == 1);
    CHECK(sturm_count(poly({-1, 0, 1}), -2, 2) == 2);
    CHECK(sturm_count(poly({1, 0, 1}), -10, 10) == 0);
    // Repeated roots count once.
    CHECK(sturm_count(poly({1, -2, 1}), 0, 2) == 1);
    CHECK(code_of([] { sturm_count(Polynomial(), 0, 1); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { sturm_count(poly({1, 1}), 1, 1); }) == ErrorCode::BadParameters);
    CHECK(code_of([] { sturm_count(poly({-1, 1}), 0, 1); }) == ErrorCode::EndpointRoot);
    CHECK(count_roots_closed(poly({-1, 1}), 0, 1) == 1);
  }

  TEST_CASE("cauchy bound dominates every root") {
    CHECK(cauchy_bound(poly({1, -5, 6, -1})) == 7);
    const Polynomial p = from_roots({Rational(-3), Rational(1, 2), Rational(4)});
    const Rational b = cauchy_bound(p);
    CHECK(b > 4);
    CHECK(sturm_count(p, -b, b) == 3);
  }

  TEST_CASE("first positive root, rational cases") {
    const auto r = first_positive_root(poly({1, -2}));
    REQUIRE(r);
    CHECK(r->is_rational());
    CHECK(r->lo() == Rational(1, 2));
    const auto r2 = first_positive_root(from_roots({Rational(-1), Rational(2, 7), Rational(5, 3)}));
    REQUIRE(r2);
    CHECK(r2->is_rational());
    CHECK(r2->lo() == Rational(2, 7));
    CHECK_FALSE(first_positive_root(poly({1, 1})));
    CHECK_FALSE(first_positive_root(poly({1, 0, 1})));
    CHECK(code_of([] { first_positive_root(poly({0, 1})); }) == ErrorCode::ZeroAtOrigin);
  }

  TEST_CASE("first positive root, irrational cases") {
    // 1 - 3t + t^2 has first positive root (3 - sqrt 5)/2.
    const auto r = first_positive_root(poly({1, -3, 1}));
    REQUIRE(r);
    CHECK_FALSE(r->is_rational());
    CHECK(r->hi() - r->lo() <= default_width() * cauchy_bound(poly({1, -3, 1})));
    const double expected = (3.0 - std::sqrt(5.0)) / 2.0;
    CHECK(r->lo().get_d() == doctest::Approx(expected).epsilon(1e-15));
    CHECK(r->witness().evaluate(r->lo()) * r->witness().evaluate(r->hi()) < 0);

    const auto p = first_positive_root(poly({1, -5, 6, -1}));
    REQUIRE(p);
    CHECK(p->lo().get_d() == doctest::Approx(0.307978528369904).epsilon(1e-14));
  }

  TEST_CASE("first positive root agrees with a grid scan") {
    SplitMix64 rng(21);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
      std::vector<Rational> c{Rational(1)};
      const int d = static_cast<int>(rng.between(1, 5));
      for (int k = 1; k <= d; ++k) c.push_back(make_rational(rng.between(-9, 9), rng.between(1, 3)));
      const Polynomial p(c);
      if (p.degree() < 1) continue;
      const auto root = first_positive_root(p);
      const auto cell = oracle::first_sign_change(p, 8.0L, 40000);
      if (!root) {
        CHECK(cell.first < 0);
        continue;
      }
      if (root->lo() > 7) continue;
      const Polynomial g = gcd(p, p.derivative());
      if (g.degree() >= 1 && root->sign_of(g) == 0) continue;
      // A double root gives no sign change on the grid; only compare when the scan sees one.
      if (cell.first < 0) continue;
      ++checked;
      CHECK(root->lo().get_d() >= static_cast<double>(cell.first) - 1e-9);
      CHECK(root->lo().get_d() <= static_cast<double>(cell.second) + 1e-9);
    }
    CHECK(checked > 50);
  }

  TEST_CASE("algebraic root validation") {
    CHECK_NOTHROW(AlgebraicRoot(poly({-2, 0, 1}), 1, 2));
    CHECK_THROWS_AS(AlgebraicRoot(poly({3}), 0, 1), Error);
    CHECK_THROWS_AS(AlgebraicRoot(poly({-2, 0, 1}), 2, 1), Error);
    CHECK_THROWS_AS(AlgebraicRoot(poly({-2, 0, 1}), 2, 3), Error);
    CHECK_THROWS_AS(AlgebraicRoot(poly({-2, 0, 1}), -2, 2), Error);
    CHECK_THROWS_AS(AlgebraicRoot(poly({1, -2, 1}), 0, 2), Error);
    CHECK_NOTHROW(AlgebraicRoot(poly({-1, 1}), 1, 1));
    CHECK_THROWS_AS(AlgebraicRoot(poly({-1, 1}), 2, 2), Error);
  }

  TEST_CASE("refinement keeps the root isolated") {
    AlgebraicRoot r(poly({-2, 0, 1}), 1, 2);
    r.refine_to(Rational(1, 1000000));
    CHECK(r.hi() - r.lo() <= Rational(1, 1000000));
    CHECK(r.lo() * r.lo() < 2);
    CHECK(r.hi() * r.hi() > 2);
  }

  TEST_CASE("sign of a polynomial at an algebraic number") {
    const AlgebraicRoot sqrt2(poly({-2, 0, 1}), 1, 2);
    CHECK(sqrt2.sign_of(poly({-2, 0, 1})) == 0);
    CHECK(sqrt2.sign_of(poly({-1, 1})) == 1);
    CHECK(sqrt2.sign_of(poly({-3, 2})) == -1);
    CHECK(sqrt2.sign_of(poly({-2, 0, 1}) * poly({5, 1})) == 0);
    CHECK(AlgebraicRoot::exact(Rational(1, 2)).sign_of(poly({1, -2})) == 0);
  }

  TEST_CASE("root comparison") {
    const AlgebraicRoot near = *first_positive_root(poly({1, -5, 6, -1}));  // ~0.308
    CHECK(compare_roots(near, AlgebraicRoot::exact(Rational(1, 2))) == Ordering::Less);
    CHECK(compare_roots(AlgebraicRoot::exact(Rational(1, 2)), near) == Ordering::Greater);
    // Same number, different witnesses.
    const AlgebraicRoot a(poly({-2, 0, 1}), 1, 2);
    const AlgebraicRoot b(poly({-2, 0, 1}) * poly({-3, 1}), Rational(13, 10), Rational(3, 2));
    CHECK(compare_roots(a, b) == Ordering::Equal);
    const AlgebraicRoot c(poly({-3, 0, 1}), 1, 2);  // sqrt 3
    CHECK(compare_roots(a, c) == Ordering::Less);
    CHECK(compare_roots(AlgebraicRoot::exact(3), AlgebraicRoot::exact(3)) == Ordering::Equal);
  }
}
