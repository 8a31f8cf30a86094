#include <doctest.h>

#include <algorithm>

#include "confspace/datasets.hpp"
#include "confspace/mobius.hpp"
#include "confspace/probspace.hpp"
#include "confspace/structure.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

Polynomial random_poly(SplitMix64& rng, int max_degree) {
  std::vector<Rational> c;
  const int d = static_cast<int>(rng.between(0, max_degree));
  for (int i = 0; i <= d; ++i) c.push_back(make_rational(rng.between(-9, 9), rng.between(1, 4)));
  return Polynomial(std::move(c));
}

// A rational just above t0 with no zero of any relative polynomial in (t0, t'].
Rational just_above(const MobiusFamily& fam, AlgebraicRoot t0) {
  t0.refine_to(default_width());
  const Rational lower = t0.is_rational() ? t0.lo() : t0.hi();
  Rational upper = 2 * t0.lo();
  if (upper <= lower) upper = lower + t0.lo();
  for (VertexSet x : fam.independence_sets()) {
    const Polynomial& p = fam.relative(x);
    if (p.degree() < 1) continue;
    while (true) {
      int inside = count_roots_closed(p, lower, upper);
      if (p.evaluate(lower) == 0) --inside;
      if (inside == 0) break;
      upper = (lower + upper) / 2;
    }
  }
  return (lower + upper) / 2;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("independence list round trip") {
    SplitMix64 rng(71);
    for (int i = 0; i < 100; ++i) {
      const Configuration c = gen::configuration(rng, 10);
      const Configuration back = Configuration::from_independence_list(c.size(), enumerate_independence_sets(c));
      CHECK(back.nubs() == c.nubs());
    }
  }

  TEST_CASE("membership and downward closure") {
    SplitMix64 rng(72);
    for (int i = 0; i < 60; ++i) {
      const Configuration c = gen::configuration(rng, 10);
      const auto sets = enumerate_independence_sets(c);
      std::vector<bool> member(std::size_t{1} << c.size(), false);
      for (VertexSet x : sets) member[x.bits()] = true;
      for (std::uint64_t m = 0; m < member.size(); ++m) {
        CHECK(c.is_independent(VertexSet(m)) == member[m]);
        if (!member[m]) continue;
        for (int v = 0; v < c.size(); ++v) {
          if ((m >> v) & 1U) CHECK(member[m & ~(std::uint64_t{1} << v)]);
        }
      }
    }
  }

  TEST_CASE("subsets of independent sets through the relative configuration") {
    SplitMix64 rng(73);
    for (int i = 0; i < 60; ++i) {
      const Configuration c = gen::nonempty_configuration(rng, 8);
      const auto sets = enumerate_independence_sets(c);
      for (int k = 0; k < 5; ++k) {
        const VertexSet x = sets[rng.below(sets.size())];
        const RelativeView view = relative_configuration(c, x);
        for (VertexSet y : sets) {
          const VertexSet z = y - x;
          const bool in_relative = z.subset_of(view.vertices) && view.standalone.is_independent(view.to_local(z));
          // x <= y iff y = x + z for z independent in the relative configuration.
          if (x.subset_of(y)) CHECK(in_relative);
        }
        for (VertexSet z : enumerate_independence_sets(view.standalone)) {
          CHECK(c.is_independent(x | view.to_original(z)));
        }
      }
    }
  }

  TEST_CASE("derivative is linear") {
    SplitMix64 rng(74);
    for (int i = 0; i < 100; ++i) {
      const Polynomial p = random_poly(rng, 6);
      const Polynomial q = random_poly(rng, 6);
      CHECK((p + q).derivative() == p.derivative() + q.derivative());
    }
  }

  TEST_CASE("first positive root is the first") {
    SplitMix64 rng(75);
    for (int i = 0; i < 150; ++i) {
      Polynomial p = random_poly(rng, 6);
      if (p[0] == 0 || p.degree() < 1) continue;
      const auto r = first_positive_root(p);
      if (!r) {
        CHECK(count_roots_closed(p, 0, cauchy_bound(p)) == 0);
        continue;
      }
      if (r->is_rational()) {
        CHECK(p.evaluate(r->lo()) == 0);
        CHECK(count_roots_closed(p, 0, r->lo()) == 1);
      } else {
        CHECK(sturm_count(p, 0, r->lo()) == 0);
        CHECK(sign(r->witness().evaluate(r->lo())) * sign(r->witness().evaluate(r->hi())) < 0);
      }
    }
  }

  TEST_CASE("root comparison is a total order consistent with intervals") {
    SplitMix64 rng(76);
    std::vector<AlgebraicRoot> roots;
    while (roots.size() < 30) {
      std::vector<Rational> c{Rational(1)};
      for (int k = 0; k < 3; ++k) c.push_back(make_rational(rng.between(-6, 6), rng.between(1, 3)));
      if (auto r = first_positive_root(Polynomial(c))) roots.push_back(*r);
    }
    roots.push_back(AlgebraicRoot::exact(Rational(1, 2)));
    for (const auto& a : roots) {
      for (const auto& b : roots) {
        const Ordering ab = compare_roots(a, b);
        const Ordering ba = compare_roots(b, a);
        CHECK((ab == Ordering::Equal) == (ba == Ordering::Equal));
        CHECK((ab == Ordering::Less) == (ba == Ordering::Greater));
        if (a.hi() < b.lo()) CHECK(ab == Ordering::Less);
        if (b.hi() < a.lo()) CHECK(ab == Ordering::Greater);
      }
    }
    std::vector<AlgebraicRoot> sorted = roots;
    std::sort(sorted.begin(), sorted.end(),
              [](const AlgebraicRoot& a, const AlgebraicRoot& b) { return compare_roots(a, b) == Ordering::Less; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) CHECK(compare_roots(sorted[i], sorted[i + 1]) != Ordering::Greater);
  }

  TEST_CASE("range soundness and sharpness") {
    SplitMix64 rng(77);
    for (int i = 0; i < 60; ++i) {
      const Configuration c = gen::nonempty_configuration(rng, 8);
      const Valuation f = gen::valuation(rng, c.size());
      const MobiusFamily fam(c, f);
      const AlgebraicRoot t0 = critical_root(fam).root;
      for (int k = 1; k <= 16; ++k) {
        const Rational t = t0.lo() * Rational(k, 17);
        for (VertexSet x : fam.independence_sets()) CHECK(fam.relative(x).evaluate(t) >= 0);
      }
      const Rational above = just_above(fam, t0);
      bool negative = false;
      for (VertexSet x : fam.independence_sets()) negative = negative || fam.relative(x).evaluate(above) < 0;
      CHECK(negative);
    }
  }

  TEST_CASE("the rest decreases on the range") {
    SplitMix64 rng(78);
    for (int i = 0; i < 60; ++i) {
      const Configuration c = gen::nonempty_configuration(rng, 8);
      const Valuation f = gen::valuation(rng, c.size());
      const Polynomial mu = mobius_polynomial(c, f);
      const Rational t0 = critical_root(c, f).root.lo();
      Rational prev = mu.evaluate(0);
      for (int k = 1; k <= 16; ++k) {
        const Rational cur = mu.evaluate(t0 * Rational(k, 17));
        CHECK(cur < prev);
        prev = cur;
      }
    }
  }

  TEST_CASE("relative polynomials of right-angled configurations grow along inclusion") {
    SplitMix64 rng(79);
    for (int i = 0; i < 40; ++i) {
      const Configuration c = gen::graph(rng, 7);
      if (c.size() == 0) continue;
      const Valuation f = gen::valuation(rng, c.size());
      const MobiusFamily fam(c, f);
      const Rational t0 = critical_root(fam).root.lo();
      for (VertexSet x : fam.independence_sets()) {
        for (int a = 0; a < c.size(); ++a) {
          if (x.contains(a) || !c.is_independent(x.with(a))) continue;
          for (int k = 1; k <= 4; ++k) {
            const Rational t = t0 * Rational(k, 4);
            CHECK(fam.relative(x).evaluate(t) <= fam.relative(x.with(a)).evaluate(t));
          }
        }
      }
    }
  }

  TEST_CASE("decomposition product") {
    SplitMix64 rng(80);
    for (int i = 0; i < 80; ++i) {
      const Configuration c = gen::configuration(rng, 10, 3);
      const Valuation f = gen::valuation(rng, c.size());
      Polynomial product = Polynomial::constant(1);
      int total = 0;
      for (const Component& comp : components(c).components) {
        product = product * mobius_polynomial(comp.config, restrict_valuation(f, comp));
        total += comp.config.size();
        CHECK(is_irreducible(comp.config));
      }
      CHECK(total == c.size());
      CHECK(product == mobius_polynomial(c, f));
    }
  }

  TEST_CASE("pair nubs iff pairwise independence suffices") {
    SplitMix64 rng(81);
    for (int i = 0; i < 120; ++i) {
      const Configuration c = gen::configuration(rng, 7, 3);
      bool pairwise_enough = true;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.size()); ++m) {
        bool pairs_ok = true;
        for (int a = 0; a < c.size() && pairs_ok; ++a) {
          for (int b = a + 1; b < c.size() && pairs_ok; ++b) {
            const std::uint64_t pair = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            if ((m & pair) == pair) pairs_ok = oracle::independent(c, pair);
          }
        }
        if (pairs_ok && !oracle::independent(c, m)) pairwise_enough = false;
      }
      CHECK(is_right_angled(c) == pairwise_enough);
    }
  }

  TEST_CASE("relative configurations of right-angled ones are right-angled") {
    SplitMix64 rng(82);
    for (int i = 0; i < 60; ++i) {
      const Configuration c = gen::graph(rng, 8);
      for (VertexSet x : enumerate_independence_sets(c)) CHECK(is_right_angled(relative_configuration(c, x).standalone));
    }
  }

  TEST_CASE("trace series against cartier-foata on random graphs") {
    SplitMix64 rng(83);
    for (int i = 0; i < 20; ++i) {
      const Configuration c = gen::graph(rng, 7);
      const Series s = trace_series(c, Valuation::uniform(c.size()), 8);
      for (std::size_t len = 0; len <= 8; ++len) CHECK(s.coefficients[len] == Rational(trace_count_cf(c, len)));
    }
  }

  TEST_CASE("covering iff rest zero iff type I at rational t0") {
    SplitMix64 rng(84);
    int seen = 0;
    for (int i = 0; i < 200 && seen < 40; ++i) {
      const Configuration c = gen::nonempty_configuration(rng, 7);
      const Valuation f = Valuation::uniform(c.size());
      const MobiusFamily fam(c, f);
      const Classification cls = classify(fam);
      if (!cls.critical_root.is_rational()) continue;
      ++seen;
      const RealizationReport r = verify_realization(canonical_space(fam, cls.critical_root.lo()));
      CHECK(r.ok());
      CHECK(r.covering == (r.rest == 0));
      CHECK(r.covering == (cls.type == ConfigType::TypeI));
    }
    CHECK(seen >= 10);
  }

  TEST_CASE("exclusivity on all dependent sets") {
    SplitMix64 rng(85);
    for (int i = 0; i < 30; ++i) {
      const Configuration c = gen::nonempty_configuration(rng, 8);
      const Valuation f = gen::valuation(rng, c.size());
      const Rational t = critical_root(c, f).root.lo() / 2;
      const ConfiguredSpace space = canonical_space(c, f, t);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.size()); ++m) {
        if (!oracle::independent(c, m)) CHECK(event_probability(space, SignedWord(VertexSet(m))) == 0);
      }
    }
  }

  TEST_CASE("counting formula whenever eta is constant") {
    SplitMix64 rng(86);
    int defined = 0;
    for (int i = 0; i < 300; ++i) {
      const Configuration c = gen::configuration(rng, 7);
      const SymmetricCounts sc = symmetric_counts(c);
      if (sc.undefined_level) continue;
      ++defined;
      CHECK(sc.formula_ok);
      CHECK(sc.coefficient_form_ok);
    }
    for (int n = 1; n <= 6; ++n) {
      for (int k = 1; k <= n; ++k) CHECK(symmetric_counts(star(n, k)).formula_ok);
    }
    CHECK(defined > 10);
  }

  TEST_CASE("star S_{n,n-1} alternates between the two types") {
    for (int n = 3; n <= 8; ++n) {
      const Classification cls = classify(star(n, n - 1), Valuation::uniform(n));
      CHECK(cls.type == (n % 2 == 1 ? ConfigType::TypeII : ConfigType::TypeI));
    }
  }
}
