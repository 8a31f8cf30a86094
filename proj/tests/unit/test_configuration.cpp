#include <doctest.h>

#include <algorithm>
#include <functional>

#include "confspace/configuration.hpp"
#include "confspace/datasets.hpp"
#include "confspace/error.hpp"
#include "confspace/valuation.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace confspace;

namespace {

VertexSet S(std::initializer_list<int> one_based) {
  VertexSet x;
  for (int v : one_based) x = x.with(v - 1);
  return x;
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

TEST_SUITE("configuration") {
  TEST_CASE("vertex sets") {
    const VertexSet x = VertexSet::of({0, 3, 5});
    CHECK(x.size() == 3);
    CHECK(x.members() == std::vector<int>{0, 3, 5});
    CHECK(x.max_element() == 5);
    CHECK(VertexSet().max_element() == -1);
    CHECK((x - VertexSet::of({3})) == VertexSet::of({0, 5}));
    CHECK(VertexSet::of({0, 5}).subset_of(x));
    CHECK(VertexSet::range(64).size() == 64);
    CHECK(BySizeThenBits{}(VertexSet::of({5}), VertexSet::of({0, 1})));
  }

  TEST_CASE("nubs are reduced to an antichain and sorted") {
    const Configuration c = Configuration::from_nubs(3, {S({1, 2, 3}), S({2, 3}), S({2, 3})});
    CHECK(c.nubs() == std::vector<VertexSet>{S({2, 3})});
    CHECK(c.labels() == std::vector<std::string>{"1", "2", "3"});
    CHECK(c.is_independent(S({1, 2})));
    CHECK_FALSE(c.is_independent(S({1, 2, 3})));
    CHECK(c.nubs_through(1) == std::vector<VertexSet>{S({2, 3})});
    CHECK(c.nubs_through(0).empty());
  }

  TEST_CASE("construction errors") {
    CHECK(code_of([] { Configuration::from_nubs(2, {S({1})}); }) == ErrorCode::SingletonNub);
    CHECK(code_of([] { Configuration::from_nubs(2, {S({1, 3})}); }) == ErrorCode::VertexOutOfRange);
    CHECK(code_of([] { Configuration::from_nubs(65, {}); }) == ErrorCode::TooManyVertices);
    CHECK(code_of([] { Configuration::from_nubs(2, {"a", "a"}, {}); }) == ErrorCode::ValidationError);
    CHECK(code_of([] { Configuration::from_nubs(2, {"a"}, {}); }) == ErrorCode::ValidationError);
  }

  TEST_CASE("independence lists") {
    const Configuration c = Configuration::from_independence_list(
        3, {VertexSet(), S({1}), S({2}), S({3}), S({1, 2}), S({1, 3})});
    CHECK(c.nubs() == std::vector<VertexSet>{S({2, 3})});
    CHECK(code_of([] { Configuration::from_independence_list(2, {S({1}), S({2})}); }) == ErrorCode::NotDownwardClosed);
    CHECK(code_of([] { Configuration::from_independence_list(2, {VertexSet(), S({1})}); }) ==
          ErrorCode::MissingSingleton);
    CHECK(code_of([] {
            Configuration::from_independence_list(3, {VertexSet(), S({1}), S({2}), S({3}), S({1, 2, 3})});
          }) == ErrorCode::NotDownwardClosed);
  }

  TEST_CASE("enumeration matches brute force") {
    SplitMix64 rng(31);
    for (int i = 0; i < 100; ++i) {
      const Configuration c = gen::configuration(rng, 9);
      auto sets = enumerate_independence_sets(c);
      std::vector<std::uint64_t> masks;
      for (VertexSet x : sets) masks.push_back(x.bits());
      std::sort(masks.begin(), masks.end());
      CHECK(masks == oracle::independent_masks(c));
      CHECK(std::is_sorted(sets.begin(), sets.end(), BySizeThenBits{}));
    }
  }

  TEST_CASE("enumeration cap") {
    CHECK(code_of([] { enumerate_independence_sets(free_configuration(25)); }) == ErrorCode::TooLarge);
    CHECK(enumerate_independence_sets(complete_configuration(30), 30).size() == 31);
  }

  TEST_CASE("the trivial configuration") {
    const Configuration c;
    CHECK(c.trivial());
    CHECK(enumerate_independence_sets(c) == std::vector<VertexSet>{VertexSet()});
  }

  TEST_CASE("parallel sets") {
    const Configuration c = builtin("fig1-left");
    CHECK(is_parallel(c, S({1}), S({3})));
    CHECK_FALSE(is_parallel(c, S({1}), S({2})));
    CHECK_FALSE(is_parallel(c, S({1}), S({1, 3})));
    CHECK(code_of([&] { is_parallel(c, S({1, 2}), S({3})); }) == ErrorCode::NotIndependent);
  }

  TEST_CASE("relative configuration of fig1-left") {
    const Configuration c = builtin("fig1-left");
    const RelativeView at1 = relative_configuration(c, S({1}));
    CHECK(at1.vertices == S({3, 5}));
    CHECK(at1.relative_nubs == std::vector<VertexSet>{S({3, 5})});
    const RelativeView at2 = relative_configuration(c, S({2}));
    CHECK(at2.vertices == S({3, 4, 5}));
    CHECK(at2.relative_nubs == std::vector<VertexSet>{S({3, 5}), S({4, 5})});
    CHECK(at2.standalone.labels() == std::vector<std::string>{"3", "4", "5"});
    CHECK(at2.to_original(VertexSet::of({0, 2})) == S({3, 5}));
    CHECK(at2.to_local(S({4})) == VertexSet::of({1}));
    CHECK(code_of([&] { relative_configuration(c, S({1, 2})); }) == ErrorCode::NotIndependent);
    const RelativeView at_empty = relative_configuration(c, VertexSet());
    CHECK(at_empty.standalone == c);
  }

  TEST_CASE("relative independence matches the definition") {
    SplitMix64 rng(32);
    for (int i = 0; i < 100; ++i) {
      const Configuration c = gen::nonempty_configuration(rng, 8);
      const VertexSet x = gen::independent_set(rng, c);
      const RelativeView view = relative_configuration(c, x);
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.size()); ++m) {
        const VertexSet y(m);
        if (y.intersects(x)) continue;
        const bool expected = oracle::independent(c, (x | y).bits());
        const bool got = y.subset_of(view.vertices) && view.standalone.is_independent(view.to_local(y));
        CHECK(got == expected);
      }
    }
  }

  TEST_CASE("relative of a relative is the relative of the union") {
    SplitMix64 rng(33);
    for (int i = 0; i < 100; ++i) {
      const Configuration c = gen::nonempty_configuration(rng, 8);
      const VertexSet xy = gen::independent_set(rng, c);
      VertexSet x;
      xy.for_each([&](int v) {
        if (rng.chance(1, 2)) x = x.with(v);
      });
      const VertexSet y = xy - x;
      const RelativeView outer = relative_configuration(c, x);
      const RelativeView inner = relative_configuration(outer.standalone, outer.to_local(y));
      const RelativeView direct = relative_configuration(c, xy);
      CHECK(outer.to_original(inner.to_original(inner.standalone.vertices())) == direct.vertices);
      std::vector<VertexSet> nested;
      for (VertexSet d : inner.standalone.nubs()) nested.push_back(outer.to_original(inner.to_original(d)));
      std::sort(nested.begin(), nested.end(), BySizeThenBits{});
      CHECK(nested == direct.relative_nubs);
    }
  }

  TEST_CASE("valuations") {
    const Valuation f({Rational(1, 2), Rational(1, 3)});
    CHECK(f(VertexSet::of({0, 1})) == Rational(1, 6));
    CHECK(f(VertexSet()) == 1);
    CHECK_FALSE(f.is_uniform());
    CHECK(Valuation::uniform(4).is_uniform());
    CHECK(code_of([] { Valuation({Rational(1), Rational(0)}); }) == ErrorCode::NonPositiveWeight);
    CHECK(code_of([] { Valuation({Rational(-1, 2)}); }) == ErrorCode::NonPositiveWeight);
    const Configuration c = builtin("fig1-left");
    CHECK(valuation_of(c) == Valuation::uniform(5));
    CHECK(code_of([&] { valuation_of(c, {Rational(1)}); }) == ErrorCode::ValidationError);
    const Valuation g({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)});
    const Valuation r = g.restricted(relative_configuration(c, S({2})));
    CHECK(r.weights() == std::vector<Rational>{Rational(3), Rational(4), Rational(5)});
  }

  TEST_CASE("canonical key ignores labels") {
    const Configuration a = Configuration::from_nubs(2, {"x", "y"}, {S({1, 2})});
    const Configuration b = Configuration::from_nubs(2, {S({1, 2})});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(a) != canonical_key(Configuration::from_nubs(2, {})));
  }
}
