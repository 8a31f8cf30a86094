#include "confspace/probspace.hpp"

#include <algorithm>

#include "confspace/rng.hpp"

namespace confspace {

namespace {

std::string set_text(const Configuration& c, VertexSet x) {
  std::string out = "{";
  bool first = true;
  x.for_each([&](int v) {
    out += (first ? "" : ",") + c.label(v);
    first = false;
  });
  return out + "}";
}

Rational power(const Rational& base, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= base;
  return out;
}

}  // namespace

SignedWord::SignedWord(VertexSet pos, VertexSet neg) : positives(pos), negatives(neg) {
  if (pos.intersects(neg)) throw Error(ErrorCode::BadParameters, "a vertex occurs with both signs");
}

AtomTable atoms_from_intersections(int n, const std::map<VertexSet, Rational>& q) {
  if (n < 0 || n > kAtomTableCap) {
    throw Error(ErrorCode::TooLarge, "atom table limited to " + std::to_string(kAtomTableCap) + " events");
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<Rational> values(count);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const auto it = q.find(VertexSet(mask));
    if (it == q.end()) throw Error(ErrorCode::MissingEntry, "no intersection probability for mask " + std::to_string(mask));
    values[mask] = it->second;
  }
  if (values[0] != 1) throw Error(ErrorCode::BadParameters, "the empty intersection must have probability 1");

  // Superset Möbius transform: values[y] becomes sum over z >= y of (-1)^|z-y| q(z).
  for (int bit = 0; bit < n; ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      if ((mask & b) == 0) values[mask] -= values[mask | b];
    }
  }

  AtomTable table;
  table.n = n;
  const VertexSet all = VertexSet::range(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const VertexSet y(mask);
    if (values[mask] < 0) table.negative_atoms.emplace_back(y, all - y);
    table.atoms.emplace(y, std::move(values[mask]));
  }
  return table;
}

std::map<VertexSet, Rational> canonical_intersections(const Configuration& c, const Valuation& f, const Rational& t) {
  if (c.size() > kAtomTableCap) throw Error(ErrorCode::TooLarge, "too many vertices for an explicit intersection table");
  std::map<VertexSet, Rational> q;
  const std::uint64_t count = std::uint64_t{1} << c.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const VertexSet x(mask);
    q.emplace(x, c.is_independent(x) ? Rational(power(t, x.size()) * f(x)) : Rational(0));
  }
  return q;
}

Rational event_probability(const AtomTable& table, const SignedWord& w) {
  Rational total = 0;
  for (const auto& [y, mass] : table.atoms) {
    if (w.extended_by(y)) total += mass;
  }
  return total;
}

ConfiguredSpace canonical_space(const MobiusFamily& family, const Rational& t) {
  if (t < 0) throw OutOfRangeError(VertexSet(), t, "t must be non-negative");
  ConfiguredSpace space{family.config(), family.valuation(), t, {}};
  const auto& sets = family.independence_sets();
  for (VertexSet x : sets) {
    const Rational rel = family.relative(x).evaluate(t);
    if (rel < 0) {
      throw OutOfRangeError(x, rel,
                            "t = " + to_string(t) + " is beyond the probabilistic range: the relative polynomial at " +
                                set_text(family.config(), x) + " is " + to_string(rel));
    }
    space.atoms.emplace(x, Rational(family.valuation()(x) * power(t, x.size()) * rel));
  }
  return space;
}

ConfiguredSpace canonical_space(const Configuration& c, const Valuation& f, const Rational& t) {
  return canonical_space(MobiusFamily(c, f), t);
}

Rational event_probability(const ConfiguredSpace& space, const SignedWord& w) {
  Rational total = 0;
  for (const auto& [x, mass] : space.atoms) {
    if (w.extended_by(x)) total += mass;
  }
  return total;
}

RealizationReport verify_realization(const ConfiguredSpace& space) {
  RealizationReport report;
  const Configuration& c = space.config;
  const Valuation& f = space.valuation;
  const Rational& t = space.t;

  Rational total = 0;
  report.nonnegative_ok = true;
  for (const auto& [x, mass] : space.atoms) {
    total += mass;
    if (mass < 0) {
      report.nonnegative_ok = false;
      report.violations.push_back("negative atom at " + set_text(c, x));
    }
    if (!c.is_independent(x)) report.violations.push_back("atom at dependent set " + set_text(c, x));
  }
  report.mass_ok = total == 1;
  if (!report.mass_ok) report.violations.push_back("atom masses sum to " + to_string(total));

  // P(intersection of the events of x) = sum of atoms containing x.
  const auto intersection = [&](VertexSet x) { return event_probability(space, SignedWord(x)); };

  report.marginals_ok = true;
  for (int a = 0; a < c.size(); ++a) {
    const Rational expected = t * f.weight(a);
    const Rational got = intersection(VertexSet::singleton(a));
    if (got != expected) {
      report.marginals_ok = false;
      report.violations.push_back("P(" + c.label(a) + ") = " + to_string(got) + ", expected " + to_string(expected));
    }
  }

  report.independence_ok = true;
  for_each_independent(c, [&](VertexSet x) {
    const Rational expected = power(t, x.size()) * f(x);
    const Rational got = intersection(x);
    if (got != expected) {
      report.independence_ok = false;
      report.violations.push_back("independence fails on " + set_text(c, x) + ": " + to_string(got) + " vs " +
                                  to_string(expected));
    }
  });

  // Exclusivity is upward closed, so the nubs cover every dependent set.
  report.exclusivity_ok = true;
  for (VertexSet d : c.nubs()) {
    const Rational got = intersection(d);
    if (got != 0) {
      report.exclusivity_ok = false;
      report.violations.push_back("nub " + set_text(c, d) + " has probability " + to_string(got));
    }
  }

  Rational covered = 0;
  for (const auto& [x, mass] : space.atoms) {
    if (!x.empty()) covered += mass;
  }
  report.rest = 1 - covered;
  report.covering = report.rest == 0;
  const Rational mu_t = mobius_polynomial(c, f).evaluate(t);
  if (report.rest != mu_t) {
    report.mass_ok = false;
    report.violations.push_back("rest " + to_string(report.rest) + " differs from mu(t) = " + to_string(mu_t));
  }
  return report;
}

AlgebraicRoot probabilistic_range(const Configuration& c, const Valuation& f) { return critical_root(c, f).root; }

std::map<VertexSet, std::uint64_t> sample(const ConfiguredSpace& space, std::uint64_t count, std::uint64_t seed) {
  using Wide = unsigned __int128;
  std::map<VertexSet, std::uint64_t> tally;
  std::vector<VertexSet> order;
  std::vector<Wide> thresholds;  // floor(cumulative mass * 2^64)
  Rational cumulative = 0;
  for (const auto& [x, mass] : space.atoms) {
    tally.emplace(x, 0);
    cumulative += mass;
    order.push_back(x);
    Rational scaled = cumulative;
    mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), 64);
    BigInt floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const BigInt high = floor_value >> 64;
    const BigInt low = floor_value - (high << 64);
    thresholds.push_back((static_cast<Wide>(high.get_ui()) << 64) |
                         static_cast<Wide>(std::stoull(low.get_str())));
  }
  if (order.empty()) return tally;

  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    const Wide u = rng.next();
    // First atom whose cumulative threshold exceeds the draw; the last atom takes the remainder.
    const auto it = std::upper_bound(thresholds.begin(), thresholds.end() - 1, u);
    ++tally[order[static_cast<std::size_t>(it - thresholds.begin())]];
  }
  return tally;
}

}  // namespace confspace
