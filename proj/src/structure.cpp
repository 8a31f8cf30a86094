#include "confspace/structure.hpp"

#include <algorithm>
#include <numeric>

#include "confspace/error.hpp"
#include "confspace/roots.hpp"

namespace confspace {

VertexSet Component::original_vertices() const {
  VertexSet out;
  for (int v : original_index) out = out.with(v);
  return out;
}

Decomposition components(const Configuration& c) {
  std::vector<int> parent(static_cast<std::size_t>(c.size()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      auto& p = parent[static_cast<std::size_t>(v)];
      p = parent[static_cast<std::size_t>(p)];
      v = p;
    }
    return v;
  };
  for (VertexSet d : c.nubs()) {
    const auto members = d.members();
    for (std::size_t i = 1; i < members.size(); ++i) {
      const int a = find(members[0]);
      const int b = find(members[i]);
      if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  }

  std::vector<VertexSet> groups;
  std::vector<int> group_of_root(static_cast<std::size_t>(c.size()), -1);
  for (int v = 0; v < c.size(); ++v) {
    const int r = find(v);
    auto& g = group_of_root[static_cast<std::size_t>(r)];
    if (g < 0) {
      g = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(g)] = groups[static_cast<std::size_t>(g)].with(v);
  }

  Decomposition out;
  for (VertexSet group : groups) {
    Component comp;
    comp.original_index = group.members();
    std::vector<std::string> labels;
    for (int v : comp.original_index) labels.push_back(c.label(v));
    std::vector<VertexSet> local_nubs;
    for (VertexSet d : c.nubs()) {
      if (!d.subset_of(group)) continue;
      VertexSet local;
      for (std::size_t i = 0; i < comp.original_index.size(); ++i) {
        if (d.contains(comp.original_index[i])) local = local.with(static_cast<int>(i));
      }
      local_nubs.push_back(local);
    }
    comp.config = Configuration::from_nubs(static_cast<int>(comp.original_index.size()), std::move(labels), local_nubs);
    out.components.push_back(std::move(comp));
  }
  return out;
}

bool is_irreducible(const Configuration& c) { return components(c).components.size() == 1; }

bool is_right_angled(const Configuration& c) {
  return std::all_of(c.nubs().begin(), c.nubs().end(), [](VertexSet d) { return d.size() == 2; });
}

Valuation restrict_valuation(const Valuation& f, const Component& component) {
  std::vector<Rational> weights;
  for (int v : component.original_index) weights.push_back(f.weight(v));
  return Valuation(std::move(weights));
}

Configuration from_dependence_graph(int n, std::vector<std::string> labels,
                                    const std::vector<std::pair<int, int>>& edges) {
  std::vector<VertexSet> nubs;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(ErrorCode::VertexOutOfRange, "edge endpoint outside the vertex range");
    }
    if (a == b) throw Error(ErrorCode::SelfLoop, "self loop at vertex " + std::to_string(a));
    nubs.push_back(VertexSet::singleton(a).with(b));
  }
  return Configuration::from_nubs(n, std::move(labels), nubs);
}

namespace {

void subsets_of_size(int n, int size, int start, VertexSet current, std::vector<VertexSet>& out) {
  if (current.size() == size) {
    out.push_back(current);
    return;
  }
  for (int v = start; v <= n - (size - current.size()); ++v) subsets_of_size(n, size, v + 1, current.with(v), out);
}

}  // namespace

Configuration star(int n, int k) {
  if (k < 1 || k > n) throw Error(ErrorCode::BadParameters, "star needs 1 <= k <= n");
  if (n > kDefaultEnumerationCap) throw Error(ErrorCode::TooLarge, "star configuration too large");
  std::vector<VertexSet> nubs;
  if (k < n) subsets_of_size(n, k + 1, 0, VertexSet(), nubs);
  return Configuration::from_nubs(n, nubs);
}

namespace {

void require_right_angled(const Configuration& c) {
  if (!is_right_angled(c)) throw Error(ErrorCode::NotRightAngled, "configuration has a nub of size > 2");
}

}  // namespace

CliqueTransfer clique_transfer(const Configuration& c) {
  require_right_angled(c);
  CliqueTransfer out;
  for (VertexSet x : enumerate_independence_sets(c, c.size())) {
    if (!x.empty()) out.cliques.push_back(x);
  }
  // dependent_to[a]: vertices equal to a or forming a nub with a.
  std::vector<VertexSet> dependent_to(static_cast<std::size_t>(c.size()));
  for (int a = 0; a < c.size(); ++a) {
    VertexSet dep = VertexSet::singleton(a);
    for (VertexSet d : c.nubs_through(a)) dep = dep | d;
    dependent_to[static_cast<std::size_t>(a)] = dep;
  }
  const std::size_t m = out.cliques.size();
  out.follows.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    VertexSet reachable;
    out.cliques[i].for_each([&](int a) { reachable = reachable | dependent_to[static_cast<std::size_t>(a)]; });
    for (std::size_t j = 0; j < m; ++j) out.follows[i][j] = out.cliques[j].subset_of(reachable);
  }
  return out;
}

Series trace_series(const Configuration& c, const Valuation& f, std::size_t order) {
  require_right_angled(c);
  Series s = series_inverse(mobius_polynomial(c, f, c.size()), order);
  if (!s.nonnegative()) throw Error(ErrorCode::Internal, "trace series of a right-angled configuration went negative");
  return s;
}

namespace {

template <typename Value, typename Weight>
Value count_normal_forms(const CliqueTransfer& transfer, std::size_t length, Weight&& weight) {
  if (length == 0) return Value(1);
  const std::size_t m = transfer.cliques.size();
  // ending[len][j]: total weight of normal forms of length len whose last clique is j.
  std::vector<std::vector<Value>> ending(length + 1, std::vector<Value>(m, Value(0)));
  for (std::size_t len = 1; len <= length; ++len) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto size = static_cast<std::size_t>(transfer.cliques[j].size());
      if (size > len) continue;
      Value acc(0);
      if (size == len) {
        acc = Value(1);
      } else {
        for (std::size_t i = 0; i < m; ++i) {
          if (transfer.follows[i][j]) acc += ending[len - size][i];
        }
      }
      if (acc != 0) ending[len][j] = acc * weight(transfer.cliques[j]);
    }
  }
  Value total(0);
  for (const auto& v : ending[length]) total += v;
  return total;
}

}  // namespace

BigInt trace_count_cf(const Configuration& c, std::size_t length) {
  const CliqueTransfer transfer = clique_transfer(c);
  return count_normal_forms<BigInt>(transfer, length, [](VertexSet) { return BigInt(1); });
}

Rational trace_weight_cf(const Configuration& c, const Valuation& f, std::size_t length) {
  const CliqueTransfer transfer = clique_transfer(c);
  return count_normal_forms<Rational>(transfer, length, [&](VertexSet x) { return f(x); });
}

RightAngledReport right_angled_properties(const Configuration& c, const Valuation& f, int cap) {
  require_right_angled(c);
  const MobiusFamily family(c, f, cap);
  const Classification cls = classify(family);
  RightAngledReport report;
  report.type_one = cls.type == ConfigType::TypeI;
  report.irreducible = is_irreducible(c);
  const AlgebraicRoot& t0 = cls.critical_root;
  const Polynomial& mu = family.mobius();

  if (report.irreducible) {
    // Simple iff gcd(mu, mu') does not vanish at t0.
    const Polynomial g = gcd(mu, mu.derivative());
    report.simple_root = g.degree() < 1 || t0.sign_of(g) != 0;
    bool positive = true;
    for (VertexSet x : family.independence_sets()) {
      if (x.empty()) continue;
      if (t0.sign_of(family.relative(x)) <= 0) {
        positive = false;
        break;
      }
    }
    report.relatives_positive = positive;
  }

  // Samples k/4 of a rational lower bound for t0, plus t0 itself when rational.
  std::vector<Rational> samples;
  for (int k = 1; k <= 4; ++k) samples.push_back(t0.lo() * Rational(k, 4));
  report.monotone = true;
  for (VertexSet x : family.independence_sets()) {
    const Polynomial& px = family.relative(x);
    for (int a = 0; a < c.size(); ++a) {
      const VertexSet y = x.with(a);
      if (x.contains(a) || !c.is_independent(y)) continue;
      const Polynomial& py = family.relative(y);
      for (const Rational& t : samples) {
        ++report.monotone_checks;
        if (px.evaluate(t) > py.evaluate(t)) report.monotone = false;
      }
    }
  }
  return report;
}

SymmetricCounts symmetric_counts(const Configuration& c, int cap) {
  SymmetricCounts out;
  const auto sets = enumerate_independence_sets(c, cap);
  int top = 0;
  for (VertexSet x : sets) top = std::max(top, x.size());
  out.counts.assign(static_cast<std::size_t>(top) + 1, BigInt(0));
  std::vector<std::optional<int>> eta(static_cast<std::size_t>(top) + 1);
  std::vector<bool> constant(static_cast<std::size_t>(top) + 1, true);
  for (VertexSet x : sets) {
    const auto j = static_cast<std::size_t>(x.size());
    out.counts[j] += 1;
    int parallel = 0;
    for (int a = 0; a < c.size(); ++a) {
      if (!x.contains(a) && c.is_independent(x.with(a))) ++parallel;
    }
    if (!eta[j]) {
      eta[j] = parallel;
    } else if (*eta[j] != parallel) {
      constant[j] = false;
    }
  }
  for (std::size_t j = 0; j < eta.size(); ++j) {
    if (!constant[j]) {
      out.undefined_level = static_cast<int>(j);
      break;
    }
    out.eta.emplace_back(*eta[j]);
  }
  if (out.undefined_level) return out;

  // k ranges to top + 1, where N_k = 0 and eta_top = 0.
  out.formula_ok = true;
  BigInt product = 1;
  BigInt factorial = 1;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(top) + 1; ++k) {
    if (k > 0) {
      product *= out.eta[k - 1];
      factorial *= static_cast<unsigned long>(k);
    }
    const BigInt count = k < out.counts.size() ? out.counts[k] : BigInt(0);
    if (count * factorial != product) out.formula_ok = false;
  }

  std::vector<Rational> coeffs;
  product = 1;
  factorial = 1;
  for (std::size_t k = 0; k <= static_cast<std::size_t>(top); ++k) {
    if (k > 0) {
      product *= out.eta[k - 1];
      factorial *= static_cast<unsigned long>(k);
    }
    Rational term = make_rational(product, factorial);
    coeffs.push_back(k % 2 == 0 ? term : Rational(-term));
  }
  out.coefficient_form_ok = Polynomial(std::move(coeffs)) == mobius_polynomial(c, Valuation::uniform(c.size()), cap);
  return out;
}

}  // namespace confspace
