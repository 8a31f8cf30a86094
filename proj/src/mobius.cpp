#include "confspace/mobius.hpp"

#include <sstream>

#include "confspace/error.hpp"

namespace confspace {

namespace {

std::string weight_key(const Valuation& f) {
  std::ostringstream os;
  for (const auto& w : f.weights()) os << w.get_str() << ';';
  return os.str();
}

std::string polynomial_key(const Polynomial& p) {
  std::ostringstream os;
  for (const auto& c : p.coefficients()) os << c.get_str() << ';';
  return os.str();
}

}  // namespace

Polynomial mobius_polynomial(const Configuration& c, const Valuation& f, int cap) {
  std::vector<Rational> coeffs(static_cast<std::size_t>(c.size()) + 1);
  for_each_independent(
      c,
      [&](VertexSet x) {
        const auto k = static_cast<std::size_t>(x.size());
        if (k % 2 == 0) {
          coeffs[k] += f(x);
        } else {
          coeffs[k] -= f(x);
        }
      },
      cap);
  return Polynomial(std::move(coeffs));
}

Polynomial MobiusCache::get_or_compute(const Configuration& c, const Valuation& f, int cap) {
  const std::string key = canonical_key(c) + '|' + weight_key(f);
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  Polynomial value = mobius_polynomial(c, f, cap);
  std::unique_lock lock(mutex_);
  return table_.try_emplace(key, std::move(value)).first->second;
}

std::size_t MobiusCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

MobiusFamily::MobiusFamily(Configuration c, Valuation f, int cap)
    : config_(std::move(c)), valuation_(std::move(f)), cache_(std::make_unique<MobiusCache>()) {
  if (valuation_.size() != config_.size()) throw Error(ErrorCode::ValidationError, "valuation size mismatch");
  sets_ = enumerate_independence_sets(config_, cap);
  for (VertexSet x : sets_) {
    const RelativeView view = relative_configuration(config_, x);
    table_.emplace(x, cache_->get_or_compute(view.standalone, valuation_.restricted(view), cap));
  }
}

const Polynomial& MobiusFamily::mobius() const { return table_.at(VertexSet()); }

const Polynomial& MobiusFamily::relative(VertexSet x) const {
  const auto it = table_.find(x);
  if (it == table_.end()) throw Error(ErrorCode::NotIndependent, "set is not independent");
  return it->second;
}

Polynomial MobiusFamily::transform(VertexSet x) const {
  return relative(x).shifted(static_cast<std::size_t>(x.size())) * valuation_(x);
}

Polynomial relative_mobius(const Configuration& c, const Valuation& f, VertexSet x) {
  const RelativeView view = relative_configuration(c, x);
  return mobius_polynomial(view.standalone, f.restricted(view));
}

Polynomial mobius_transform(const Configuration& c, const Valuation& f, VertexSet x) {
  return relative_mobius(c, f, x).shifted(static_cast<std::size_t>(x.size())) * f(x);
}

Polynomial mobius_transform_by_sum(const Configuration& c, const Valuation& f, VertexSet x) {
  if (!x.subset_of(c.vertices()) || !c.is_independent(x)) {
    throw Error(ErrorCode::NotIndependent, "Möbius transform needs an independent set");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(c.size()) + 1);
  for_each_independent(c, [&](VertexSet y) {
    if (!x.subset_of(y)) return;
    const auto k = static_cast<std::size_t>(y.size());
    if ((y.size() - x.size()) % 2 == 0) {
      coeffs[k] += f(y);
    } else {
      coeffs[k] -= f(y);
    }
  });
  return Polynomial(std::move(coeffs));
}

bool inversion_check(const Configuration& c, const Valuation& f) {
  const MobiusFamily family(c, f);
  for (VertexSet x : family.independence_sets()) {
    Polynomial sum;
    for (VertexSet y : family.independence_sets()) {
      if (x.subset_of(y)) sum += family.transform(y);
    }
    if (sum != Polynomial::monomial(f(x), static_cast<std::size_t>(x.size()))) return false;
  }
  return true;
}

Polynomial derivative_identity_residual(const MobiusFamily& family) {
  Polynomial residual = family.mobius().derivative();
  for (int a = 0; a < family.config().size(); ++a) {
    residual += family.relative(VertexSet::singleton(a)) * family.valuation().weight(a);
  }
  return residual;
}

Polynomial derivative_identity_residual(const Configuration& c, const Valuation& f) {
  return derivative_identity_residual(MobiusFamily(c, f));
}

CriticalRoot critical_root(const MobiusFamily& family) {
  if (family.config().trivial()) {
    throw Error(ErrorCode::TrivialConfiguration, "the trivial configuration has no critical root");
  }
  struct Candidate {
    std::optional<AlgebraicRoot> root;
    std::vector<VertexSet> sets;
  };
  std::map<std::string, Candidate> candidates;
  for (VertexSet x : family.independence_sets()) {
    const Polynomial& p = family.relative(x);
    auto [it, inserted] = candidates.try_emplace(polynomial_key(p));
    if (inserted) it->second.root = first_positive_root(p);
    it->second.sets.push_back(x);
  }

  const Candidate* best = nullptr;
  for (const auto& [key, candidate] : candidates) {
    if (!candidate.root) continue;
    if (best == nullptr || compare_roots(*candidate.root, *best->root) == Ordering::Less) best = &candidate;
  }
  if (best == nullptr) {
    // Unreachable for a non-trivial configuration: some relative polynomial is 1 - kt.
    throw Error(ErrorCode::Internal, "no relative polynomial has a positive root");
  }

  CriticalRoot out{*best->root, {}};
  for (const auto& [key, candidate] : candidates) {
    if (candidate.root && compare_roots(*candidate.root, out.root) == Ordering::Equal) {
      out.attained_at.insert(out.attained_at.end(), candidate.sets.begin(), candidate.sets.end());
    }
  }
  std::sort(out.attained_at.begin(), out.attained_at.end(), BySizeThenBits{});
  return out;
}

CriticalRoot critical_root(const Configuration& c, const Valuation& f) { return critical_root(MobiusFamily(c, f)); }

std::string_view to_string(ConfigType type) noexcept { return type == ConfigType::TypeI ? "I" : "II"; }

Classification classify(const MobiusFamily& family) {
  CriticalRoot cr = critical_root(family);
  const bool type_one = !cr.attained_at.empty() && cr.attained_at.front().empty();
  const Polynomial& mu = family.mobius();

  Rest rest;
  if (cr.root.is_rational()) {
    rest.exact = true;
    rest.value = mu.evaluate(cr.root.lo());
    rest.sign = sign(rest.value);
    rest.enclosure = {rest.value, rest.value};
  } else {
    rest.sign = cr.root.sign_of(mu);
    AlgebraicRoot narrow = cr.root;
    narrow.refine_to(default_width());
    if (rest.sign == 0) {
      rest.exact = true;
      rest.value = 0;
      rest.enclosure = {Rational(0), Rational(0)};
    } else {
      rest.enclosure = evaluate_enclosure(mu, narrow.interval());
    }
  }
  if (type_one != (rest.sign == 0)) {
    throw Error(ErrorCode::Internal, "type and rest certificate disagree");
  }
  return Classification{std::move(cr.root), std::move(cr.attained_at),
                        type_one ? ConfigType::TypeI : ConfigType::TypeII, std::move(rest)};
}

Classification classify(const Configuration& c, const Valuation& f) { return classify(MobiusFamily(c, f)); }

Polynomial rest_polynomial(const Configuration& c, const Valuation& f) { return mobius_polynomial(c, f); }

}  // namespace confspace
