#include "confspace/configuration.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "confspace/error.hpp"

namespace confspace {

namespace {

std::string describe(VertexSet s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  s.for_each([&](int v) {
    os << (first ? "" : ",") << v;
    first = false;
  });
  os << "}";
  return os.str();
}

void check_size(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::TooManyVertices, "vertex count " + std::to_string(n) + " outside 0..64");
  }
}

std::vector<std::string> checked_labels(int n, std::vector<std::string> labels) {
  if (labels.empty()) return numbered_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    throw Error(ErrorCode::ValidationError, "expected " + std::to_string(n) + " labels");
  }
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw Error(ErrorCode::ValidationError, "duplicate vertex label '" + l + "'");
  }
  return labels;
}

// Keeps the minimal members of a family, deduplicated and canonically sorted.
std::vector<VertexSet> antichain_reduce(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), BySizeThenBits{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : sets) {
    const bool dominated =
        std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return k.subset_of(s); });
    if (!dominated) kept.push_back(s);
  }
  return kept;
}

}  // namespace

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

Configuration::Configuration(int n, std::vector<std::string> labels, std::vector<VertexSet> nubs)
    : n_(n), labels_(std::move(labels)), nubs_(std::move(nubs)), nubs_by_vertex_(static_cast<std::size_t>(n)) {
  for (VertexSet d : nubs_) {
    d.for_each([&](int v) { nubs_by_vertex_[static_cast<std::size_t>(v)].push_back(d); });
  }
}

Configuration Configuration::from_nubs(int n, std::vector<std::string> labels, const std::vector<VertexSet>& nubs) {
  check_size(n);
  const VertexSet all = VertexSet::range(n);
  for (VertexSet d : nubs) {
    if (!d.subset_of(all)) throw Error(ErrorCode::VertexOutOfRange, "nub " + describe(d) + " exceeds vertex range");
    if (d.size() <= 1) throw Error(ErrorCode::SingletonNub, "nub " + describe(d) + " has fewer than two vertices");
  }
  return Configuration(n, checked_labels(n, std::move(labels)), antichain_reduce(nubs));
}

Configuration Configuration::from_nubs(int n, const std::vector<VertexSet>& nubs) { return from_nubs(n, {}, nubs); }

Configuration Configuration::from_independence_list(int n, std::vector<std::string> labels,
                                                    const std::vector<VertexSet>& independent) {
  check_size(n);
  const VertexSet all = VertexSet::range(n);
  std::unordered_set<VertexSet> family;
  for (VertexSet x : independent) {
    if (!x.subset_of(all)) throw Error(ErrorCode::VertexOutOfRange, "set " + describe(x) + " exceeds vertex range");
    family.insert(x);
  }
  if (!family.contains(VertexSet())) throw Error(ErrorCode::NotDownwardClosed, "the empty set is missing");
  for (int v = 0; v < n; ++v) {
    if (!family.contains(VertexSet::singleton(v))) {
      throw Error(ErrorCode::MissingSingleton, "singleton " + describe(VertexSet::singleton(v)) + " is missing");
    }
  }
  for (VertexSet x : family) {
    x.for_each([&](int v) {
      if (!family.contains(x.without(v))) {
        throw Error(ErrorCode::NotDownwardClosed,
                    "set " + describe(x) + " is listed but its subset " + describe(x.without(v)) + " is not");
      }
    });
  }
  // A nub is a non-member all of whose one-smaller subsets are members; each
  // such set is a member plus one vertex.
  std::vector<VertexSet> nubs;
  for (VertexSet x : family) {
    (all - x).for_each([&](int a) {
      const VertexSet y = x.with(a);
      if (family.contains(y)) return;
      bool minimal = true;
      y.for_each([&](int b) { minimal = minimal && family.contains(y.without(b)); });
      if (minimal) nubs.push_back(y);
    });
  }
  return Configuration(n, checked_labels(n, std::move(labels)), antichain_reduce(std::move(nubs)));
}

Configuration Configuration::from_independence_list(int n, const std::vector<VertexSet>& independent) {
  return from_independence_list(n, {}, independent);
}

int Configuration::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool Configuration::is_independent(VertexSet x) const {
  return std::none_of(nubs_.begin(), nubs_.end(), [x](VertexSet d) { return d.subset_of(x); });
}

bool is_independent(const Configuration& c, VertexSet x) { return c.is_independent(x); }

const std::vector<VertexSet>& nubs_of(const Configuration& c) { return c.nubs(); }

namespace {

void extend(const Configuration& c, VertexSet current, int next, const std::function<void(VertexSet)>& visit) {
  visit(current);
  for (int a = next; a < c.size(); ++a) {
    const VertexSet grown = current.with(a);
    const auto& through = c.nubs_through(a);
    const bool blocked =
        std::any_of(through.begin(), through.end(), [grown](VertexSet d) { return d.subset_of(grown); });
    if (!blocked) extend(c, grown, a + 1, visit);
  }
}

}  // namespace

void for_each_independent(const Configuration& c, const std::function<void(VertexSet)>& visit, int cap) {
  if (c.size() > cap) {
    throw Error(ErrorCode::TooLarge, std::to_string(c.size()) + " vertices exceed the enumeration cap of " +
                                         std::to_string(cap));
  }
  extend(c, VertexSet(), 0, visit);
}

std::vector<VertexSet> enumerate_independence_sets(const Configuration& c, int cap) {
  std::vector<VertexSet> out;
  for_each_independent(c, [&](VertexSet x) { out.push_back(x); }, cap);
  std::sort(out.begin(), out.end(), BySizeThenBits{});
  return out;
}

bool is_parallel(const Configuration& c, VertexSet x, VertexSet y) {
  if (!c.is_independent(x) || !c.is_independent(y)) {
    throw Error(ErrorCode::NotIndependent, "is_parallel needs independent arguments");
  }
  return !x.intersects(y) && c.is_independent(x | y);
}

VertexSet RelativeView::to_original(VertexSet local) const {
  VertexSet out;
  local.for_each([&](int i) { out = out.with(original_index[static_cast<std::size_t>(i)]); });
  return out;
}

VertexSet RelativeView::to_local(VertexSet original) const {
  VertexSet out;
  for (std::size_t i = 0; i < original_index.size(); ++i) {
    if (original.contains(original_index[i])) out = out.with(static_cast<int>(i));
  }
  return out;
}

RelativeView relative_configuration(const Configuration& c, VertexSet x) {
  if (!x.subset_of(c.vertices()) || !c.is_independent(x)) {
    throw Error(ErrorCode::NotIndependent, "relative configuration needs an independent anchor");
  }
  RelativeView view;
  view.anchor = x;
  for (int a = 0; a < c.size(); ++a) {
    if (!x.contains(a) && c.is_independent(x.with(a))) {
      view.vertices = view.vertices.with(a);
      view.original_index.push_back(a);
    }
  }
  // x + y is dependent iff some nub d has d - x inside y; such traces have at
  // least two vertices whenever they fit in the relative vertex set.
  std::vector<VertexSet> traces;
  for (VertexSet d : c.nubs()) {
    const VertexSet trace = d - x;
    if (trace.subset_of(view.vertices)) traces.push_back(trace);
  }
  view.relative_nubs = antichain_reduce(std::move(traces));

  std::vector<std::string> labels;
  labels.reserve(view.original_index.size());
  for (int v : view.original_index) labels.push_back(c.label(v));
  std::vector<VertexSet> local_nubs;
  local_nubs.reserve(view.relative_nubs.size());
  for (VertexSet d : view.relative_nubs) local_nubs.push_back(view.to_local(d));
  view.standalone =
      Configuration::from_nubs(static_cast<int>(view.original_index.size()), std::move(labels), local_nubs);
  return view;
}

std::string canonical_key(const Configuration& c) {
  std::ostringstream os;
  os << c.size() << ':' << std::hex;
  for (VertexSet d : c.nubs()) os << d.bits() << ',';
  return os.str();
}

}  // namespace confspace
