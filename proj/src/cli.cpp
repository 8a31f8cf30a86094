#include "confspace/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "confspace/datasets.hpp"
#include "confspace/error.hpp"
#include "confspace/io.hpp"
#include "confspace/mobius.hpp"
#include "confspace/probspace.hpp"
#include "confspace/structure.hpp"

namespace confspace::cli {

namespace {

struct Options {
  std::string command;
  std::string input;
  std::string name;
  std::optional<std::string> t;
  std::optional<std::string> set;
  std::size_t order = 8;
  std::size_t length = 8;
  std::uint64_t count = 10000;
  std::uint64_t seed = 1;
  bool pretty = false;
  int max_n = kDefaultEnumerationCap;
  int n = 8;
  int trials = 200;
};

struct Outcome {
  Json payload = Json::object();
  int code = kOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Context {
 public:
  Context(const Options& options, WeightedConfiguration wc) : options(options), wc_(std::move(wc)) {}

  const Options& options;
  const Configuration& config() const { return wc_.config; }
  const Valuation& valuation() const { return wc_.valuation; }
  const MobiusFamily& family() {
    if (!family_) family_.emplace(wc_.config, wc_.valuation, options.max_n);
    return *family_;
  }

  Rational t() const {
    if (!options.t) throw UsageError("--t is required");
    return parse_rational(*options.t);
  }

 private:
  WeightedConfiguration wc_;
  std::optional<MobiusFamily> family_;
};

// mpq get_d truncates; strtod on a long exact expansion rounds to nearest.
std::string decimal(const Rational& q) {
  BigInt ten40;
  mpz_ui_pow_ui(ten40.get_mpz_t(), 10, 40);
  const BigInt scaled = q.get_num() * ten40 / q.get_den();
  const std::string exact = to_string(scaled) + "e-40";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", std::strtod(exact.c_str(), nullptr));
  return buf;
}

Json root_decimal(const AlgebraicRoot& r) {
  return decimal(r.is_rational() ? r.lo() : Rational((r.lo() + r.hi()) / 2));
}

Json integer_json(const BigInt& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

Json sets_json(const Configuration& c, const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (VertexSet x : sets) out.push_back(set_to_json(c, x));
  return out;
}

std::vector<std::pair<VertexSet, Rational>> sorted_atoms(const std::map<VertexSet, Rational>& atoms) {
  std::vector<std::pair<VertexSet, Rational>> out(atoms.begin(), atoms.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return BySizeThenBits{}(a.first, b.first); });
  return out;
}

Json out_of_range_json(const Configuration& c, const Rational& t, const OutOfRangeError& e) {
  Json out;
  out["t"] = to_string(t);
  out["error"] = std::string(to_string(e.code()));
  out["message"] = e.what();
  out["witness"] = set_to_json(c, e.witness());
  out["value"] = to_string(e.value());
  return out;
}

Outcome cmd_mobius(Context& ctx) {
  Outcome o;
  const Polynomial& mu = ctx.family().mobius();
  o.payload["mu"] = polynomial_to_json(mu);
  o.payload["text"] = mu.to_string();
  return o;
}

Outcome cmd_relative(Context& ctx) {
  if (!ctx.options.set) throw UsageError("--set is required");
  const Configuration& c = ctx.config();
  const VertexSet x = parse_set(c, *ctx.options.set);
  const RelativeView view = relative_configuration(c, x);
  Outcome o;
  o.payload["set"] = set_to_json(c, x);
  o.payload["vertices"] = set_to_json(c, view.vertices);
  o.payload["nubs"] = sets_json(c, view.relative_nubs);
  o.payload["mu"] = polynomial_to_json(ctx.family().relative(x));
  o.payload["transform"] = polynomial_to_json(ctx.family().transform(x));
  return o;
}

Outcome cmd_critical_root(Context& ctx) {
  const CriticalRoot cr = critical_root(ctx.family());
  Outcome o;
  o.payload["t0"] = root_to_json(cr.root);
  o.payload["t0_decimal"] = root_decimal(cr.root);
  o.payload["attained_at"] = sets_json(ctx.config(), cr.attained_at);
  return o;
}

Json rest_json(const Rest& rest) {
  if (rest.exact) return to_string(rest.value);
  Json out;
  out["sign"] = rest.sign;
  out["lo"] = to_string(rest.enclosure.lo);
  out["hi"] = to_string(rest.enclosure.hi);
  return out;
}

Outcome cmd_classify(Context& ctx) {
  const Classification cls = classify(ctx.family());
  Outcome o;
  o.payload["mu"] = polynomial_to_json(ctx.family().mobius());
  o.payload["t0"] = root_to_json(cls.critical_root);
  o.payload["t0_decimal"] = root_decimal(cls.critical_root);
  o.payload["type"] = std::string(to_string(cls.type));
  o.payload["rest"] = rest_json(cls.rest);
  o.payload["attained_at"] = sets_json(ctx.config(), cls.attained_at);
  return o;
}

Json atoms_json(const Configuration& c, const std::map<VertexSet, Rational>& atoms) {
  Json out = Json::array();
  for (const auto& [x, mass] : sorted_atoms(atoms)) {
    Json a;
    a["x"] = set_to_json(c, x);
    a["mass"] = to_string(mass);
    out.push_back(std::move(a));
  }
  return out;
}

Outcome cmd_space(Context& ctx) {
  const Rational t = ctx.t();
  Outcome o;
  try {
    const ConfiguredSpace space = canonical_space(ctx.family(), t);
    const Rational& rest = space.atoms.at(VertexSet());
    o.payload["t"] = to_string(t);
    o.payload["atoms"] = atoms_json(ctx.config(), space.atoms);
    o.payload["rest"] = to_string(rest);
    o.payload["covering"] = rest == 0;
  } catch (const OutOfRangeError& e) {
    o.payload = out_of_range_json(ctx.config(), t, e);
    o.code = kViolation;
  }
  return o;
}

Outcome cmd_verify(Context& ctx) {
  const Rational t = ctx.t();
  Outcome o;
  try {
    const RealizationReport r = verify_realization(canonical_space(ctx.family(), t));
    o.payload["t"] = to_string(t);
    o.payload["ok"] = r.ok();
    o.payload["mass_ok"] = r.mass_ok;
    o.payload["nonnegative_ok"] = r.nonnegative_ok;
    o.payload["marginals_ok"] = r.marginals_ok;
    o.payload["independence_ok"] = r.independence_ok;
    o.payload["exclusivity_ok"] = r.exclusivity_ok;
    o.payload["covering"] = r.covering;
    o.payload["rest"] = to_string(r.rest);
    o.payload["violations"] = r.violations;
    if (!r.ok()) o.code = kViolation;
  } catch (const OutOfRangeError& e) {
    o.payload = out_of_range_json(ctx.config(), t, e);
    o.code = kViolation;
  }
  return o;
}

Outcome cmd_sample(Context& ctx) {
  const Rational t = ctx.t();
  Outcome o;
  try {
    const ConfiguredSpace space = canonical_space(ctx.family(), t);
    const auto tally = sample(space, ctx.options.count, ctx.options.seed);
    o.payload["t"] = to_string(t);
    o.payload["count"] = ctx.options.count;
    o.payload["seed"] = ctx.options.seed;
    Json counts = Json::array();
    for (const auto& [x, mass] : sorted_atoms(space.atoms)) {
      Json e;
      e["x"] = set_to_json(ctx.config(), x);
      e["count"] = tally.at(x);
      e["mass"] = to_string(mass);
      counts.push_back(std::move(e));
    }
    o.payload["counts"] = std::move(counts);
  } catch (const OutOfRangeError& e) {
    o.payload = out_of_range_json(ctx.config(), t, e);
    o.code = kViolation;
  }
  return o;
}

Outcome cmd_decompose(Context& ctx) {
  const Configuration& c = ctx.config();
  const Decomposition d = components(c);
  Outcome o;
  o.payload["irreducible"] = d.components.size() == 1;
  Json parts = Json::array();
  Polynomial product = Polynomial::constant(1);
  for (const Component& comp : d.components) {
    const Polynomial mu = mobius_polynomial(comp.config, restrict_valuation(ctx.valuation(), comp), ctx.options.max_n);
    product = product * mu;
    Json part;
    part["vertices"] = comp.config.labels();
    part["nubs"] = sets_json(comp.config, comp.config.nubs());
    part["mu"] = polynomial_to_json(mu);
    parts.push_back(std::move(part));
  }
  o.payload["components"] = std::move(parts);
  const bool matches = product == ctx.family().mobius();
  o.payload["product_matches"] = matches;
  if (!matches) o.code = kViolation;
  return o;
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Outcome cmd_right_angled(Context& ctx) {
  const RightAngledReport r = right_angled_properties(ctx.config(), ctx.valuation(), ctx.options.max_n);
  Outcome o;
  o.payload["type"] = r.type_one ? "I" : "II";
  o.payload["irreducible"] = r.irreducible;
  o.payload["simple_root"] = optional_bool(r.simple_root);
  o.payload["relatives_positive"] = optional_bool(r.relatives_positive);
  o.payload["monotone"] = r.monotone;
  o.payload["monotone_checks"] = r.monotone_checks;
  o.payload["ok"] = r.ok();
  if (!r.ok()) o.code = kViolation;
  return o;
}

Outcome cmd_series(Context& ctx) {
  const Series s = series_inverse(ctx.family().mobius(), ctx.options.order);
  const bool right_angled = is_right_angled(ctx.config());
  Outcome o;
  o.payload["order"] = ctx.options.order;
  o.payload["coefficients"] = Json::array();
  for (const auto& c : s.coefficients) o.payload["coefficients"].push_back(to_string(c));
  o.payload["nonnegative"] = s.nonnegative();
  o.payload["right_angled"] = right_angled;
  if (right_angled && !s.nonnegative()) o.code = kViolation;
  return o;
}

Outcome cmd_cf_count(Context& ctx) {
  const Configuration& c = ctx.config();
  const Valuation& f = ctx.valuation();
  if (!is_right_angled(c)) throw Error(ErrorCode::NotRightAngled, "cf-count needs pair nubs only");
  const Series s = series_inverse(ctx.family().mobius(), ctx.options.length);
  Outcome o;
  Json counts = Json::array();
  bool matches = true;
  for (std::size_t len = 0; len <= ctx.options.length; ++len) {
    if (f.is_uniform()) {
      const BigInt n = trace_count_cf(c, len);
      counts.push_back(integer_json(n));
      matches = matches && Rational(n) == s.coefficients[len];
    } else {
      const Rational w = trace_weight_cf(c, f, len);
      counts.push_back(to_string(w));
      matches = matches && w == s.coefficients[len];
    }
  }
  o.payload["length"] = ctx.options.length;
  o.payload["counts"] = std::move(counts);
  o.payload["matches_series"] = matches;
  if (!matches) o.code = kViolation;
  return o;
}

Outcome cmd_symmetric_counts(Context& ctx) {
  const SymmetricCounts sc = symmetric_counts(ctx.config(), ctx.options.max_n);
  Outcome o;
  Json counts = Json::array();
  for (const auto& n : sc.counts) counts.push_back(integer_json(n));
  Json eta = Json::array();
  for (const auto& e : sc.eta) eta.push_back(integer_json(e));
  o.payload["counts"] = std::move(counts);
  o.payload["eta"] = std::move(eta);
  o.payload["undefined_level"] = sc.undefined_level ? Json(*sc.undefined_level) : Json(nullptr);
  o.payload["formula_ok"] = sc.formula_ok;
  o.payload["coefficient_form_ok"] = sc.coefficient_form_ok;
  if (!sc.undefined_level && !(sc.formula_ok && sc.coefficient_form_ok)) o.code = kViolation;
  return o;
}

Outcome cmd_builtin(const Options& options) {
  Outcome o;
  if (options.name.empty()) {
    o.payload["names"] = builtin_names();
    return o;
  }
  const Configuration c = builtin(options.name);
  o.payload["name"] = options.name;
  o.payload["configuration"] = config_to_json(c, Valuation::uniform(c.size()));
  return o;
}

struct Tally {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
};

Outcome cmd_check_identities(const Options& options) {
  if (options.n < 1 || options.n > 10) throw UsageError("--n must lie in 1..10");
  if (options.trials < 0) throw UsageError("--trials must be non-negative");
  SplitMix64 rng(options.seed);
  std::map<std::string, Tally> checks;
  std::vector<std::string> failures;
  const auto record = [&](const std::string& check, int trial, bool ok) {
    auto& t = checks[check];
    if (ok) {
      ++t.passed;
      return;
    }
    ++t.failed;
    if (failures.size() < 10) failures.push_back(check + " failed on trial " + std::to_string(trial));
  };

  for (int trial = 0; trial < options.trials; ++trial) {
    const int n = static_cast<int>(rng.between(1, options.n));
    const Configuration c = random_configuration(n, rng);
    const Valuation f = random_valuation(n, rng);
    const MobiusFamily family(c, f, options.n);

    record("derivative_identity", trial, derivative_identity_residual(family).is_zero());
    record("inversion", trial, inversion_check(c, f));
    bool routes = true;
    for (VertexSet x : family.independence_sets()) routes = routes && family.transform(x) == mobius_transform_by_sum(c, f, x);
    record("transform_routes", trial, routes);

    const int m = static_cast<int>(rng.between(1, 4));
    const Configuration b = random_configuration(m, rng);
    const Valuation g = random_valuation(m, rng);
    const Configuration u = disjoint_union(c, b);
    const Valuation fg = concatenate(f, g);
    const Polynomial mu_u = mobius_polynomial(u, fg, options.n + 4);
    Polynomial product = Polynomial::constant(1);
    for (const Component& comp : components(u).components) {
      product = product * mobius_polynomial(comp.config, restrict_valuation(fg, comp), options.n + 4);
    }
    record("decomposition_product", trial, product == mu_u && mu_u == family.mobius() * mobius_polynomial(b, g));

    const AlgebraicRoot t0 = critical_root(family).root;
    const Rational t = t0.lo() / 2;
    record("realization", trial, verify_realization(canonical_space(family, t)).ok());
  }

  Outcome o;
  o.payload["n"] = options.n;
  o.payload["trials"] = options.trials;
  o.payload["seed"] = options.seed;
  Json summary = Json::object();
  bool all_ok = true;
  for (const auto& [name, t] : checks) {
    summary[name] = {{"passed", t.passed}, {"failed", t.failed}};
    all_ok = all_ok && t.failed == 0;
  }
  o.payload["checks"] = std::move(summary);
  o.payload["failures"] = failures;
  if (!all_ok) o.code = kViolation;
  return o;
}

using Handler = std::function<Outcome(Context&)>;

const std::map<std::string_view, Handler>& config_handlers() {
  static const std::map<std::string_view, Handler> handlers{
      {"mobius", cmd_mobius},
      {"relative", cmd_relative},
      {"critical-root", cmd_critical_root},
      {"classify", cmd_classify},
      {"space", cmd_space},
      {"verify", cmd_verify},
      {"sample", cmd_sample},
      {"decompose", cmd_decompose},
      {"right-angled", cmd_right_angled},
      {"series", cmd_series},
      {"cf-count", cmd_cf_count},
      {"symmetric-counts", cmd_symmetric_counts},
  };
  return handlers;
}

WeightedConfiguration load_config(const Options& options) {
  if (!options.name.empty() && !options.input.empty()) throw UsageError("give --input or --name, not both");
  if (!options.name.empty()) {
    Configuration c = builtin(options.name);
    Valuation f = Valuation::uniform(c.size());
    return {std::move(c), std::move(f)};
  }
  return read_config(options.input.empty() ? "-" : options.input);
}

Json options_json(const Options& o) {
  Json j;
  j["command"] = o.command;
  j["name"] = o.name;
  j["n"] = o.n;
  j["trials"] = o.trials;
  j["seed"] = o.seed;
  return j;
}

Json make_report(const std::string& command, const std::string& digest, Json payload) {
  Json report;
  report["schema_version"] = std::string(kSchemaVersion);
  report["command"] = command;
  report["input_digest"] = digest;
  report["payload"] = std::move(payload);
  return report;
}

void pretty_summary(std::ostream& err, const std::string& command, const Json& payload, int code) {
  err << command << (code == kOk ? " ok" : code == kViolation ? " found a violation" : " failed") << '\n';
  for (const auto& [key, value] : payload.items()) {
    std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    if (text.size() > 160) text = text.substr(0, 157) + "...";
    err << "  " << key << ": " << text << '\n';
  }
}

}  // namespace

const std::vector<CommandInfo>& command_table() {
  static const std::vector<CommandInfo> table{
      {"mobius", "mobius_polynomial", true},
      {"relative", "relative_configuration + relative_mobius", true},
      {"critical-root", "critical_root", true},
      {"classify", "classify", true},
      {"space", "canonical_space", true},
      {"verify", "verify_realization", true},
      {"sample", "sample", true},
      {"decompose", "components", true},
      {"right-angled", "right_angled_properties", true},
      {"series", "series_inverse", true},
      {"cf-count", "trace_count_cf", true},
      {"symmetric-counts", "symmetric_counts", true},
      {"builtin", "builtin", false},
      {"check-identities", "random identity sweep", false},
  };
  return table;
}

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Configured spaces: Möbius polynomials, critical roots and canonical spaces", "confspace"};
  std::vector<std::string> names;
  for (const auto& info : command_table()) names.emplace_back(info.name);
  app.add_option("command", options.command, "Command to run")->required()->check(CLI::IsMember(names));
  app.add_option("--input", options.input, "Configuration file (JSON or text); '-' for stdin");
  app.add_option("--name", options.name, "Built-in configuration");
  app.add_option("--t", options.t, "Parameter t as p/q");
  app.add_option("--set", options.set, "Independent set as comma separated labels");
  app.add_option("--order", options.order, "Series order");
  app.add_option("--length", options.length, "Trace length");
  app.add_option("--count", options.count, "Number of samples");
  app.add_option("--seed", options.seed, "Random seed");
  app.add_flag("--pretty", options.pretty, "Human readable summary on stderr");
  app.add_option("--max-n", options.max_n, "Largest vertex count to enumerate");
  app.add_option("--n", options.n, "Largest random configuration (check-identities)");
  app.add_option("--trials", options.trials, "Number of random configurations (check-identities)");

  const auto fail = [&](std::string_view code, const std::string& message) {
    err << "error: " << message << '\n';
    Json payload;
    payload["error"] = {{"code", std::string(code)}, {"message", message}};
    out << make_report(options.command, fnv1a_hex(""), std::move(payload)).dump() << '\n';
    return static_cast<int>(kUsage);
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail("Usage", e.what());
  }

  try {
    if (options.max_n < 0 || options.max_n > kMaxVertices) throw UsageError("--max-n must lie in 0..64");
    Outcome outcome;
    std::string digest;
    const auto& handlers = config_handlers();
    if (const auto it = handlers.find(options.command); it != handlers.end()) {
      WeightedConfiguration wc = load_config(options);
      if (wc.config.size() > options.max_n) {
        throw Error(ErrorCode::TooLarge, std::to_string(wc.config.size()) + " vertices exceed --max-n " +
                                             std::to_string(options.max_n));
      }
      digest = fnv1a_hex(config_to_json(wc.config, wc.valuation).dump());
      Context ctx(options, std::move(wc));
      outcome = it->second(ctx);
    } else {
      digest = fnv1a_hex(options_json(options).dump());
      outcome = options.command == "builtin" ? cmd_builtin(options) : cmd_check_identities(options);
    }
    const Json report = make_report(options.command, digest, outcome.payload);
    out << report.dump() << '\n';
    if (options.pretty) pretty_summary(err, options.command, outcome.payload, outcome.code);
    return outcome.code;
  } catch (const UsageError& e) {
    return fail("Usage", e.what());
  } catch (const Error& e) {
    return fail(to_string(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail("Internal", e.what());
  }
}

}  // namespace confspace::cli
