// Thin pybind11 layer. Rationals cross as "p/q" strings; the Python package
// turns them into fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "confspace/cli.hpp"
#include "confspace/datasets.hpp"
#include "confspace/error.hpp"
#include "confspace/io.hpp"
#include "confspace/mobius.hpp"
#include "confspace/probspace.hpp"
#include "confspace/structure.hpp"

namespace py = pybind11;
using namespace confspace;

namespace {

using Labels = std::vector<std::string>;

std::vector<std::string> strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (long k = 0; k <= p.degree(); ++k) out.push_back(to_string(p[static_cast<std::size_t>(k)]));
  return out;
}

Labels labels_of(const Configuration& c, VertexSet x) {
  Labels out;
  x.for_each([&](int v) { out.push_back(c.label(v)); });
  return out;
}

VertexSet set_of(const Configuration& c, const Labels& labels) {
  VertexSet x;
  for (const auto& l : labels) x = x.with(c.index_of(l));
  return x;
}

Rational rational_of(const std::string& text) { return parse_rational(text); }

py::dict root_dict(const AlgebraicRoot& r) {
  py::dict d;
  d["rational"] = r.is_rational();
  d["lo"] = to_string(r.lo());
  d["hi"] = to_string(r.hi());
  d["witness"] = strings(r.witness());
  d["approx"] = r.lo().get_d();
  return d;
}

class PyConfiguration {
 public:
  explicit PyConfiguration(WeightedConfiguration wc) : wc_(std::move(wc)) {}

  const Configuration& config() const { return wc_.config; }
  const Valuation& valuation() const { return wc_.valuation; }
  MobiusFamily family() const { return MobiusFamily(wc_.config, wc_.valuation); }

 private:
  WeightedConfiguration wc_;
};

PyConfiguration weighted(Configuration c) {
  Valuation f = Valuation::uniform(c.size());
  return PyConfiguration({std::move(c), std::move(f)});
}

}  // namespace

PYBIND11_MODULE(_confspace, m) {
  m.doc() = "Configurations of events, Mobius polynomials and configured spaces";

  static py::exception<Error> error(m, "ConfspaceError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object code = py::str(std::string(to_string(e.code())));
      PyErr_SetObject(error.ptr(), py::make_tuple(code, e.what()).ptr());
    }
  });

  py::class_<PyConfiguration>(m, "Configuration")
      .def_static("parse", [](const std::string& text) { return PyConfiguration(parse_config(text)); })
      .def_static("builtin", [](const std::string& name) { return weighted(builtin(name)); })
      .def_static("star", [](int n, int k) { return weighted(star(n, k)); })
      .def_static("from_nubs",
                  [](const Labels& vertices, const std::vector<Labels>& nubs) {
                    Json j{{"vertices", vertices}, {"nubs", nubs}};
                    return PyConfiguration(parse_config_json(j.dump()));
                  })
      .def_property_readonly("size", [](const PyConfiguration& c) { return c.config().size(); })
      .def_property_readonly("labels", [](const PyConfiguration& c) { return c.config().labels(); })
      .def_property_readonly("nubs",
                             [](const PyConfiguration& c) {
                               std::vector<Labels> out;
                               for (VertexSet d : c.config().nubs()) out.push_back(labels_of(c.config(), d));
                               return out;
                             })
      .def_property_readonly("weights",
                             [](const PyConfiguration& c) {
                               std::vector<std::string> out;
                               for (const Rational& w : c.valuation().weights()) out.push_back(to_string(w));
                               return out;
                             })
      .def("to_json", [](const PyConfiguration& c) { return config_to_json(c.config(), c.valuation()).dump(); })
      .def("is_independent",
           [](const PyConfiguration& c, const Labels& x) { return c.config().is_independent(set_of(c.config(), x)); })
      .def("independence_sets",
           [](const PyConfiguration& c) {
             std::vector<Labels> out;
             for (VertexSet x : enumerate_independence_sets(c.config())) out.push_back(labels_of(c.config(), x));
             return out;
           })
      .def("mobius", [](const PyConfiguration& c) { return strings(mobius_polynomial(c.config(), c.valuation())); })
      .def("relative_mobius",
           [](const PyConfiguration& c, const Labels& x) {
             return strings(relative_mobius(c.config(), c.valuation(), set_of(c.config(), x)));
           })
      .def("critical_root",
           [](const PyConfiguration& c) {
             const CriticalRoot r = critical_root(c.config(), c.valuation());
             py::dict d = root_dict(r.root);
             std::vector<Labels> at;
             for (VertexSet x : r.attained_at) at.push_back(labels_of(c.config(), x));
             d["attained_at"] = at;
             return d;
           })
      .def("classify",
           [](const PyConfiguration& c) {
             const Classification cls = classify(c.config(), c.valuation());
             py::dict d;
             d["type"] = std::string(to_string(cls.type));
             d["t0"] = root_dict(cls.critical_root);
             d["rest_sign"] = cls.rest.sign;
             if (cls.rest.exact) {
               d["rest"] = to_string(cls.rest.value);
             } else {
               d["rest"] = py::none();
             }
             return d;
           })
      .def("canonical_space",
           [](const PyConfiguration& c, const std::string& t) {
             const ConfiguredSpace s = canonical_space(c.config(), c.valuation(), rational_of(t));
             std::vector<std::pair<Labels, std::string>> out;
             for (const auto& [x, mass] : s.atoms) out.emplace_back(labels_of(c.config(), x), to_string(mass));
             return out;
           })
      .def("verify",
           [](const PyConfiguration& c, const std::string& t) {
             const RealizationReport r = verify_realization(canonical_space(c.config(), c.valuation(), rational_of(t)));
             py::dict d;
             d["ok"] = r.ok();
             d["covering"] = r.covering;
             d["rest"] = to_string(r.rest);
             d["violations"] = r.violations;
             return d;
           })
      .def("components",
           [](const PyConfiguration& c) {
             std::vector<PyConfiguration> out;
             for (const Component& comp : components(c.config()).components) {
               out.emplace_back(WeightedConfiguration{comp.config, restrict_valuation(c.valuation(), comp)});
             }
             return out;
           })
      .def("is_irreducible", [](const PyConfiguration& c) { return is_irreducible(c.config()); })
      .def("is_right_angled", [](const PyConfiguration& c) { return is_right_angled(c.config()); })
      .def("trace_series",
           [](const PyConfiguration& c, std::size_t order) {
             std::vector<std::string> out;
             for (const Rational& q : trace_series(c.config(), c.valuation(), order).coefficients) out.push_back(to_string(q));
             return out;
           })
      .def("trace_count", [](const PyConfiguration& c, std::size_t length) { return to_string(trace_count_cf(c.config(), length)); })
      .def("symmetric_counts", [](const PyConfiguration& c) {
        const SymmetricCounts sc = symmetric_counts(c.config());
        py::dict d;
        std::vector<std::string> counts;
        std::vector<std::string> eta;
        for (const BigInt& z : sc.counts) counts.push_back(to_string(z));
        for (const BigInt& z : sc.eta) eta.push_back(to_string(z));
        d["counts"] = counts;
        d["eta"] = eta;
        d["formula_ok"] = sc.formula_ok;
        if (sc.undefined_level) {
          d["undefined_level"] = *sc.undefined_level;
        } else {
          d["undefined_level"] = py::none();
        }
        return d;
      });

  m.def("builtin_names", &builtin_names);
  m.def("series_inverse", [](const std::vector<std::string>& coeffs, std::size_t order) {
    std::vector<Rational> c;
    for (const auto& s : coeffs) c.push_back(rational_of(s));
    std::vector<std::string> out;
    for (const Rational& q : series_inverse(Polynomial(std::move(c)), order).coefficients) out.push_back(to_string(q));
    return out;
  });
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
