#include "confspace/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "confspace/error.hpp"

namespace confspace {

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

// Re-raises configuration errors as ValidationError naming the violated rule.
template <typename Build>
auto validated(Build&& build) {
  try {
    return build();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::SingletonNub:
      case ErrorCode::MissingSingleton:
        throw Error(ErrorCode::ValidationError, std::string("every singleton must be independent: ") + e.what());
      case ErrorCode::NotDownwardClosed:
        throw Error(ErrorCode::ValidationError, std::string("the independence family must be downward closed: ") + e.what());
      case ErrorCode::NonPositiveWeight:
        throw Error(ErrorCode::ValidationError, std::string("weights must be positive: ") + e.what());
      case ErrorCode::VertexOutOfRange:
      case ErrorCode::TooManyVertices:
        throw Error(ErrorCode::ValidationError, e.what());
      default:
        throw;
    }
  }
}

Rational rational_field(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      parse_error(where, e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  parse_error(where, "expected a rational string \"p/q\"");
}

int vertex_index(const std::map<std::string, int>& index, const std::string& label, const std::string& where) {
  const auto it = index.find(label);
  if (it == index.end()) parse_error(where, "unknown vertex '" + label + "'");
  return it->second;
}

VertexSet set_field(const Json& j, const std::map<std::string, int>& index, const std::string& where) {
  if (!j.is_array()) parse_error(where, "expected an array of vertex labels");
  VertexSet out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) parse_error(w, "expected a vertex label");
    out = out.with(vertex_index(index, j[i].get<std::string>(), w));
  }
  return out;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream is{std::string(text)};
  std::string word;
  while (is >> word) out.push_back(word);
  return out;
}

std::map<std::string, int> index_labels(const std::vector<std::string>& labels, const std::string& where) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index.emplace(labels[i], static_cast<int>(i)).second) parse_error(where, "duplicate vertex '" + labels[i] + "'");
  }
  return index;
}

}  // namespace

WeightedConfiguration parse_config_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error("json", e.what());
  }
  if (!doc.is_object()) parse_error("json", "expected an object");
  if (!doc.contains("vertices")) parse_error("vertices", "missing");
  const Json& vs = doc["vertices"];
  if (!vs.is_array()) parse_error("vertices", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].is_string()) {
      labels.push_back(vs[i].get<std::string>());
    } else if (vs[i].is_number_integer()) {
      labels.push_back(std::to_string(vs[i].get<long>()));
    } else {
      parse_error("vertices[" + std::to_string(i) + "]", "expected a label");
    }
  }
  if (labels.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(ErrorCode::ValidationError, "at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  const auto index = index_labels(labels, "vertices");
  const int n = static_cast<int>(labels.size());

  const bool has_nubs = doc.contains("nubs");
  const bool has_sets = doc.contains("independent_sets");
  if (has_nubs && has_sets) parse_error("nubs", "give either nubs or independent_sets, not both");

  Configuration config;
  if (has_sets) {
    const Json& sets = doc["independent_sets"];
    if (!sets.is_array()) parse_error("independent_sets", "expected an array");
    std::vector<VertexSet> family;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      family.push_back(set_field(sets[i], index, "independent_sets[" + std::to_string(i) + "]"));
    }
    config = validated([&] { return Configuration::from_independence_list(n, labels, family); });
  } else {
    std::vector<VertexSet> nubs;
    if (has_nubs) {
      const Json& ns = doc["nubs"];
      if (!ns.is_array()) parse_error("nubs", "expected an array");
      for (std::size_t i = 0; i < ns.size(); ++i) nubs.push_back(set_field(ns[i], index, "nubs[" + std::to_string(i) + "]"));
    }
    config = validated([&] { return Configuration::from_nubs(n, labels, nubs); });
  }

  std::vector<Rational> weights(static_cast<std::size_t>(n), Rational(1));
  if (doc.contains("weights")) {
    const Json& ws = doc["weights"];
    if (!ws.is_object()) parse_error("weights", "expected an object mapping labels to rationals");
    for (const auto& [label, value] : ws.items()) {
      const std::string where = "weights." + label;
      weights[static_cast<std::size_t>(vertex_index(index, label, where))] = rational_field(value, where);
    }
  }
  Valuation f = validated([&] { return Valuation(weights); });
  return {std::move(config), std::move(f)};
}

WeightedConfiguration parse_config_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  int line_no = 0;
  std::optional<std::vector<std::string>> labels;
  std::map<std::string, int> index;
  std::vector<std::pair<int, std::vector<std::string>>> nub_lines;
  std::vector<std::pair<int, std::vector<std::string>>> weight_lines;

  while (std::getline(is, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto words = split_words(line);
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    const auto colon = line.find(':');
    if (colon == std::string::npos) parse_error(where, "expected 'key: values'");
    const auto key_words = split_words(std::string_view(line).substr(0, colon));
    if (key_words.size() != 1) parse_error(where, "expected a single key before ':'");
    const std::string& key = key_words[0];
    auto values = split_words(std::string_view(line).substr(colon + 1));
    if (key == "vertices") {
      if (labels) parse_error(where, "vertices given twice");
      labels = values;
      if (labels->size() > static_cast<std::size_t>(kMaxVertices)) {
        throw Error(ErrorCode::ValidationError, "at most " + std::to_string(kMaxVertices) + " vertices are supported");
      }
      index = index_labels(*labels, where);
    } else if (key == "nub") {
      nub_lines.emplace_back(line_no, std::move(values));
    } else if (key == "weight") {
      if (values.size() != 2) parse_error(where, "expected 'weight: <vertex> <p/q>'");
      weight_lines.emplace_back(line_no, std::move(values));
    } else {
      parse_error(where, "unknown key '" + key + "'");
    }
  }
  if (!labels) parse_error("line " + std::to_string(line_no), "missing 'vertices:' line");

  const int n = static_cast<int>(labels->size());
  std::vector<VertexSet> nubs;
  for (const auto& [no, words] : nub_lines) {
    VertexSet d;
    for (const auto& w : words) d = d.with(vertex_index(index, w, "line " + std::to_string(no)));
    nubs.push_back(d);
  }
  Configuration config = validated([&] { return Configuration::from_nubs(n, *labels, nubs); });

  std::vector<Rational> weights(static_cast<std::size_t>(n), Rational(1));
  for (const auto& [no, words] : weight_lines) {
    const std::string where = "line " + std::to_string(no);
    const int v = vertex_index(index, words[0], where);
    try {
      weights[static_cast<std::size_t>(v)] = parse_rational(words[1]);
    } catch (const Error& e) {
      parse_error(where, e.what());
    }
  }
  Valuation f = validated([&] { return Valuation(weights); });
  return {std::move(config), std::move(f)};
}

WeightedConfiguration parse_config(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_config_json(text);
  return parse_config_text(text);
}

WeightedConfiguration read_config(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return parse_config(buffer.str());
}

Json config_to_json(const Configuration& c, const Valuation& f) {
  Json out;
  out["vertices"] = c.labels();
  Json nubs = Json::array();
  for (VertexSet d : c.nubs()) nubs.push_back(set_to_json(c, d));
  out["nubs"] = std::move(nubs);
  Json weights = Json::object();
  for (int v = 0; v < c.size(); ++v) weights[c.label(v)] = to_string(f.weight(v));
  out["weights"] = std::move(weights);
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) parse_error("polynomial", "expected an array of coefficients");
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(rational_field(j[i], "polynomial[" + std::to_string(i) + "]"));
  return Polynomial(std::move(coeffs));
}

Json root_to_json(const AlgebraicRoot& root) {
  if (root.is_rational()) return to_string(root.lo());
  Json out;
  out["witness"] = polynomial_to_json(root.witness());
  out["lo"] = to_string(root.lo());
  out["hi"] = to_string(root.hi());
  return out;
}

AlgebraicRoot root_from_json(const Json& j) {
  if (j.is_string()) return AlgebraicRoot::exact(rational_field(j, "root"));
  if (!j.is_object() || !j.contains("witness") || !j.contains("lo") || !j.contains("hi")) {
    parse_error("root", "expected \"p/q\" or {witness, lo, hi}");
  }
  return AlgebraicRoot(polynomial_from_json(j["witness"]), rational_field(j["lo"], "root.lo"), rational_field(j["hi"], "root.hi"));
}

Json set_to_json(const Configuration& c, VertexSet x) {
  Json out = Json::array();
  x.for_each([&](int v) { out.push_back(c.label(v)); });
  return out;
}

VertexSet parse_set(const Configuration& c, std::string_view text) {
  VertexSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    const auto words = split_words(text.substr(start, end - start));
    if (words.size() > 1) parse_error("--set", "labels are separated by commas");
    if (words.empty()) {
      if (comma != std::string_view::npos || start != 0) parse_error("--set", "empty label");
    } else {
      const int v = c.index_of(words[0]);
      if (v < 0) parse_error("--set", "unknown vertex '" + words[0] + "'");
      out = out.with(v);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace confspace
