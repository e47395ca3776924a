#include "planar/json_io.hpp"
#include "planar/suites.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace planar {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& what) { throw FormatError("invalid document: " + what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

int require_int(const json& j, const char* key) {
  const auto& v = require(j, key);
  if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

json scalar_to_json(const Rational& v) { return ScalarTraits<Rational>::to_string(v); }

json scalar_to_json(double v) {
  if (!std::isfinite(v)) throw PreconditionError("cannot serialize a non-finite coefficient");
  return v;
}

template <Scalar S>
S scalar_from_json(const json& v);

template <>
Rational scalar_from_json<Rational>(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  bad("rational values must be \"p/q\" strings or integers");
}

template <>
double scalar_from_json<double>(const json& v) {
  if (!v.is_number()) bad("float64 values must be numbers");
  return v.get<double>();
}

Word word_from_json(const json& v) {
  if (!v.is_array()) bad("\"word\" must be an array of letters");
  Word w;
  for (const auto& letter : v) {
    if (!letter.is_number_integer()) bad("letters must be integers");
    const auto x = letter.get<long long>();
    if (x < 1 || x > 65535) bad("letter out of range");
    w.push_back(static_cast<int>(x));
  }
  return w;
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (auto letter : w.letters()) out.push_back(static_cast<int>(letter));
  return out;
}

template <Scalar S>
json series_json(const BasicSeries<S>& f, const SeriesMeta& meta) {
  json j;
  j["alphabet"] = f.alphabet();
  j["max_degree"] = f.max_degree();
  j["scalar"] = std::string(ScalarTraits<S>::name);
  if (!meta.role.empty()) j["role"] = meta.role;
  if (!meta.variable.empty()) j["variable"] = meta.variable;
  json coeffs = json::array();
  for (const auto& [w, c] : f.terms()) coeffs.push_back({{"word", word_to_json(w)}, {"value", scalar_to_json(c)}});
  j["coeffs"] = std::move(coeffs);
  return j;
}

std::string scalar_kind(const json& j) {
  const auto& s = require(j, "scalar");
  if (!s.is_string()) bad("\"scalar\" must be a string");
  const auto kind = s.get<std::string>();
  if (kind != "rational" && kind != "float64") bad("unknown scalar kind '" + kind + "'");
  return kind;
}

template <Scalar S>
BasicSeries<S> series_from_json(const json& j) {
  const int alphabet = require_int(j, "alphabet");
  const int degree = require_int(j, "max_degree");
  if (alphabet < 1) bad("alphabet must be positive");
  if (degree < 0) bad("max_degree must be non-negative");
  if (scalar_kind(j) != ScalarTraits<S>::name) bad("expected scalar kind " + std::string(ScalarTraits<S>::name));
  const auto& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) bad("\"coeffs\" must be an array");
  BasicSeries<S> out(alphabet, degree);
  for (const auto& entry : coeffs) {
    const Word w = word_from_json(require(entry, "word"));
    if (!w.fits(alphabet)) bad("word " + w.to_string() + " uses letters outside the alphabet");
    if (static_cast<int>(w.degree()) > degree) bad("word " + w.to_string() + " exceeds max_degree");
    out.accumulate(w, scalar_from_json<S>(require(entry, "value")));
  }
  return out;
}

SeriesMeta meta_from_json(const json& j) {
  SeriesMeta meta;
  if (auto it = j.find("role"); it != j.end()) {
    if (!it->is_string()) bad("\"role\" must be a string");
    meta.role = it->get<std::string>();
  }
  if (auto it = j.find("variable"); it != j.end()) {
    if (!it->is_string()) bad("\"variable\" must be a string");
    meta.variable = it->get<std::string>();
  }
  return meta;
}

json structure_json(const TreeNode& node, int& label) {
  if (node.is_leaf()) return label++;
  json out = json::array();
  for (const auto& c : node.children) out.push_back(structure_json(c, label));
  return out;
}

TreeNode structure_from_json(const json& j, int& label) {
  if (j.is_number_integer()) {
    if (j.get<int>() != label) bad("leaf labels must run 2..n from left to right");
    ++label;
    return TreeNode::leaf();
  }
  if (!j.is_array() || j.size() < 2) bad("internal vertices need at least two children");
  TreeNode node;
  for (const auto& c : j) node.children.push_back(structure_from_json(c, label));
  return node;
}

}  // namespace

template <Scalar S>
std::string series_to_json(const BasicSeries<S>& f, const SeriesMeta& meta) {
  return dump(series_json(f, meta));
}

SeriesDocument parse_series_document(std::string_view text) {
  const json j = parse_text(text);
  const auto meta = meta_from_json(j);
  if (scalar_kind(j) == "rational") return {series_from_json<Rational>(j), meta};
  return {series_from_json<double>(j), meta};
}

template <Scalar S>
BasicSeries<S> parse_series(std::string_view text) {
  return series_from_json<S>(parse_text(text));
}

template <Scalar S>
std::string field_to_json(const BasicField<S>& g) {
  json comps = json::array();
  for (const auto& c : g.components()) comps.push_back(series_json(c, {}));
  return dump(json{{"components", std::move(comps)}});
}

template <Scalar S>
BasicField<S> parse_field(std::string_view text) {
  const json j = parse_text(text);
  const auto& comps = require(j, "components");
  if (!comps.is_array() || comps.empty()) bad("\"components\" must be a non-empty array");
  std::vector<BasicSeries<S>> out;
  for (const auto& c : comps) out.push_back(series_from_json<S>(c));
  try {
    return BasicField<S>(std::move(out));
  } catch (const PreconditionError& e) {
    bad(e.what());
  }
}

template <Scalar S>
std::string effective_action_to_json(const EffectiveAction<S>& l) {
  json j = series_json(l.series(), {"effective_action", "phi"});
  json cov = json::array();
  const auto& m = l.covariance();
  for (int r = 0; r < m.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(scalar_to_json(m(r, c)));
    cov.push_back(std::move(row));
  }
  j["covariance"] = std::move(cov);
  return dump(j);
}

template <Scalar S>
EffectiveAction<S> parse_effective_action(std::string_view text) {
  const json j = parse_text(text);
  auto series = series_from_json<S>(j);
  const auto& cov = require(j, "covariance");
  const int n = series.alphabet();
  if (!cov.is_array() || static_cast<int>(cov.size()) != n) bad("covariance must be an n x n array");
  SquareMatrix<S> m(n);
  for (int r = 0; r < n; ++r) {
    const auto& row = cov[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) bad("covariance must be an n x n array");
    for (int c = 0; c < n; ++c) m(r, c) = scalar_from_json<S>(row[static_cast<std::size_t>(c)]);
  }
  try {
    return EffectiveAction<S>(std::move(series), std::move(m));
  } catch (const PreconditionError& e) {
    bad(e.what());
  }
}

template <Scalar S>
std::string l_table_csv(const EffectiveAction<S>& l) {
  std::ostringstream out;
  out << "word,value\n";
  for (const auto& [w, c] : l.series().terms()) out << w.to_string() << ',' << ScalarTraits<S>::to_string(c) << '\n';
  return out.str();
}

namespace {

json tree_json(const AdmissibleTree& t) {
  json j;
  j["marks"] = t.marks();
  j["root_label"] = 1;
  json leaves = json::array();
  for (int i = 2; i <= t.marks(); ++i) leaves.push_back(i);
  j["leaf_labels"] = std::move(leaves);
  int label = 2;
  j["structure"] = structure_json(t.top(), label);
  return j;
}

}  // namespace

std::string tree_to_json(const AdmissibleTree& t) { return dump(tree_json(t)); }

std::string tree_listing_to_json(int marks, const std::vector<AdmissibleTree>& trees) {
  json list = json::array();
  for (const auto& t : trees) {
    json j = tree_json(t);
    j["path"] = characteristic_path(t).to_string();
    j["term"] = feynman_term(t);
    list.push_back(std::move(j));
  }
  return dump(json{{"marks", marks}, {"count", trees.size()}, {"trees", std::move(list)}});
}

AdmissibleTree parse_tree(std::string_view text) {
  const json j = parse_text(text);
  const int marks = require_int(j, "marks");
  if (require_int(j, "root_label") != 1) bad("root_label must be 1");
  const auto& leaves = require(j, "leaf_labels");
  if (!leaves.is_array() || static_cast<int>(leaves.size()) != marks - 1) bad("leaf_labels must list 2..n");
  for (std::size_t i = 0; i < leaves.size(); ++i)
    if (!leaves[i].is_number_integer() || leaves[i].get<int>() != static_cast<int>(i) + 2) bad("leaf_labels must list 2..n");
  int label = 2;
  TreeNode top = structure_from_json(require(j, "structure"), label);
  if (label != marks + 1) bad("structure does not match marks");
  return AdmissibleTree(std::move(top));
}

namespace {

json report_json(const IdentityReport& r) {
  json j;
  j["identity"] = r.identity;
  j["max_checked_degree"] = r.max_checked_degree;
  j["passed"] = r.passed();
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"where", x.where}, {"word", word_to_json(x.word)}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  j["violations"] = std::move(v);
  return j;
}

}  // namespace

std::string report_to_json(const IdentityReport& r) { return dump(report_json(r)); }

std::string suite_to_json(const SuiteResult& result) {
  json j;
  j["suite"] = result.suite;
  j["seed"] = result.options.seed;
  j["degree"] = result.options.degree;
  j["alphabet"] = result.options.alphabet;
  j["instances"] = result.options.instances;
  if (result.suite == "theorem") j["max_length"] = result.options.max_length;
  j["passed"] = result.passed();
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(report_json(r));
  j["reports"] = std::move(reports);
  j["notes"] = result.notes;
  return dump(j);
}

template std::string series_to_json(const Series&, const SeriesMeta&);
template std::string series_to_json(const FloatSeries&, const SeriesMeta&);
template Series parse_series<Rational>(std::string_view);
template FloatSeries parse_series<double>(std::string_view);
template std::string field_to_json(const Field&);
template std::string field_to_json(const FloatField&);
template Field parse_field<Rational>(std::string_view);
template FloatField parse_field<double>(std::string_view);
template std::string effective_action_to_json(const EffectiveAction<Rational>&);
template std::string effective_action_to_json(const EffectiveAction<double>&);
template EffectiveAction<Rational> parse_effective_action<Rational>(std::string_view);
template EffectiveAction<double> parse_effective_action<double>(std::string_view);
template std::string l_table_csv(const EffectiveAction<Rational>&);
template std::string l_table_csv(const EffectiveAction<double>&);

}  // namespace planar
