#pragma once

// JSON readers for the CLI input formats and writers for reports.

#include <rackbi/deformation.hpp>
#include <rackbi/right_hopf_dialg.hpp>
#include <rackbi/star_product.hpp>

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

namespace rackbi::io {

using json = nlohmann::json;

/// Malformed input document; exit code 2.
class SchemaError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline json load(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

inline const json& field(const json& j, const std::string& key)
{
  if (!j.is_object() || !j.contains(key)) throw SchemaError("missing field '" + key + "'");
  return j.at(key);
}

/// "p/q", "p" or a JSON integer.
inline Q rational(const json& j)
{
  if (j.is_number_integer()) return Q(j.get<long>());
  if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string or an integer");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

inline std::string str(const Q& q) { return pretty(q); }

inline std::vector<std::string> names(const json& j, const std::string& key)
{
  const json& a = field(j, key);
  if (!a.is_array() || a.empty()) throw SchemaError("'" + key + "' must be a non-empty array");
  std::vector<std::string> out;
  for (const auto& x : a) {
    if (!x.is_string()) throw SchemaError("'" + key + "' entries must be strings");
    if (std::find(out.begin(), out.end(), x.get<std::string>()) != out.end())
      throw SchemaError("duplicate element " + x.get<std::string>());
    out.push_back(x.get<std::string>());
  }
  return out;
}

inline std::size_t position(const std::vector<std::string>& elems, const json& x)
{
  if (!x.is_string()) throw SchemaError("element references must be strings");
  auto it = std::find(elems.begin(), elems.end(), x.get<std::string>());
  if (it == elems.end()) throw SchemaError("unknown element " + x.get<std::string>());
  return static_cast<std::size_t>(it - elems.begin());
}

/// {"x": {"y": "z"}} over the element list, every entry required.
inline std::vector<std::vector<std::size_t>> table(const std::vector<std::string>& rows,
                                                   const std::vector<std::string>& cols,
                                                   const std::vector<std::string>& values, const json& j)
{
  if (!j.is_object()) throw SchemaError("operation table must be an object");
  std::vector<std::vector<std::size_t>> t(rows.size(), std::vector<std::size_t>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a) {
    const json& row = field(j, rows[a]);
    for (std::size_t b = 0; b < cols.size(); ++b) t[a][b] = position(values, field(row, cols[b]));
  }
  return t;
}

// Leibniz algebras: {"dim": n, "labels"?: [...], "brackets": [{"j":1,"k":2,"out":{"2":"1/2"}}]}
// with [e_j, e_k] = sum_i out[i] e_i and indices counted from 1.

inline std::size_t index1(const json& j, std::size_t n, const std::string& what)
{
  std::size_t i;
  if (j.is_number_unsigned()) i = j.get<std::size_t>();
  else if (j.is_string()) {
    try {
      std::size_t used = 0;
      i = std::stoul(j.get<std::string>(), &used);
      if (used != j.get<std::string>().size()) throw std::invalid_argument(what);
    } catch (const std::exception&) {
      throw SchemaError(what + " must be an index");
    }
  } else
    throw SchemaError(what + " must be an index");
  if (i < 1 || i > n) throw SchemaError(what + " out of range 1.." + std::to_string(n));
  return i - 1;
}

/// Structure constants without validation; the caller decides whether to check.
inline LeibnizAlgebra leibniz_unchecked(const json& j)
{
  const json& d = field(j, "dim");
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) throw SchemaError("'dim' must be a positive integer");
  std::size_t n = d.get<std::size_t>();
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = names(j, "labels");
    if (labels.size() != n) throw SchemaError("'labels' must have dim entries");
  }
  std::vector<QVec> br(n * n);
  const json& bs = field(j, "brackets");
  if (!bs.is_array()) throw SchemaError("'brackets' must be an array");
  for (const auto& b : bs) {
    std::size_t x = index1(field(b, "j"), n, "j"), y = index1(field(b, "k"), n, "k");
    const json& out = field(b, "out");
    if (!out.is_object()) throw SchemaError("'out' must be an object");
    for (const auto& [key, val] : out.items()) br[x * n + y].add(index1(json(key), n, "out index"), rational(val));
  }
  return make_leibniz_unchecked(n, std::move(br), std::move(labels));
}

inline LeibnizAlgebra leibniz(const json& j)
{
  LeibnizAlgebra h = leibniz_unchecked(j);
  return check_leibniz(h.dim(), [&] {
    std::vector<QVec> br;
    for (std::size_t a = 0; a < h.dim(); ++a)
      for (std::size_t b = 0; b < h.dim(); ++b) br.push_back(h.bracket(a, b));
    return br;
  }(), h.labels());
}

inline json to_json(const LeibnizAlgebra& h)
{
  json bs = json::array();
  for (std::size_t a = 0; a < h.dim(); ++a)
    for (std::size_t b = 0; b < h.dim(); ++b) {
      if (h.bracket(a, b).empty()) continue;
      json out = json::object();
      for (const auto& [i, c] : h.bracket(a, b)) out[std::to_string(i + 1)] = str(c);
      bs.push_back({{"j", a + 1}, {"k", b + 1}, {"out", out}});
    }
  return {{"dim", h.dim()}, {"brackets", bs}};
}

// Racks: {"elements": [...], "unit": "e", "op": {"x": {"y": "x|>y"}}}
inline FiniteRack rack(const json& j)
{
  auto el = names(j, "elements");
  std::size_t unit = position(el, field(j, "unit"));
  return FiniteRack(table(el, el, el, field(j, "op")), unit, el);
}

// Groups: {"elements": [...], "mul": {"a": {"b": "ab"}}}
inline FiniteGroup group(const json& j)
{
  auto el = names(j, "elements");
  return FiniteGroup(table(el, el, el, field(j, "mul")), el);
}

// Right groups: {"group": {...}, "points": ["p", "q"]}, first point is the base.
inline HopfData right_group(const json& j)
{
  return right_group_hopf(group(field(j, "group")), PointedSet{names(j, "points"), 0});
}

// Augmented racks: {"rack": {"elements": [...], "unit": "e"}, "group": {...},
//                   "p": {"x": "g"}, "action": {"g": {"x": "g.x"}}}
inline AugmentedRack augmented_rack(const json& j)
{
  const json& r = field(j, "rack");
  auto el = names(r, "elements");
  std::size_t base = position(el, field(r, "unit"));
  FiniteGroup G = group(field(j, "group"));
  std::vector<std::size_t> p(el.size());
  for (std::size_t x = 0; x < el.size(); ++x) p[x] = position(G.labels(), field(field(j, "p"), el[x]));
  AugmentedRack A{el, base, G, p, table(G.labels(), el, el, field(j, "action"))};
  A.validate();
  if (r.contains("op")) {
    FiniteRack given(table(el, el, el, r.at("op")), base, el);
    if (given.table() != A.rack().table()) throw SchemaError("rack op disagrees with p and the action");
  }
  return A;
}

/// Detects the document kind from its keys (or an explicit "kind").
inline std::string kind_of(const json& j)
{
  if (j.contains("kind")) return j.at("kind").get<std::string>();
  if (j.contains("brackets")) return "leibniz";
  if (j.contains("action")) return "augmented_rack";
  if (j.contains("points")) return "right_group";
  if (j.contains("op")) return "rack";
  if (j.contains("mul")) return "group";
  throw SchemaError("cannot tell the input kind");
}

inline json vec(const QVec& v, std::size_t n)
{
  json a = json::array();
  for (std::size_t i = 0; i < n; ++i) a.push_back(str(v.get(i)));
  return a;
}

inline QVec vec(const json& j, std::size_t n)
{
  if (!j.is_array() || j.size() != n) throw SchemaError("vector must have " + std::to_string(n) + " entries");
  QVec v;
  for (std::size_t i = 0; i < n; ++i) v.add(i, rational(j[i]));
  return v;
}

inline json series(const Series& s)
{
  json a = json::array();
  for (const auto& c : s.coeffs()) a.push_back(str(c));
  return a;
}

/// Coefficient table: one row per exponent vector, in increasing order.
inline json poly(const PolyFunction& f)
{
  json rows = json::array();
  for (const auto& [e, s] : f.terms()) rows.push_back({{"exponents", e}, {"series", series(s)}});
  return rows;
}

inline json check(const CheckResult& c)
{
  json j{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
  if (!c.passed) j["witness"] = {{"indices", c.witness}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  return j;
}

inline json report(const Report& r)
{
  json a = json::array();
  for (const auto& c : r.checks) a.push_back(check(c));
  return a;
}

/// Budgets read from the environment, falling back to defaults.
inline std::size_t env_budget(const char* name, std::size_t fallback)
{
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw SchemaError(std::string(name) + " must be a non-negative integer");
  }
}

} // namespace rackbi::io
