// rackbi: command line front end.
//
// Exit codes: 0 all checks pass, 1 axiom violation, 2 schema error, 3 budget exceeded.
// A JSON report is always written (stdout unless --report is given).

#include "json_io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace rackbi;
using io::json;

namespace {

struct Budgets {
  std::size_t max_order = io::env_budget("RACKBI_MAX_ORDER", 3);     // k in S(h)_(k)
  std::size_t max_carrier = io::env_budget("RACKBI_MAX_CARRIER", 35); // dim S(h)_(k)
  std::size_t max_hbar = io::env_budget("RACKBI_MAX_HBAR", 8);       // N in mod h^N
  std::size_t max_dim = io::env_budget("RACKBI_MAX_DIM", 4);         // dim R for the complex
  std::size_t max_n = io::env_budget("RACKBI_MAX_N", 2);

  void override_from(const json& j)
  {
    auto take = [&](const char* key, std::size_t& slot) {
      if (!j.contains(key)) return;
      if (!j.at(key).is_number_unsigned() || j.at(key).get<std::size_t>() == 0)
        throw io::SchemaError(std::string("budget '") + key + "' must be a positive integer");
      slot = j.at(key).get<std::size_t>();
    };
    take("order", max_order);
    take("carrier", max_carrier);
    take("hbar_order", max_hbar);
    take("max_dim", max_dim);
    take("max_n", max_n);
  }
  DeformationBudget deformation() const { return {max_dim, static_cast<unsigned>(max_n)}; }
};

struct Outcome {
  json body = json::object();
  Report report;
};

QVec parse_vector(const std::string& s, std::size_t n)
{
  json a = json::array();
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) a.push_back(item);
  return io::vec(a, n);
}

std::size_t binomial(std::size_t n, std::size_t k)
{
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n + i) / i;
  return r;
}

// --- commands -------------------------------------------------------------

Outcome cmd_check_leibniz(const json& in)
{
  LeibnizAlgebra h = io::leibniz_unchecked(in);
  Outcome o;
  o.report.checks.push_back(leibniz_identity_check(h));
  o.body["dim"] = h.dim();
  if (o.report.all_passed()) {
    o.body["lie"] = h.is_lie();
    o.body["abelian"] = h.is_abelian();
    LeibnizIdeal q = squares_ideal(h), z = left_center(h);
    o.body["dim_squares_ideal"] = q.span.dim();
    o.body["dim_left_center"] = z.span.dim();
  }
  return o;
}

Outcome cmd_build_uar(const json& in, unsigned k, IdealChoice z, const Budgets& b)
{
  LeibnizAlgebra h = io::leibniz(in);
  if (k > b.max_order) throw BudgetExceeded("order k", k, b.max_order);
  std::size_t dim = binomial(h.dim(), k);
  if (dim > b.max_carrier) throw BudgetExceeded("dim S(h)_(k)", dim, b.max_carrier);
  RackBialgebra rb = uar_infinity(h, k, z);
  Outcome o;
  o.report = rack_bialgebra_report(rb);
  Checker prim("primitives reproduce the bracket");
  if (k >= 1) {
    LeibnizAlgebra p = primitives_leibniz(rb);
    for (std::size_t a = 0; a < h.dim(); ++a)
      for (std::size_t c = 0; c < h.dim(); ++c)
        prim.expect(p.bracket(a, c) == h.bracket(a, c), {a, c},
                    [&] { return std::pair{h.show(p.bracket(a, c)), h.show(h.bracket(a, c))}; });
  }
  o.report.checks.push_back(prim.result());
  RackBialgebra other = uar_infinity(h, k, z == IdealChoice::squares ? IdealChoice::left_center : IdealChoice::squares);
  Checker same("product independent of the ideal");
  for (std::size_t a = 0; a < rb.dim(); ++a)
    for (std::size_t c = 0; c < rb.dim(); ++c) same.expect_eq(rb.op(a, c), other.op(a, c), {a, c}, rb.carrier.labels);
  o.report.checks.push_back(same.result());
  o.report.checks.push_back(filtration_stability_check(rb));
  o.report.checks.push_back(yang_baxter_check(rb));
  o.body["carrier"] = rb.carrier.labels;
  o.body["order"] = k;
  o.body["ideal"] = z == IdealChoice::squares ? "squares" : "left-center";
  json prod = json::array();
  for (std::size_t a = 0; a < rb.dim(); ++a)
    for (std::size_t c = 0; c < rb.dim(); ++c)
      if (!rb.op(a, c).empty()) prod.push_back({{"a", rb.carrier.label(a)}, {"b", rb.carrier.label(c)}, {"value", rb.show(rb.op(a, c))}});
  o.body["product"] = prod;
  return o;
}

Outcome cmd_star(const json& in, const std::string& xs, const std::string& ys, const std::string& zs, std::size_t N,
                 const Budgets& b)
{
  LeibnizAlgebra h = io::leibniz(in);
  if (N == 0) throw io::SchemaError("order N must be positive");
  if (N > b.max_hbar) throw BudgetExceeded("h-order N", N, b.max_hbar);
  QVec x = parse_vector(xs, h.dim()), y = parse_vector(ys, h.dim());
  StarExp s = star_exp(h, x, y, N);
  Outcome o;
  o.report.checks.push_back(s.check);
  if (!zs.empty()) o.report.append(star_rack_selfdist_check(h, x, y, parse_vector(zs, h.dim()), N));
  o.body["order"] = N;
  o.body["lhs"] = io::poly(s.lhs);
  o.body["rhs"] = io::poly(s.rhs);
  json r = json::array();
  for (const auto& c : s.rack) r.push_back(io::series(c));
  o.body["x_rack_y"] = r;
  return o;
}

json basis_json(const std::vector<QVec>& v, const std::vector<std::string>& labels)
{
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x, labels));
  return a;
}

Outcome cmd_suschkewitsch(const json& in)
{
  std::string kind = io::kind_of(in);
  Outcome o;
  o.body["kind"] = kind;
  if (kind == "right_group" || kind == "group") {
    HopfData H = kind == "group" ? group_algebra(io::group(in)) : io::right_group(in);
    o.report = right_hopf_report(H);
    Suschkewitsch s = suschkewitsch(H, false);
    o.report.append(s.report);
    o.body["dim"] = H.dim();
    o.body["hopf_part"] = basis_json(s.h1, H.coalg.labels);
    o.body["idempotent_part"] = basis_json(s.idem, H.coalg.labels);
  } else if (kind == "augmented_rack") {
    AugmentedRackBialgebra A = augmented_rack_algebra(io::augmented_rack(in));
    AugmentedDialgebra D = dialgebra_from_augmented(A);
    o.report = augmented_report(A);
    o.report.append(hopf_dialgebra_report(D.d));
    o.report.append(augmented_bracket_report(A, D));
    StructureDecomposition s = structure_decomposition(D.d, false);
    o.report.append(s.report);
    Checker idem("idempotents are b (x) p(b)^-1");
    auto expect = augmented_idempotents(A, D);
    Subspace want(D.d.dim, expect), got(D.d.dim, s.idem);
    idem.expect(want.contains(got) && got.contains(want), {},
                [&] { return std::pair{std::to_string(expect.size()), std::to_string(s.idem.size())}; });
    o.report.checks.push_back(idem.result());
    o.body["dim"] = D.d.dim;
    o.body["hopf_part"] = basis_json(s.hopf, D.d.labels);
    o.body["idempotent_part"] = basis_json(s.idem, D.d.labels);
  } else
    throw io::SchemaError("suschkewitsch expects a group, right group or augmented rack, got " + kind);
  return o;
}

Outcome cmd_deform(const json& in, unsigned max_n, const std::string& carrier, const Budgets& b)
{
  std::string kind = io::kind_of(in);
  RackBialgebra rb;
  if (kind == "leibniz") {
    LeibnizAlgebra h = io::leibniz(in);
    if (carrier == "ur") rb = ur(h);
    else if (carrier == "trivial") rb = trivial_rack_bialgebra(SymCoalgebra(h.dim(), 1).coalgebra());
    else throw io::SchemaError("--carrier must be ur or trivial");
  } else if (kind == "rack")
    rb = rack_group_algebra(io::rack(in));
  else
    throw io::SchemaError("deform expects a Leibniz algebra or a rack, got " + kind);
  DeformationBudget budget = b.deformation();
  if (max_n > budget.max_n) throw BudgetExceeded("max degree", max_n, budget.max_n);
  DeformationComplex D(rb, budget);
  Outcome o;
  o.report = mu_n_report(D);
  o.report.append(verify_complex(D, max_n));
  json dims = json::object();
  for (unsigned n = 1; n <= max_n + 1; ++n) dims[std::to_string(n)] = D.cochains(n).size();
  o.body["carrier"] = rb.carrier.labels;
  o.body["cochain_dims"] = dims;
  if (max_n >= 2) {
    H2 h = h2(D);
    o.body["H2"] = {{"C2", h.cochains}, {"Z2", h.cocycles}, {"B2", h.coboundaries}, {"H2", h.cohomology}};
  }
  return o;
}

// --- driver ---------------------------------------------------------------

/// Runs one command and turns exceptions into the exit-code scheme.
std::pair<json, int> guarded(const std::string& name, const std::function<Outcome()>& f)
{
  json j{{"command", name}};
  try {
    Outcome o = f();
    j["result"] = o.body;
    j["checks"] = io::report(o.report);
    j["passed"] = o.report.all_passed();
    return {j, o.report.all_passed() ? 0 : 1};
  } catch (const io::SchemaError& e) {
    j["error"] = {{"kind", "schema"}, {"message", e.what()}};
    j["passed"] = false;
    return {j, 2};
  } catch (const json::exception& e) {
    j["error"] = {{"kind", "schema"}, {"message", e.what()}};
    j["passed"] = false;
    return {j, 2};
  } catch (const BudgetExceeded& e) {
    j["error"] = {{"kind", "budget"}, {"message", e.what()}, {"needed", e.needed}, {"allowed", e.allowed}};
    j["passed"] = false;
    return {j, 3};
  } catch (const DegreeCapExceeded& e) {
    j["error"] = {{"kind", "budget"}, {"message", e.what()}};
    j["passed"] = false;
    return {j, 3};
  } catch (const AxiomViolation& e) {
    j["error"] = {{"kind", "axiom"}, {"message", e.what()},
                  {"witness", {{"axiom", e.axiom}, {"indices", e.witness}, {"lhs", e.lhs}, {"rhs", e.rhs}}}};
    j["passed"] = false;
    return {j, 1};
  } catch (const std::invalid_argument& e) {
    // structure tables that fail their own axioms (rack, group, action)
    j["error"] = {{"kind", "axiom"}, {"message", e.what()}};
    j["passed"] = false;
    return {j, 1};
  }
}

std::string latex_escape(const std::string& s)
{
  std::string out;
  for (char c : s) {
    switch (c) {
    case '\\': out += "\\textbackslash{}"; break;
    case '{': case '}': case '_': case '#': case '&': case '%': case '$': out += '\\'; out += c; break;
    case '^': out += "\\^{}"; break;
    case '~': out += "\\~{}"; break;
    case '|': out += "\\textbar{}"; break;
    case '<': out += "\\textless{}"; break;
    case '>': out += "\\textgreater{}"; break;
    default: out += c;
    }
  }
  return out;
}

void collect_rows(const json& step, std::vector<std::array<std::string, 4>>& rows)
{
  if (step.contains("steps")) {
    for (const auto& s : step.at("steps")) collect_rows(s, rows);
    return;
  }
  std::string cmd = step.value("command", "");
  if (step.contains("checks"))
    for (const auto& c : step.at("checks"))
      rows.push_back({cmd, c.at("name").get<std::string>(), std::to_string(c.at("cases").get<std::size_t>()),
                      c.at("passed").get<bool>() ? "pass" : "FAIL"});
  if (step.contains("error")) rows.push_back({cmd, step.at("error").at("message").get<std::string>(), "-", "error"});
}

void write_latex(const std::string& path, const json& report)
{
  std::vector<std::array<std::string, 4>> rows;
  collect_rows(report, rows);
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "\\begin{tabular}{llrl}\n\\hline\ncommand & identity & cases & status \\\\\n\\hline\n";
  for (const auto& r : rows)
    out << latex_escape(r[0]) << " & \\texttt{" << latex_escape(r[1]) << "} & " << r[2] << " & " << r[3] << " \\\\\n";
  out << "\\hline\n\\end{tabular}\n";
}

void write_report(const std::string& path, const json& report)
{
  std::string text = report.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

IdealChoice ideal_choice(const std::string& s)
{
  if (s == "squares") return IdealChoice::squares;
  if (s == "left-center") return IdealChoice::left_center;
  throw io::SchemaError("--ideal must be squares or left-center");
}

std::string str_param(const json& step, const char* key, const std::string& fallback)
{
  if (!step.contains(key)) return fallback;
  const json& v = step.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + (x.is_string() ? x.get<std::string>() : x.dump());
    return s;
  }
  throw io::SchemaError(std::string("'") + key + "' must be a string or an array");
}

std::size_t int_param(const json& step, const char* key, std::size_t fallback)
{
  if (!step.contains(key)) return fallback;
  if (!step.at(key).is_number_unsigned()) throw io::SchemaError(std::string("'") + key + "' must be a non-negative integer");
  return step.at(key).get<std::size_t>();
}

/// One pipeline step from a manifest.
std::pair<json, int> run_step(const json& step, const std::map<std::string, json>& inputs, const Budgets& b)
{
  std::string cmd = step.value("command", "");
  return guarded(cmd, [&]() -> Outcome {
    auto it = inputs.find(step.value("input", ""));
    if (it == inputs.end()) throw io::SchemaError("step input '" + step.value("input", "") + "' is not declared");
    const json& in = it->second;
    if (cmd == "check-leibniz") return cmd_check_leibniz(in);
    if (cmd == "build-uar")
      return cmd_build_uar(in, static_cast<unsigned>(int_param(step, "order", 2)), ideal_choice(step.value("ideal", "squares")), b);
    if (cmd == "star")
      return cmd_star(in, str_param(step, "x", ""), str_param(step, "y", ""), str_param(step, "z", ""),
                      int_param(step, "N", 5), b);
    if (cmd == "suschkewitsch") return cmd_suschkewitsch(in);
    if (cmd == "deform")
      return cmd_deform(in, static_cast<unsigned>(int_param(step, "max_degree", 2)), step.value("carrier", "ur"), b);
    throw io::SchemaError("unknown pipeline command '" + cmd + "'");
  });
}

std::pair<json, int> run_manifest(const std::string& path, std::string& output)
{
  json m = io::load(path);
  std::filesystem::path dir = std::filesystem::path(path).parent_path();
  Budgets b;
  if (m.contains("budgets")) b.override_from(m.at("budgets"));
  std::map<std::string, json> inputs;
  for (const auto& [name, desc] : io::field(m, "inputs").items()) {
    json doc = io::load((dir / io::field(desc, "path").get<std::string>()).string());
    if (desc.contains("kind") && io::kind_of(doc) != desc.at("kind").get<std::string>())
      throw io::SchemaError("input '" + name + "' is not of kind " + desc.at("kind").get<std::string>());
    inputs[name] = doc;
  }
  if (output.empty() && m.contains("output")) output = (dir / m.at("output").get<std::string>()).string();
  json steps = json::array();
  int code = 0;
  for (const auto& step : io::field(m, "pipeline")) {
    auto [j, c] = run_step(step, inputs, b);
    steps.push_back(j);
    code = std::max(code, c);
  }
  return {json{{"manifest", path}, {"steps", steps}, {"passed", code == 0}}, code};
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"rackbi: Leibniz algebras, rack bialgebras and their checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string report_path, latex_path;
  app.add_option("--report", report_path, "JSON report path (default stdout)");
  app.add_option("--emit-latex", latex_path, "write verified identities as a LaTeX table");

  std::string file;
  unsigned order = 2, max_degree = 2;
  std::size_t N = 5;
  std::string ideal = "squares", xs, ys, zs, carrier = "ur";

  auto* cl = app.add_subcommand("check-leibniz", "validate [e_j,e_k] structure constants");
  cl->add_option("file", file, "Leibniz JSON")->required();
  auto* bu = app.add_subcommand("build-uar", "build and certify UAR(h)_(k)");
  bu->add_option("file", file, "Leibniz JSON")->required();
  bu->add_option("-k,--order", order, "truncation order k");
  bu->add_option("--ideal", ideal, "squares or left-center");
  auto* st = app.add_subcommand("star", "e^x |>_h e^y against e^(x |>> y) mod h^N");
  st->add_option("file", file, "Leibniz JSON")->required();
  st->add_option("--x", xs, "comma separated rationals")->required();
  st->add_option("--y", ys, "comma separated rationals")->required();
  st->add_option("--z", zs, "optional third vector for self-distributivity");
  st->add_option("-N,--order", N, "h-order");
  auto* su = app.add_subcommand("suschkewitsch", "decompose a right group or an augmented rack dialgebra");
  su->add_option("file", file, "group, right group or augmented rack JSON")->required();
  auto* de = app.add_subcommand("deform", "deformation complex checks and H^2");
  de->add_option("file", file, "Leibniz or rack JSON")->required();
  de->add_option("--max-degree", max_degree, "highest cochain degree n for the checks");
  de->add_option("--carrier", carrier, "for Leibniz input: ur or trivial");
  auto* ru = app.add_subcommand("run", "run a manifest pipeline");
  ru->add_option("manifest", file, "manifest JSON")->required();

  CLI11_PARSE(app, argc, argv);

  std::pair<json, int> out;
  try {
    Budgets b;
    if (*ru) {
      out = run_manifest(file, report_path);
    } else {
      auto load = [&] { return io::load(file); };
      if (*cl) out = guarded("check-leibniz", [&] { return cmd_check_leibniz(load()); });
      if (*bu) out = guarded("build-uar", [&] { return cmd_build_uar(load(), order, ideal_choice(ideal), b); });
      if (*st) out = guarded("star", [&] { return cmd_star(load(), xs, ys, zs, N, b); });
      if (*su) out = guarded("suschkewitsch", [&] { return cmd_suschkewitsch(load()); });
      if (*de) out = guarded("deform", [&] { return cmd_deform(load(), max_degree, carrier, b); });
      out.first["input"] = file;
    }
  } catch (const io::SchemaError& e) {
    out = {json{{"error", {{"kind", "schema"}, {"message", e.what()}}}, {"passed", false}}, 2};
  } catch (const json::exception& e) {
    out = {json{{"error", {{"kind", "schema"}, {"message", e.what()}}}, {"passed", false}}, 2};
  }
  write_report(report_path, out.first);
  if (!latex_path.empty()) write_latex(latex_path, out.first);
  if (!report_path.empty() && report_path != "-")
    std::cerr << (out.second == 0 ? "pass" : "fail") << " (exit " << out.second << "), report in " << report_path << "\n";
  return out.second;
}
