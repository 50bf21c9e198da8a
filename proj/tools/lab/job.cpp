#include "job.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace lab {

using nlohmann::json;

namespace {

const std::vector<std::string> kCatalogKeys = {"n", "m", "dim", "scale_p"};

std::vector<std::string> with_catalog(std::vector<std::string> keys) {
  keys.insert(keys.end(), kCatalogKeys.begin(), kCatalogKeys.end());
  std::sort(keys.begin(), keys.end());
  return keys;
}

[[noreturn]] void fail(const std::string& msg) { throw InputError(msg); }

std::string scalar_text(const json& v, const std::string& path) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  fail(path + ": expected a string or an integer");
}

hav::Rational rational_of(const json& v, const std::string& path) {
  try {
    return hav::parse_rational(scalar_text(v, path));
  } catch (const hav::Error& e) {
    fail(path + ": " + e.what());
  }
}

hav::Rational rational_of(const std::string& text, const std::string& what) {
  try {
    return hav::parse_rational(text);
  } catch (const hav::Error& e) {
    fail(what + ": " + e.what());
  }
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) fail(path + ": expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool known = std::any_of(keys.begin(), keys.end(), [&](const char* x) { return k == x; });
    if (!known) fail(path + ": unknown key '" + k + "'");
  }
}

void expect_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path + ": expected an array");
}

void expect_scalar(const json& v, const std::string& path) {
  if (!v.is_string() && !v.is_number_integer()) fail(path + ": expected a string or an integer");
}

void check_value(const json& v, const std::string& path) {
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) expect_scalar(v[i], path + "[" + std::to_string(i) + "]");
  } else {
    expect_scalar(v, path);
  }
}

void check_series(const json& s, const std::string& path) {
  expect_array(s, path);
  for (std::size_t t = 0; t < s.size(); ++t) {
    std::string p = path + "[" + std::to_string(t) + "]";
    only_keys(s[t], p, {"exponents", "coeff"});
    if (!s[t].contains("exponents") || !s[t].contains("coeff")) fail(p + ": needs exponents and coeff");
    expect_array(s[t]["exponents"], p + ".exponents");
    for (const auto& e : s[t]["exponents"])
      if (!e.is_number_unsigned()) fail(p + ".exponents: expected nonnegative integers");
    expect_scalar(s[t]["coeff"], p + ".coeff");
  }
}

}  // namespace

const std::vector<std::string>& allowed_params(const std::string& command) {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"validate", with_catalog({"L", "module", "dchi"})},
      {"cohomology", with_catalog({"L", "module", "dchi", "direction", "extra"})},
      {"tvectors", with_catalog({"L", "K", "dchi"})},
      {"norms", with_catalog({"p", "a", "N", "D", "lambda", "mu"})},
      {"suite", {}},
  };
  auto it = table.find(command);
  if (it == table.end()) fail("unknown command '" + command + "'");
  return it->second;
}

void check_document(const json& doc) {
  only_keys(doc, "$", {"field", "algebra", "module", "borel", "series", "params"});
  if (doc.contains("field")) {
    const auto& f = doc["field"];
    only_keys(f, "$.field", {"poly", "galois", "basis"});
    if (!f.contains("poly")) fail("$.field: needs poly");
    expect_array(f["poly"], "$.field.poly");
    for (const auto& c : f["poly"]) expect_scalar(c, "$.field.poly[]");
    if (f.contains("galois") && !f["galois"].is_boolean()) fail("$.field.galois: expected a boolean");
    if (f.contains("basis")) {
      expect_array(f["basis"], "$.field.basis");
      for (const auto& col : f["basis"]) check_value(col, "$.field.basis[]");
    }
  }
  if (doc.contains("algebra")) {
    const auto& a = doc["algebra"];
    if (a.contains("catalog")) {
      only_keys(a, "$.algebra", {"catalog", "params"});
      if (!a["catalog"].is_string()) fail("$.algebra.catalog: expected a string");
      if (a.contains("params")) {
        if (!a["params"].is_object()) fail("$.algebra.params: expected an object");
        for (const auto& [k, v] : a["params"].items())
          if (!v.is_number_integer()) fail("$.algebra.params." + k + ": expected an integer");
      }
    } else {
      only_keys(a, "$.algebra", {"dim", "constants", "labels"});
      if (!a.contains("dim") || !a["dim"].is_number_unsigned()) fail("$.algebra.dim: expected a nonnegative integer");
      if (a.contains("constants")) {
        expect_array(a["constants"], "$.algebra.constants");
        for (std::size_t t = 0; t < a["constants"].size(); ++t) {
          const auto& e = a["constants"][t];
          std::string p = "$.algebra.constants[" + std::to_string(t) + "]";
          if (!e.is_array() || e.size() != 4) fail(p + ": expected [i, j, k, value]");
          for (int q = 0; q < 3; ++q)
            if (!e[q].is_number_unsigned() || e[q].get<std::size_t>() == 0) fail(p + ": indices are 1-based integers");
          check_value(e[3], p + "[3]");
        }
      }
      if (a.contains("labels")) {
        expect_array(a["labels"], "$.algebra.labels");
        for (const auto& l : a["labels"])
          if (!l.is_string()) fail("$.algebra.labels: expected strings");
      }
    }
  }
  if (doc.contains("module")) {
    const auto& m = doc["module"];
    only_keys(m, "$.module", {"kind", "dchi", "actions"});
    if (!m.contains("kind") || !m["kind"].is_string()) fail("$.module.kind: expected a string");
    if (m.contains("dchi")) {
      expect_array(m["dchi"], "$.module.dchi");
      for (const auto& v : m["dchi"]) check_value(v, "$.module.dchi[]");
    }
    if (m.contains("actions")) {
      expect_array(m["actions"], "$.module.actions");
      for (const auto& mat : m["actions"]) {
        expect_array(mat, "$.module.actions[]");
        for (const auto& row : mat) {
          expect_array(row, "$.module.actions[][]");
          for (const auto& v : row) check_value(v, "$.module.actions[][][]");
        }
      }
    }
  }
  if (doc.contains("borel")) {
    only_keys(doc["borel"], "$.borel", {"toral_dim"});
    if (!doc["borel"].contains("toral_dim") || !doc["borel"]["toral_dim"].is_number_unsigned())
      fail("$.borel.toral_dim: expected a nonnegative integer");
  }
  if (doc.contains("series")) {
    only_keys(doc["series"], "$.series", {"lambda", "mu"});
    for (const auto& [k, v] : doc["series"].items()) check_series(v, "$.series." + k);
  }
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) fail("$.params: expected an object");
    for (const auto& [k, v] : doc["params"].items()) expect_scalar(v, "$.params." + k);
  }
}

void prepare(JobSpec& job) {
  if (job.input_path && job.catalog) fail("--in and --catalog are mutually exclusive");
  if (job.input_path) {
    std::ifstream in(*job.input_path);
    if (!in) fail("cannot read input file '" + *job.input_path + "'");
    try {
      job.document = json::parse(in);
    } catch (const json::parse_error& e) {
      fail("malformed JSON in '" + *job.input_path + "': " + e.what());
    }
    check_document(*job.document);
    if (job.document->contains("params"))
      for (const auto& [k, v] : (*job.document)["params"].items())
        if (!job.params.count(k)) job.params[k] = scalar_text(v, "$.params." + k);
  }
  const auto& keys = allowed_params(job.command);
  for (const auto& [k, v] : job.params)
    if (std::find(keys.begin(), keys.end(), k) == keys.end())
      fail("unknown parameter '" + k + "' for command " + job.command);
}

ordered_json job_echo(const JobSpec& job) {
  ordered_json e;
  e["command"] = job.command;
  if (job.catalog) e["catalog"] = *job.catalog;
  if (job.input_path) e["input"] = "file";
  if (!job.suite.empty()) e["suite"] = job.suite;
  ordered_json p = ordered_json::object();
  for (const auto& [k, v] : job.params) p[k] = v;
  e["params"] = p;
  return e;
}

std::string param_or(const JobSpec& job, const std::string& key, const std::string& fallback) {
  auto it = job.params.find(key);
  return it == job.params.end() ? fallback : it->second;
}

long long_param(const JobSpec& job, const std::string& key, long fallback) {
  auto it = job.params.find(key);
  if (it == job.params.end()) return fallback;
  try {
    std::size_t used = 0;
    long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail("parameter " + key + "=" + it->second + " is not an integer");
  }
}

hav::CatalogParams catalog_params(const JobSpec& job) {
  hav::CatalogParams out;
  if (job.document && job.document->contains("algebra") && (*job.document)["algebra"].contains("params"))
    for (const auto& [k, v] : (*job.document)["algebra"]["params"].items()) out[k] = v.get<long>();
  for (const auto& k : kCatalogKeys)
    if (job.params.count(k)) out[k] = long_param(job, k, 0);
  return out;
}

hav::NumberField job_field(const JobSpec& job) {
  if (job.params.count("L")) {
    if (job.params.count("K") && job.params.at("K") != job.params.at("L"))
      fail("only K = L is supported (got K=" + job.params.at("K") + ", L=" + job.params.at("L") + ")");
    return hav::named_field(job.params.at("L"));
  }
  if (job.params.count("K")) fail("K given without L");
  if (job.document && job.document->contains("field")) {
    const auto& f = (*job.document)["field"];
    std::vector<hav::Rational> poly;
    for (const auto& c : f["poly"]) poly.push_back(rational_of(c, "$.field.poly"));
    std::optional<hav::Matrix<hav::Rational>> basis;
    if (f.contains("basis")) {
      std::size_t n = poly.empty() ? 0 : poly.size() - 1;
      if (f["basis"].size() != n) fail("$.field.basis: expected one column per basis vector");
      hav::Matrix<hav::Rational> b(n, n, hav::Rational(0));
      for (std::size_t c = 0; c < n; ++c) {
        const auto& col = f["basis"][c];
        if (!col.is_array() || col.size() != n) fail("$.field.basis: columns need n power coordinates");
        for (std::size_t r = 0; r < n; ++r) b(r, c) = rational_of(col[r], "$.field.basis");
      }
      basis = std::move(b);
    }
    return hav::validate_field(poly, basis, f.value("galois", false));
  }
  return hav::NumberField::rationals();
}

namespace {

hav::FieldElement element_of(const hav::NumberField& field, const json& v, const std::string& path) {
  if (!v.is_array()) return field.from_rational(rational_of(v, path));
  if (v.size() != field.degree()) fail(path + ": expected " + std::to_string(field.degree()) + " power coordinates");
  std::vector<hav::Rational> coords;
  for (const auto& c : v) coords.push_back(rational_of(c, path));
  return field.element(std::move(coords));
}

AlgebraInput from_algebra(const hav::LieAlgebra& g, const hav::NumberField& field, std::string name) {
  AlgebraInput in{field, g.dim(), {}, g.labels(), std::nullopt, std::move(name)};
  auto iota = hav::Embedding::from_rationals(field);
  for (const auto& c : g.constants()) in.constants.push_back(iota(c));
  return in;
}

AlgebraInput catalog_input(const std::string& name, const JobSpec& job, const hav::NumberField& field) {
  auto params = catalog_params(job);
  try {
    if (name == "borel_sl2" || name == "borel_sl3") {
      auto b = hav::catalog_borel(name, params);
      AlgebraInput in = from_algebra(b.algebra, field, name);
      in.toral_dim = b.toral_dim;
      return in;
    }
    return from_algebra(hav::catalog(name, params), field, name);
  } catch (const hav::Error& e) {
    if (e.kind() == hav::ErrorKind::UnknownName) fail(e.what());
    throw;
  }
}

}  // namespace

AlgebraInput job_algebra_input(const JobSpec& job) {
  hav::NumberField field = job_field(job);
  if (job.catalog) return catalog_input(*job.catalog, job, field);
  if (!job.document || !job.document->contains("algebra")) fail("no algebra given: use --catalog or an input file");
  const auto& a = (*job.document)["algebra"];
  if (a.contains("catalog")) {
    auto in = catalog_input(a["catalog"].get<std::string>(), job, field);
    if (job.document->contains("borel")) in.toral_dim = (*job.document)["borel"]["toral_dim"].get<std::size_t>();
    return in;
  }
  std::size_t d = a["dim"].get<std::size_t>();
  AlgebraInput in{field, d, std::vector<hav::FieldElement>(d * d * d, field.zero()), {}, std::nullopt, "input"};
  if (a.contains("constants"))
    for (const auto& e : a["constants"]) {
      std::size_t i = e[0].get<std::size_t>() - 1, j = e[1].get<std::size_t>() - 1, k = e[2].get<std::size_t>() - 1;
      if (i >= d || j >= d || k >= d) fail("$.algebra.constants: index out of range for dim " + std::to_string(d));
      auto v = element_of(field, e[3], "$.algebra.constants");
      in.constants[(i * d + j) * d + k] = v;
      // i < j entries imply their antisymmetric partner; others are taken as written.
      if (i < j) in.constants[(j * d + i) * d + k] = -v;
    }
  if (a.contains("labels")) in.labels = a["labels"].get<std::vector<std::string>>();
  if (job.document->contains("borel")) in.toral_dim = (*job.document)["borel"]["toral_dim"].get<std::size_t>();
  return in;
}

hav::LieAlgebra job_algebra(const JobSpec& job) {
  auto in = job_algebra_input(job);
  return hav::validate_algebra(in.field, in.dim, in.constants, in.labels);
}

namespace {

std::vector<hav::FieldElement> dchi_values(const JobSpec& job, const hav::NumberField& field, std::size_t dim) {
  std::vector<hav::FieldElement> values;
  if (job.params.count("dchi")) {
    std::string text = job.params.at("dchi");
    if (text == "zero") return std::vector<hav::FieldElement>(dim, field.zero());
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(field.from_rational(rational_of(item, "dchi")));
  } else if (job.document && job.document->contains("module") && (*job.document)["module"].contains("dchi")) {
    for (const auto& v : (*job.document)["module"]["dchi"]) values.push_back(element_of(field, v, "$.module.dchi"));
  } else {
    return std::vector<hav::FieldElement>(dim, field.zero());
  }
  if (values.size() != dim) fail("dchi needs " + std::to_string(dim) + " values");
  return values;
}

}  // namespace

hav::LieModule job_module(const JobSpec& job, const hav::LieAlgebra& g) {
  std::string kind = "trivial";
  const json* doc_module = nullptr;
  if (job.document && job.document->contains("module")) {
    doc_module = &(*job.document)["module"];
    kind = (*doc_module)["kind"].get<std::string>();
  }
  kind = param_or(job, "module", kind);
  if (kind == "trivial") return hav::trivial_module(g);
  if (kind == "adjoint") return hav::adjoint_module(g);
  if (kind == "dual_adjoint") return hav::dual_module(hav::adjoint_module(g));
  if (kind == "character") {
    auto chi = hav::validate_character(g, dchi_values(job, g.field(), g.dim()));
    return hav::one_dim_module(g, chi);
  }
  if (kind == "explicit") {
    if (!doc_module || !doc_module->contains("actions")) fail("explicit module needs $.module.actions");
    const auto& acts = (*doc_module)["actions"];
    if (acts.size() != g.dim()) fail("$.module.actions: expected one matrix per basis vector");
    std::vector<hav::FMatrix> mats;
    for (const auto& mat : acts) {
      std::size_t m = mat.size();
      hav::FMatrix a(m, m, g.zero());
      for (std::size_t r = 0; r < m; ++r) {
        if (mat[r].size() != m) fail("$.module.actions: matrices must be square");
        for (std::size_t c = 0; c < m; ++c) a(r, c) = element_of(g.field(), mat[r][c], "$.module.actions");
      }
      mats.push_back(std::move(a));
    }
    return hav::validate_module(g, std::move(mats));
  }
  fail("unknown module kind '" + kind + "'");
}

hav::RadiusParam job_radius(const JobSpec& job) {
  long p = long_param(job, "p", 3);
  hav::Rational a = rational_of(param_or(job, "a", "3/4"), "a");
  try {
    return hav::RadiusParam::make(p, a);
  } catch (const hav::Error& e) {
    fail(e.what());
  }
}

std::optional<hav::TruncatedPBWSeries> job_series(const JobSpec& job, const std::string& key, const hav::LieAlgebra& g,
                                                  std::size_t truncation) {
  hav::TruncatedPBWSeries s(g, truncation);
  auto add = [&](const std::vector<unsigned>& e, const hav::Rational& c) {
    if (e.size() != g.dim()) fail(key + ": exponent vectors need " + std::to_string(g.dim()) + " entries");
    s.add_term(e, c);
  };
  if (job.params.count(key)) {
    std::stringstream terms(job.params.at(key));
    std::string term;
    while (std::getline(terms, term, ';')) {
      auto colon = term.find(':');
      if (colon == std::string::npos) fail(key + ": terms look like coeff:e1,e2,...");
      hav::Rational c = rational_of(term.substr(0, colon), key);
      std::vector<unsigned> e;
      std::stringstream exps(term.substr(colon + 1));
      std::string x;
      while (std::getline(exps, x, ',')) {
        try {
          std::size_t used = 0;
          long v = std::stol(x, &used);
          if (used != x.size() || v < 0) throw std::invalid_argument("bad");
          e.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
          fail(key + ": bad exponent '" + x + "'");
        }
      }
      add(e, c);
    }
    return s;
  }
  if (job.document && job.document->contains("series") && (*job.document)["series"].contains(key)) {
    for (const auto& t : (*job.document)["series"][key])
      add(t["exponents"].get<std::vector<unsigned>>(), rational_of(t["coeff"], "$.series." + key));
    return s;
  }
  return std::nullopt;
}

}  // namespace lab
