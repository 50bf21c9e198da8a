#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#ifndef LAB_DEFAULT_GOLDEN_DIR
#define LAB_DEFAULT_GOLDEN_DIR "golden/v1"
#endif

namespace lab {

namespace {

using namespace hav;

// Runs one check body, turning library errors into a failed check.
Check guarded(const std::string& name, const std::function<Check()>& body) {
  auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = body();
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    c = fail(name, e.what());
  }
  c.elapsed_us =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start).count();
  return c;
}

ordered_json module_summary(const LieModule& v) {
  ordered_json d;
  d["algebra_dim"] = num(v.algebra().dim());
  d["module_dim"] = num(v.dim());
  return d;
}

std::string direction_name(Direction d) { return d == Direction::Chain ? "chain" : "cochain"; }

}  // namespace

// ---------------------------------------------------------------- validate

Report run_validate(const JobSpec& job) {
  Report r;
  r.job = job_echo(job);
  std::optional<AlgebraInput> input;
  r.checks.push_back(guarded("field", [&] {
    NumberField f = job_field(job);
    ordered_json d;
    d["field"] = f.describe();
    d["degree"] = num(f.degree());
    d["galois"] = f.is_galois();
    d["automorphisms"] = num(f.automorphisms().size());
    return pass("field", d);
  }));
  if (r.any_fail()) return r;
  input = job_algebra_input(job);
  std::optional<LieAlgebra> g;
  r.checks.push_back(guarded("algebra", [&] {
    g = validate_algebra(input->field, input->dim, input->constants, input->labels);
    ordered_json d;
    d["dim"] = num(g->dim());
    d["abelian"] = g->is_abelian();
    d["nilpotent"] = is_nilpotent(*g);
    d["solvable"] = is_solvable(*g);
    d["semisimple"] = is_semisimple(*g);
    return pass("algebra", d);
  }));
  if (!g) return r;
  r.checks.push_back(guarded("module", [&] { return pass("module", module_summary(job_module(job, *g))); }));
  if (input->toral_dim) {
    r.checks.push_back(guarded("borel_shape", [&] {
      check_borel_shape(BorelData{*g, *input->toral_dim});
      ordered_json d;
      d["toral_dim"] = num(*input->toral_dim);
      return pass("borel_shape", d);
    }));
  }
  return r;
}

// ---------------------------------------------------------------- cohomology

Report run_cohomology(const JobSpec& job) {
  Report r;
  r.job = job_echo(job);
  std::string dir = param_or(job, "direction", "cochain");
  if (dir != "chain" && dir != "cochain") throw InputError("direction must be chain or cochain");
  Direction direction = dir == "chain" ? Direction::Chain : Direction::Cochain;
  long extra = long_param(job, "extra", 1);
  if (extra < 0) throw InputError("extra must be >= 0");

  std::optional<LieAlgebra> g;
  std::optional<LieModule> v;
  r.checks.push_back(guarded("input", [&] {
    g = job_algebra(job);
    v = job_module(job, *g);
    return pass("input", module_summary(*v));
  }));
  if (!v) return r;
  CEComplex c = build_complex(*v, direction);
  r.checks.push_back(guarded("dimensions", [&] {
    ordered_json d;
    d["direction"] = direction_name(direction);
    ordered_json table = ordered_json::object();
    for (long k = 0; k <= static_cast<long>(c.top_degree()) + extra; ++k)
      table[std::to_string(k)] = num(cohomology(c, k).dimension);
    d["dims"] = table;
    return pass("dimensions", d);
  }));
  r.checks.push_back(guarded("squares_to_zero", [&] { return verdict("squares_to_zero", squares_to_zero(c)); }));
  r.checks.push_back(guarded("euler", [&] {
    auto e = euler_check(c);
    ordered_json d;
    d["chain_characteristic"] = num(e.chain_characteristic);
    d["betti_characteristic"] = num(e.betti_characteristic);
    return verdict("euler", e.holds, d);
  }));
  r.checks.push_back(guarded("duality", [&] {
    auto res = duality_check(*v);
    ordered_json d;
    d["homology_of_dual"] = nums(res.homology_of_dual);
    d["cohomology"] = nums(res.cohomology);
    return verdict("duality", res.holds, d);
  }));
  return r;
}

// ---------------------------------------------------------------- tvectors

namespace {

DifferentialCharacter parse_tvector_character(const JobSpec& job, const BorelData& b, const Embedding& iota) {
  std::string text = param_or(job, "dchi", "zero");
  LieAlgebra ambient = ambient_algebra(b.algebra, iota);
  if (text == "zero") return zero_character(ambient);
  if (text == "toral") return toral_character(b, iota, iota.target().one());
  if (text.rfind("toral:", 0) == 0) {
    Rational value;
    try {
      value = parse_rational(text.substr(6));
    } catch (const Error& e) {
      throw InputError(std::string("dchi: ") + e.what());
    }
    return toral_character(b, iota, iota.target().from_rational(value));
  }
  std::vector<FieldElement> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      values.push_back(iota.target().from_rational(parse_rational(item)));
    } catch (const Error& e) {
      throw InputError(std::string("dchi: ") + e.what());
    }
  }
  if (values.size() != ambient.dim())
    throw InputError("dchi needs " + std::to_string(ambient.dim()) + " values on K (x) b_0");
  return DifferentialCharacter{values};
}

}  // namespace

Report run_tvectors(const JobSpec& job) {
  Report r;
  r.job = job_echo(job);
  JobSpec local = job;
  if (!local.params.count("L")) local.params["L"] = "sqrt2";
  AlgebraInput in = job_algebra_input(local);
  if (!in.toral_dim) throw InputError("tvectors needs a Borel algebra (borel_sl2, borel_sl3 or $.borel.toral_dim)");
  LieAlgebra g = validate_algebra(in.field, in.dim, in.constants, in.labels);
  BorelData b{g, *in.toral_dim};
  Embedding iota = Embedding::identity(in.field);
  DifferentialCharacter chi = parse_tvector_character(local, b, iota);

  std::optional<DecompositionReport> rep;
  r.checks.push_back(guarded("hs_decomposition", [&] {
    rep = hs_decomposition_check(b, iota, chi);
    ordered_json d;
    d["direct"] = nums(rep->direct);
    d["factored"] = nums(rep->factored);
    d["u_invariants"] = nums(rep->u_invariants);
    d["u_cohomology"] = nums(rep->u_cohomology);
    d["t0_dim"] = num(rep->t0_dim);
    d["u0_dim"] = num(rep->u0_dim);
    return verdict("hs_decomposition", rep->equal, d, "direct and factored dimensions differ");
  }));
  if (!rep) return r;
  r.checks.push_back(guarded("t_dimensions", [&] {
    ordered_json d;
    d["dims"] = nums(t_dimensions(b, iota, chi));
    return pass("t_dimensions", d);
  }));
  r.checks.push_back(guarded("vanishing_bound", [&] {
    ordered_json d;
    d["bound"] = num(rep->vanishing_bound);
    return verdict("vanishing_bound", rep->vanishes_above_bound, d);
  }));
  if (!chi.is_zero()) {
    r.checks.push_back(skipped("emerton", "dchi is nonzero"));
  } else if (in.field.degree() == 1) {
    r.checks.push_back(skipped("emerton", "L = Q leaves t0 zero"));
  } else {
    r.checks.push_back(guarded("emerton", [&] {
      std::size_t t1 = rep->direct.size() > 1 ? rep->direct[1] : 0;
      ordered_json d;
      d["T1"] = num(t1);
      d["t0_dim"] = num(rep->t0_dim);
      return verdict("emerton", t1 >= rep->t0_dim && rep->t0_dim >= 1, d);
    }));
  }
  r.checks.push_back(guarded("dixmier_u0", [&] {
    auto k = borel_kernels(b, iota);
    auto res = dixmier_check(k.u0.as_algebra());
    ordered_json d;
    d["dims"] = nums(res.dims);
    return verdict("dixmier_u0", res.holds, d);
  }));
  return r;
}

// ---------------------------------------------------------------- norms

namespace {

ordered_json symbol_json(const std::vector<std::pair<MultiIndex, Rational>>& sym) {
  ordered_json a = ordered_json::array();
  for (const auto& [b, c] : sym) {
    ordered_json t;
    ordered_json e = ordered_json::array();
    for (auto x : b) e.push_back(num(static_cast<std::size_t>(x)));
    t["exponents"] = e;
    t["coeff"] = num(c);
    a.push_back(t);
  }
  return a;
}

Check series_check(const std::string& name, const TruncatedPBWSeries& s, const RadiusParam& param) {
  ordered_json d;
  d["nu_norm"] = num(nu_norm(s, param));
  d["principal_symbol"] = symbol_json(principal_symbol(s, param));
  d["terms"] = num(s.terms().size());
  return pass(name, d);
}

}  // namespace

Report run_norms(const JobSpec& job) {
  Report r;
  r.job = job_echo(job);
  RadiusParam param = job_radius(job);
  long n_trunc = long_param(job, "N", 5);
  long degree = long_param(job, "D", 4);
  if (n_trunc < 2) throw InputError("N must be >= 2");
  if (degree < 0) throw InputError("D must be >= 0");
  std::size_t N = static_cast<std::size_t>(n_trunc);

  auto rc = radius_constant(param);
  ordered_json rd;
  rd["p"] = num(static_cast<long long>(param.p));
  rd["kappa"] = num(static_cast<long long>(param.kappa));
  rd["a"] = num(param.a);
  rd["small_radius"] = param.small_radius;
  rd["log_c_r"] = num(rc.log_c);
  ordered_json argmax = ordered_json::array();
  for (const auto& t : rc.argmax) argmax.push_back(t.get_str());
  rd["argmax"] = argmax;
  r.checks.push_back(pass("c_r", rd));

  r.checks.push_back(guarded("log_one_plus_b", [&] {
    auto ln = log_one_plus_b_norm(N, param);
    ordered_json d;
    d["N"] = num(N);
    d["log_norm"] = num(ln.value);
    d["stable"] = ln.stable;
    return verdict("log_one_plus_b", !ln.stable || ln.value == rc.log_c, d, "stable norm differs from c_r");
  }));

  bool has_algebra = job.catalog || (job.document && job.document->contains("algebra"));
  if (!has_algebra) return r;
  LieAlgebra g = job_algebra(job);
  auto lambda = job_series(job, "lambda", g, N);
  auto mu = job_series(job, "mu", g, N);
  if (lambda) r.checks.push_back(series_check("nu_norm_lambda", *lambda, param));
  if (mu) r.checks.push_back(series_check("nu_norm_mu", *mu, param));
  if (lambda && mu) {
    Check c;
    try {
      auto m = multiplicativity_check(*lambda, *mu, param);
      ordered_json d;
      d["product"] = num(m.product);
      d["sum_of_factors"] = num(m.sum_of_factors);
      c = verdict("multiplicativity", m.pass, d);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionUnmet) throw;
      c = skipped("multiplicativity", e.what());
    }
    r.checks.push_back(std::move(c));
  }
  {
    Check c;
    try {
      auto gr = graded_polynomial_check(g, param, static_cast<std::size_t>(degree));
      ordered_json d;
      d["degree"] = num(static_cast<long long>(degree));
      d["pairs_checked"] = num(gr.pairs_checked);
      d["symbols_commute"] = gr.symbols_commute;
      d["defect_drops"] = gr.defect_drops;
      d["worst_defect"] = num(gr.worst_defect);
      d["defect_bound"] = num(gr.defect_bound);
      c = verdict("graded", gr.pass, d);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PreconditionUnmet) throw;
      c = skipped("graded", e.what());
    }
    r.checks.push_back(std::move(c));
  }
  return r;
}

// ---------------------------------------------------------------- golden files

std::filesystem::path golden_dir() {
  if (const char* env = std::getenv("LAB_GOLDEN_DIR"); env && *env) return env;
  return LAB_DEFAULT_GOLDEN_DIR;
}

std::filesystem::path golden_path(const std::string& suite) { return golden_dir() / ("suite_" + suite + ".json"); }

std::string render(const Report& r, bool timing) { return r.to_json(timing).dump(2) + "\n"; }

Report run_suite(const JobSpec& job, bool bless) {
  Report r;
  r.job = job_echo(job);
  r.checks = suite_checks(job.suite);
  std::string body = render(r);
  auto path = golden_path(job.suite);
  if (bless) {
    std::filesystem::create_directories(path.parent_path());
    std::ofstream(path, std::ios::binary) << body;
  }
  std::ifstream in(path, std::ios::binary);
  ordered_json d;
  d["file"] = path.filename().string();
  if (!in) {
    r.checks.push_back(fail("golden", "no golden report (run with --bless)", d));
  } else {
    std::stringstream ss;
    ss << in.rdbuf();
    r.checks.push_back(verdict("golden", ss.str() == body, d, "report differs from the golden copy"));
  }
  return r;
}

}  // namespace lab
