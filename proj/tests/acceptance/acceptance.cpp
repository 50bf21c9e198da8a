// One line per criterion: [PASS] or [FAIL], the number and a short name.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hav/cohomology.hpp"
#include "hav/dist_algebra.hpp"
#include "hav/errors.hpp"

using namespace hav;
namespace fs = std::filesystem;

namespace {

using Dims = std::vector<std::size_t>;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

// ------------------------------------------------------------------ helpers

const std::vector<std::string> kCatalog = {"abelian", "heisenberg", "sl2", "borel_sl2", "borel_sl3"};

LieAlgebra over(const LieAlgebra& g, const NumberField& L) { return base_change(g, Embedding::from_rationals(L)); }

BorelData borel_over(const std::string& name, const NumberField& L) {
  auto b = catalog_borel(name);
  return {over(b.algebra, L), b.toral_dim};
}

// dim H = dim C_k - rank(leaving) - rank(arriving), from the raw differentials.
Dims rank_dims(const CEComplex& c, std::size_t upto) {
  Dims out;
  for (std::size_t k = 0; k <= upto; ++k) {
    long kk = static_cast<long>(k);
    out.push_back(c.space_dim(kk) - rank(c.differential(kk)) - rank(c.incoming(kk)));
  }
  return out;
}

std::string show(const Dims& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

// Nonzero character when one exists: 1 on basis vectors outside [g, g] in a
// complement chosen by hand for each catalog entry.
std::vector<long> character_pattern(const std::string& name, std::size_t dim) {
  if (name == "abelian") return std::vector<long>(dim, 1);
  if (name == "heisenberg") return {1, 1, 0};
  if (name == "borel_sl2") return {1, 0};
  if (name == "borel_sl3") return {1, 1, 0, 0, 0};
  return std::vector<long>(dim, 0);
}

LieModule character_module(const std::string& name, const LieAlgebra& g) {
  std::vector<FieldElement> v;
  for (long x : character_pattern(name, g.dim())) v.push_back(g.field().from_rational(Rational(x)));
  return one_dim_module(g, validate_character(g, v));
}

FMatrix intersect(const FMatrix& a, const FMatrix& b) {
  FMatrix neg_b = b;
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) neg_b(r, c) = -b(r, c);
  auto n = null_space(hcat(a, neg_b));
  FMatrix coeff(a.cols(), n.cols(), a.zero());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < n.cols(); ++c) coeff(r, c) = n(r, c);
  return a * coeff;
}

// Jacobi on raw constants.
bool jacobi_holds(const NumberField& f, std::size_t d, const std::vector<FieldElement>& c) {
  auto C = [&](std::size_t i, std::size_t j, std::size_t k) { return c[(i * d + j) * d + k]; };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t m = 0; m < d; ++m) {
          FieldElement s = f.zero();
          for (std::size_t l = 0; l < d; ++l)
            s = s + C(j, k, l) * C(i, l, m) + C(k, i, l) * C(j, l, m) + C(i, j, l) * C(k, l, m);
          if (!is_zero(s)) return false;
        }
  return true;
}

// -------------------------------------------------------------- criteria

void structural() {
  std::size_t mutations = 0;
  for (const char* name : {"sl2", "heisenberg"}) {
    auto g = catalog(name);
    auto f = g.field();
    std::size_t d = g.dim();
    for (std::size_t idx = 0; idx < d * d * d; ++idx)
      for (long delta : {1L, -1L}) {
        auto c = g.constants();
        c[idx] = c[idx] + f.from_rational(Rational(delta));
        ++mutations;
        try {
          validate_algebra(f, d, c);
          throw Failure(std::string(name) + ": mutation of entry " + std::to_string(idx) + " accepted");
        } catch (const Error& e) {
          expect(e.kind() == ErrorKind::AntisymmetryViolated || e.kind() == ErrorKind::JacobiViolated,
                 "unexpected error kind");
        }
      }
    // antisymmetric pair mutations: Jacobi verdict must agree with a direct evaluation
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          for (long delta : {1L, -1L}) {
            auto c = g.constants();
            auto dv = f.from_rational(Rational(delta));
            c[(i * d + j) * d + k] = c[(i * d + j) * d + k] + dv;
            c[(j * d + i) * d + k] = c[(j * d + i) * d + k] - dv;
            bool lie = jacobi_holds(f, d, c);
            bool accepted = true;
            try {
              validate_algebra(f, d, c);
            } catch (const Error& e) {
              accepted = false;
              expect(e.kind() == ErrorKind::JacobiViolated, "pair mutation: wrong error kind");
            }
            expect(lie == accepted, "pair mutation verdict disagrees with direct Jacobi evaluation");
            ++mutations;
          }
  }
  expect(mutations > 0, "no mutations run");
}

void complex_property() {
  std::size_t pairs = 0;
  for (const NumberField& L : {NumberField::rationals(), named_field("sqrt2")})
    for (const auto& name : kCatalog) {
      auto g = over(catalog(name, name == "abelian" ? CatalogParams{{"n", 3}} : CatalogParams{}), L);
      for (const auto& v : {trivial_module(g), adjoint_module(g), character_module(name, g)})
        for (auto dir : {Direction::Chain, Direction::Cochain}) {
          auto c = build_complex(v, dir);
          expect(squares_to_zero(c), name + ": squares_to_zero false");
          for (long k = 0; k <= static_cast<long>(g.dim()); ++k) {
            long next = dir == Direction::Chain ? k - 1 : k + 1;
            expect((c.differential(next) * c.differential(k)).is_zero_matrix(), name + ": D∘D != 0");
          }
          ++pairs;
        }
    }
  expect(pairs == 60, "expected 60 configurations");
}

void betti_oracles() {
  for (long n = 0; n <= 6; ++n) {
    auto c = build_complex(trivial_module(catalog("abelian", {{"n", n}})), Direction::Cochain);
    auto b = betti_numbers(c);
    for (long k = 0; k <= n; ++k)
      expect(b[k] == static_cast<std::size_t>(binomial(n, k)), "abelian(" + std::to_string(n) + ") degree " +
                                                                     std::to_string(k) + " differs from C(n,k)");
    expect(rank_dims(c, n) == b, "abelian: rank formula disagrees");
  }
  // H^0 = K; H^1 = (h/[h,h])^*, 2-dim; H^3 = K by unimodularity; Euler characteristic 0 forces H^2 = 2
  auto h = build_complex(trivial_module(catalog("heisenberg")), Direction::Cochain);
  expect(betti_numbers(h) == Dims{1, 2, 2, 1}, "heisenberg: " + show(betti_numbers(h)));
  expect(rank_dims(h, 3) == Dims{1, 2, 2, 1}, "heisenberg rank formula");
}

void duality() {
  for (const NumberField& L : {NumberField::rationals(), named_field("sqrt2")})
    for (const auto& name : kCatalog) {
      auto g = over(catalog(name), L);
      for (const auto& v : {trivial_module(g), adjoint_module(g), character_module(name, g)}) {
        auto res = duality_check(v);
        auto hom = rank_dims(build_complex(dual_module(v), Direction::Chain), g.dim());
        auto coh = rank_dims(build_complex(v, Direction::Cochain), g.dim());
        expect(hom == coh, name + ": H_k(V*) " + show(hom) + " vs H^k(V) " + show(coh));
        expect(res.holds && res.cohomology == coh && res.homology_of_dual == hom, name + ": duality_check disagrees");
      }
    }
}

void kernel_ideal_dims() {
  for (const char* fname : {"sqrt2", "cubic"}) {
    auto L = named_field(fname);
    auto iota = Embedding::identity(L);
    std::size_t n = L.degree();
    for (const auto& name : kCatalog) {
      auto g = over(catalog(name, name == "abelian" ? CatalogParams{{"n", 2}} : CatalogParams{}), L);
      std::size_t d = g.dim();
      auto k = kernel_ideal(g, iota);
      expect(k.dim() == (n - 1) * d, name + ": kernel dimension");

      // multiplication map a ⊗ v_i x_j ↦ a·v_i·x_j, built directly
      FMatrix mult(d, n * d, L.zero());
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < n; ++i) mult(j, j * n + i) = L.basis_element(i);
      expect(same_span(null_space(mult), k.basis()), name + ": kernel differs from the null space");

      std::vector<FVec> gens;
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 1; i < n; ++i) {
          FVec v(n * d, L.zero());
          v[j * n] = L.basis_element(i);
          v[j * n + i] = -L.one();
          gens.push_back(v);
        }
      expect(same_span(FMatrix::from_columns(n * d, gens, L.zero()), k.basis()), name + ": generators do not span");

      auto amb = ambient_algebra(g, iota);
      for (std::size_t a = 0; a < amb.dim(); ++a)
        for (std::size_t b = 0; b < k.dim(); ++b) {
          auto br = amb.bracket(amb.basis_vector(a), k.basis().column(b));
          expect(span_contains(k.basis(), std::span<const FieldElement>(br)), name + ": not an ideal");
        }
    }
  }
}

void sigma_kernels() {
  for (const char* fname : {"sqrt2", "cubic"}) {
    auto L = named_field(fname);
    auto iota = Embedding::identity(L);
    std::size_t n = L.degree();
    for (const auto& name : kCatalog) {
      auto g = over(catalog(name), L);
      std::size_t full = n * g.dim();
      std::vector<FMatrix> ks;
      for (std::size_t s = 0; s < n; ++s) ks.push_back(sigma_kernel_ideal(g, s, iota).basis());
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t)
          expect(rank(hcat(ks[s], ks[t])) == full, name + ": sum of two twisted kernels is not everything");
      FMatrix meet = ks[0];
      for (std::size_t s = 1; s < n; ++s) meet = intersect(meet, ks[s]);
      expect(rank(meet) == 0, name + ": twisted kernels meet nontrivially");
    }
  }
}

void splitting() {
  for (const char* fname : {"sqrt2", "cubic"}) {
    auto L = named_field(fname);
    std::size_t n = L.degree();
    auto m = splitting_matrix(L);
    expect(inverse(m).has_value(), std::string(fname) + ": splitting matrix singular");
    for (std::size_t s = 0; s < n; ++s) {
      auto pre = idempotent_preimage(L, s);
      // evaluate Σ x_ik σ'(v_i) v_k in every component directly
      for (std::size_t t = 0; t < n; ++t) {
        FieldElement acc = L.zero();
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k)
            acc = acc + apply(L.automorphisms()[t], L.basis_element(i)) * L.basis_element(k).scaled(pre[i * n + k]);
        expect(acc == (s == t ? L.one() : L.zero()), std::string(fname) + ": idempotent preimage wrong");
      }
    }
  }
  auto L = named_field("sqrt2");
  PAdicValuation v5(L, 5);
  for (std::size_t s = 0; s < 2; ++s) {
    auto pre = idempotent_preimage(L, s);
    Rational worst;
    bool any = false;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) {
        if (is_zero(pre[i * 2 + k])) continue;
        Rational v = -*v5(L.basis_element(i)) - *v5(pre[i * 2 + k]);
        if (!any || v > worst) worst = v;
        any = true;
      }
    auto res = s_sigma(L, s, 5);
    expect(res.log_s == LogNorm(worst), "s_sigma disagrees with the direct maximum");
    expect(res.integral && worst <= 0, "s_sigma > 0 at p = 5");
  }
}

void whitehead() {
  auto L = named_field("sqrt2");
  auto iota = Embedding::identity(L);
  auto g = over(catalog("sl2"), L);
  auto g0 = kernel_ideal(g, iota).as_algebra();
  for (int which = 0; which < 2; ++which) {
    auto make = [which](const LieAlgebra& a) { return which == 0 ? trivial_module(a) : adjoint_module(a); };
    auto r = whitehead_check(g, iota, make);
    auto direct = rank_dims(build_complex(make(g0), Direction::Cochain), 1)[1];
    expect(r.vanishes && r.h1_dim == 0 && direct == 0, "H^1 nonzero");
  }
}

void dixmier() {
  std::vector<LieAlgebra> us;
  for (long n = 1; n <= 4; ++n) us.push_back(catalog("abelian", {{"n", n}}));
  us.push_back(catalog("heisenberg"));
  auto L = named_field("sqrt2");
  for (const char* b : {"borel_sl2", "borel_sl3"})
    us.push_back(borel_kernels(borel_over(b, L), Embedding::identity(L)).u0.as_algebra());
  for (const auto& u : us) {
    auto r = dixmier_check(u);
    auto dims = rank_dims(build_complex(trivial_module(u), Direction::Cochain), u.dim());
    for (auto x : dims) expect(x >= 1, "a degree vanishes: " + show(dims));
    expect(r.holds && r.dims == dims, "dixmier_check disagrees");
  }
}

struct BorelCase {
  std::string name;
  long value;
};

const std::vector<BorelCase> kBorelCases = {{"borel_sl2", 0}, {"borel_sl2", 4}, {"borel_sl3", 0}, {"borel_sl3", 1}};

DifferentialCharacter character_for(const BorelData& b, const Embedding& iota, long value) {
  if (value == 0) return zero_character(ambient_algebra(b.algebra, iota));
  return toral_character(b, iota, b.algebra.field().from_rational(Rational(value)));
}

void higher_analytic() {
  auto L = named_field("sqrt2");
  auto iota = Embedding::identity(L);
  for (const auto& bc : kBorelCases) {
    auto b = borel_over(bc.name, L);
    auto chi = character_for(b, iota, bc.value);
    auto rep = hs_decomposition_check(b, iota, chi);
    auto bk = borel_kernels(b, iota);
    auto mod = character_module_on_kernel(b, iota, chi);
    auto direct = rank_dims(build_complex(mod, Direction::Cochain), bk.b0.dim());
    Dims factored(direct.size(), 0);
    for (std::size_t i = 0; i < factored.size(); ++i)
      for (std::size_t j = 0; j <= std::min(i, rep.t0_dim); ++j)
        if (i - j < rep.u_invariants.size())
          factored[i] += static_cast<std::size_t>(binomial(static_cast<int>(rep.t0_dim), static_cast<int>(j))) *
                         rep.u_invariants[i - j];
    std::string tag = bc.name + "/" + std::to_string(bc.value);
    expect(direct == factored, tag + ": direct " + show(direct) + " vs factored " + show(factored));
    expect(rep.direct == direct && rep.factored == factored && rep.equal, tag + ": library report disagrees");
    if (bc.name == "borel_sl2" && bc.value == 4) expect(direct == Dims{0, 1, 1}, "resonant borel_sl2 " + show(direct));
    if (bc.name == "borel_sl2" && bc.value == 0) expect(direct == Dims{1, 1, 0}, "smooth borel_sl2 " + show(direct));
  }
}

void emerton() {
  auto L = named_field("sqrt2");
  auto iota = Embedding::identity(L);
  for (const char* name : {"borel_sl2", "borel_sl3"}) {
    auto b = borel_over(name, L);
    auto rep = hs_decomposition_check(b, iota, character_for(b, iota, 0));
    expect(rep.t0_dim >= 1, std::string(name) + ": t0 is zero");
    expect(rep.direct.size() > 1 && rep.direct[1] >= rep.t0_dim, std::string(name) + ": dim T^1 < dim t0");
  }
}

void vanishing() {
  for (const char* fname : {"sqrt2", "cubic"}) {
    auto L = named_field(fname);
    auto iota = Embedding::identity(L);
    for (const char* name : {"borel_sl2", "borel_sl3"})
      for (long value : {0L, 1L, 4L}) {
        auto b = borel_over(name, L);
        auto chi = character_for(b, iota, value);
        std::size_t bound = (L.degree() - 1) * b.algebra.dim();
        auto c = build_complex(character_module_on_kernel(b, iota, chi), Direction::Cochain);
        for (std::size_t i = bound + 1; i <= bound + 3; ++i)
          expect(cohomology(c, static_cast<long>(i)).dimension == 0, std::string(name) + ": T^i above the bound");
        auto dims = t_dimensions(b, iota, chi);
        expect(dims.size() == bound + 1, "t_dimensions length");
      }
  }
}

// ----- norms: own straightening and norm formula

using Word = std::vector<std::size_t>;

std::map<MultiIndex, Rational> straighten(const LieAlgebra& g, std::map<Word, Rational> todo) {
  std::map<MultiIndex, Rational> out;
  while (!todo.empty()) {
    auto [w, c] = *todo.begin();
    todo.erase(todo.begin());
    if (is_zero(c)) continue;
    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      MultiIndex beta(g.dim(), 0);
      for (auto i : w) ++beta[i];
      out[beta] += c;
      continue;
    }
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    todo[swapped] += c;
    for (std::size_t k = 0; k < g.dim(); ++k) {
      Rational s = g.constant(w[pos], w[pos + 1], k).coordinates()[0];
      if (is_zero(s)) continue;
      Word shorter(w.begin(), w.begin() + pos);
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
      todo[shorter] += c * s;
    }
  }
  std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

Word word_of(const MultiIndex& beta) {
  Word w;
  for (std::size_t i = 0; i < beta.size(); ++i) w.insert(w.end(), beta[i], i);
  return w;
}

// small radius: log c_r = -κa
std::optional<Rational> own_norm(const std::map<MultiIndex, Rational>& terms, long p, const Rational& log_c) {
  std::optional<Rational> best;
  for (const auto& [beta, c] : terms) {
    Rational v = -Rational(*padic_valuation(c, p)) + Rational(total_degree(beta)) * log_c;
    if (!best || v > *best) best = v;
  }
  return best;
}

void norm_identities() {
  for (long p : {2L, 3L, 5L, 7L})
    for (long num = 1; num < 24; ++num) {
      Rational a(num, 24);
      a.canonicalize();
      auto prm = RadiusParam::make(p, a);
      if (!prm.small_radius) continue;
      Rational expect_log = -Rational(prm.kappa) * a;
      expect(c_r(prm) == LogNorm(expect_log), "c_r != r^kappa");
      auto ln = log_one_plus_b_norm(12, prm);
      expect(ln.stable && ln.value == LogNorm(expect_log), "log(1+b) norm does not stabilize to c_r");
      for (long x : {-3L, 0L, 2L, 7L})
        expect(mahler_norm(mahler_dirac({x, 1 - x}, 8), prm) == LogNorm(Rational(0)), "delta_x norm != 1");
    }

  auto prm = RadiusParam::make(3, Rational(3, 4));
  Rational log_c(-3, 4);
  auto g = catalog("heisenberg", {{"scale_p", 3}});
  std::mt19937_64 rng(20240611);
  auto random_series = [&] {
    TruncatedPBWSeries s(g, 12);
    std::size_t terms = 1 + rng() % 3;
    for (std::size_t t = 0; t < terms; ++t) {
      MultiIndex beta{static_cast<unsigned>(rng() % 3), static_cast<unsigned>(rng() % 3),
                      static_cast<unsigned>(rng() % 2)};
      Rational c(static_cast<long>(rng() % 19) - 9, static_cast<unsigned long>(1 + rng() % 9));
      c.canonicalize();
      if (is_zero(c)) c = 1;
      long shift = static_cast<long>(rng() % 3);
      for (long i = 0; i < shift; ++i) c *= 3;
      s.add_term(beta, c);
    }
    return s;
  };
  for (int t = 0; t < 100; ++t) {
    auto l = random_series(), m = random_series();
    auto prod = pbw_multiply(l, m);
    expect(prod.exact(), "product truncated");
    std::map<Word, Rational> words;
    for (const auto& [b, cb] : l.terms())
      for (const auto& [c, cc] : m.terms()) {
        Word w = word_of(b), wc = word_of(c);
        w.insert(w.end(), wc.begin(), wc.end());
        words[w] += cb * cc;
      }
    auto oracle = straighten(g, words);
    expect(prod.terms() == oracle, "product differs from word rewriting");
    auto np = own_norm(oracle, 3, log_c), nl = own_norm(l.terms(), 3, log_c), nm = own_norm(m.terms(), 3, log_c);
    expect(np && nl && nm && *np == *nl + *nm, "nu(lambda mu) != nu(lambda) + nu(mu)");
    auto r = multiplicativity_check(l, m, prm);
    expect(r.pass && r.product == LogNorm(*np), "multiplicativity_check disagrees");
  }
}

void graded() {
  struct Case {
    long p;
    Rational a;
  };
  for (const auto& [p, a] : std::vector<Case>{{3, Rational(3, 4)}, {5, Rational(1, 2)}, {2, Rational(7, 8)}}) {
    auto prm = RadiusParam::make(p, a);
    auto scaled = catalog("heisenberg", {{"scale_p", p}});
    auto r = graded_polynomial_check(scaled, prm, 4);
    expect(r.pass && r.symbols_commute && r.defect_drops, "scaled heisenberg fails at p=" + std::to_string(p));
    // ν([x, y]) = ν(p^κ z) = -κ + log c_r < 2 log c_r since κa < κ
    Rational log_c = -Rational(prm.kappa) * a;
    expect(r.worst_defect == LogNorm(Rational(-prm.kappa) + log_c), "commutator norm");
    expect(graded_polynomial_check(catalog("abelian", {{"n", 3}}), prm, 4).pass, "abelian(3)");
    try {
      graded_polynomial_check(catalog("heisenberg"), prm, 4);
      throw Failure("unscaled heisenberg accepted");
    } catch (const Error& e) {
      expect(e.kind() == ErrorKind::PreconditionUnmet, "wrong rejection kind");
    }
  }
}

// ----- CLI

int run(const std::string& args) {
  std::string cmd = std::string(LAB_EXECUTABLE) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void cli_determinism() {
  auto dir = fs::temp_directory_path() / ("hav_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto a = dir / "a.json", b = dir / "b.json";
  int ea = run("suite all --out " + a.string());
  int eb = run("suite all --out " + b.string());
  std::string ta = slurp(a), tb = slurp(b);
  fs::path data(HAV_TEST_DATA_DIR);
  int missing = run("validate --in " + (dir / "missing.json").string());
  int corrupt = run("validate --in " + (data / "corrupt_jacobi.json").string());
  int good = run("cohomology --in " + (data / "heisenberg_explicit.json").string());
  int unknown = run("norms --catalog heisenberg --param colour=red");
  int bad_suite = run("suite nope");
  fs::remove_all(dir);
  expect(!ta.empty() && ta == tb, "suite reports differ between runs");
  expect(ea == 0 && eb == 0, "suite all exit codes " + std::to_string(ea) + "," + std::to_string(eb));
  expect(missing == 2, "missing input exit " + std::to_string(missing));
  expect(corrupt == 1, "corrupted document exit " + std::to_string(corrupt));
  expect(good == 0, "valid document exit " + std::to_string(good));
  expect(unknown == 2, "unknown parameter exit " + std::to_string(unknown));
  expect(bad_suite == 2, "unknown suite exit " + std::to_string(bad_suite));
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
      {"structural_validation", structural},
      {"complex_squares_to_zero", complex_property},
      {"betti_oracles", betti_oracles},
      {"duality", duality},
      {"kernel_ideal", kernel_ideal_dims},
      {"sigma_kernels", sigma_kernels},
      {"splitting", splitting},
      {"whitehead", whitehead},
      {"dixmier", dixmier},
      {"higher_analytic_vectors", higher_analytic},
      {"emerton_corollary", emerton},
      {"vanishing_bound", vanishing},
      {"norm_identities", norm_identities},
      {"graded_polynomiality", graded},
      {"cli_determinism", cli_determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = true;
    try {
      criteria[i].second();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << i + 1 << " " << criteria[i].first;
    if (!ok) std::cout << ": " << detail;
    std::cout << std::endl;
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
