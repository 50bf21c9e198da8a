#include "hav/cohomology.hpp"

#include <algorithm>

namespace hav {

namespace {

// Sorts seq ascending and returns the sign of the sorting permutation, or 0
// when seq has a repeated entry (the wedge vanishes).
int sort_with_sign(std::vector<std::size_t>& seq) {
  int sign = 1;
  for (std::size_t i = 1; i < seq.size(); ++i)
    for (std::size_t j = i; j > 0 && seq[j - 1] >= seq[j]; --j) {
      if (seq[j - 1] == seq[j]) return 0;
      std::swap(seq[j - 1], seq[j]);
      sign = -sign;
    }
  return sign;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& s, std::size_t a) {
  std::vector<std::size_t> r;
  r.reserve(s.size() - 1);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != a) r.push_back(s[i]);
  return r;
}

std::vector<std::size_t> without(const std::vector<std::size_t>& s, std::size_t a, std::size_t b) {
  std::vector<std::size_t> r;
  r.reserve(s.size() - 2);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (i != a && i != b) r.push_back(s[i]);
  return r;
}

void accumulate(FMatrix& m, std::size_t r, std::size_t c, const FieldElement& v, int sign) {
  if (is_zero(v) || sign == 0) return;
  m(r, c) = sign > 0 ? m(r, c) + v : m(r, c) - v;
}

int parity_sign(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

std::vector<std::vector<std::size_t>> colex_subsets(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > d) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    // Colex successor: bump the first entry that can move up.
    std::size_t i = 0;
    while (i < k && cur[i] + 1 == (i + 1 < k ? cur[i + 1] : d)) ++i;
    if (i == k) break;
    ++cur[i];
    for (std::size_t j = 0; j < i; ++j) cur[j] = j;
  }
  return out;
}

std::size_t colex_rank(std::span<const std::size_t> subset) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < subset.size(); ++i)
    r += static_cast<std::size_t>(binomial(static_cast<int>(subset[i]), static_cast<int>(i + 1)));
  return r;
}

// ---------------------------------------------------------------- complex

std::size_t CEComplex::space_dim(long k) const {
  if (k < 0 || k > static_cast<long>(top_degree())) return 0;
  return static_cast<std::size_t>(binomial(static_cast<int>(top_degree()), static_cast<int>(k))) * module_.dim();
}

FMatrix CEComplex::differential(long k) const {
  long d = static_cast<long>(top_degree());
  if (direction_ == Direction::Chain) {
    if (k >= 1 && k <= d) return maps_[static_cast<std::size_t>(k)];
    return FMatrix(space_dim(k - 1), space_dim(k), algebra().zero());
  }
  if (k >= 0 && k < d) return maps_[static_cast<std::size_t>(k)];
  return FMatrix(space_dim(k + 1), space_dim(k), algebra().zero());
}

FMatrix CEComplex::incoming(long k) const {
  return direction_ == Direction::Chain ? differential(k + 1) : differential(k - 1);
}

CEComplex build_complex(const LieModule& v, Direction direction) {
  CEComplex c(v, direction);
  const LieAlgebra& h = v.algebra();
  std::size_t d = h.dim(), m = v.dim();
  FieldElement zero = h.zero();
  std::vector<std::vector<std::vector<std::size_t>>> subsets;
  for (std::size_t k = 0; k <= d; ++k) subsets.push_back(colex_subsets(d, k));

  if (direction == Direction::Chain) {
    c.maps_.emplace_back(0, 0, zero);
    for (std::size_t q = 1; q <= d; ++q) {
      FMatrix D(subsets[q - 1].size() * m, subsets[q].size() * m, zero);
      for (const auto& S : subsets[q]) {
        std::size_t s_rank = colex_rank(S);
        // Bracket terms.
        for (std::size_t a = 0; a < q; ++a)
          for (std::size_t b = a + 1; b < q; ++b) {
            auto rest = without(S, a, b);
            for (std::size_t x = 0; x < d; ++x) {
              const auto& coef = h.constant(S[a], S[b], x);
              if (is_zero(coef)) continue;
              std::vector<std::size_t> seq{x};
              seq.insert(seq.end(), rest.begin(), rest.end());
              int sign = sort_with_sign(seq);
              if (sign == 0) continue;
              sign *= parity_sign(a + b);
              std::size_t row_base = colex_rank(seq) * m;
              for (std::size_t cc = 0; cc < m; ++cc) accumulate(D, row_base + cc, s_rank * m + cc, coef, sign);
            }
          }
        // Action terms with the right action v·x = -ρ(x)v.
        for (std::size_t a = 0; a < q; ++a) {
          auto rest = without(S, a);
          std::size_t row_base = colex_rank(rest) * m;
          const FMatrix& rho = v.action(S[a]);
          for (std::size_t cc = 0; cc < m; ++cc)
            for (std::size_t r = 0; r < m; ++r) accumulate(D, row_base + r, s_rank * m + cc, rho(r, cc), -parity_sign(a));
        }
      }
      c.maps_.push_back(std::move(D));
    }
  } else {
    for (std::size_t k = 0; k < d; ++k) {
      FMatrix D(subsets[k + 1].size() * m, subsets[k].size() * m, zero);
      for (const auto& T : subsets[k + 1]) {
        std::size_t row_base = colex_rank(T) * m;
        for (std::size_t i = 0; i <= k; ++i) {
          auto rest = without(T, i);
          std::size_t col_base = colex_rank(rest) * m;
          const FMatrix& rho = v.action(T[i]);
          for (std::size_t r = 0; r < m; ++r)
            for (std::size_t cc = 0; cc < m; ++cc) accumulate(D, row_base + r, col_base + cc, rho(r, cc), parity_sign(i));
        }
        for (std::size_t i = 0; i <= k; ++i)
          for (std::size_t j = i + 1; j <= k; ++j) {
            auto rest = without(T, i, j);
            for (std::size_t x = 0; x < d; ++x) {
              const auto& coef = h.constant(T[i], T[j], x);
              if (is_zero(coef)) continue;
              std::vector<std::size_t> seq{x};
              seq.insert(seq.end(), rest.begin(), rest.end());
              int sign = sort_with_sign(seq);
              if (sign == 0) continue;
              sign *= parity_sign(i + j);
              std::size_t col_base = colex_rank(seq) * m;
              for (std::size_t r = 0; r < m; ++r) accumulate(D, row_base + r, col_base + r, coef, sign);
            }
          }
      }
      c.maps_.push_back(std::move(D));
    }
  }
  return c;
}

bool squares_to_zero(const CEComplex& c) {
  long d = static_cast<long>(c.top_degree());
  for (long k = 0; k <= d; ++k) {
    FMatrix first = c.differential(k);
    long next = c.direction() == Direction::Chain ? k - 1 : k + 1;
    FMatrix second = c.differential(next);
    if (!(second * first).is_zero_matrix()) return false;
  }
  return true;
}

CohomologySpace cohomology(const CEComplex& c, long k, std::span<const std::size_t> pivot_order) {
  if (k < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree " + std::to_string(k));
  FieldElement zero = c.algebra().zero();
  if (k > static_cast<long>(c.top_degree())) return CohomologySpace{k, 0, FMatrix(0, 0, zero), 0};
  FMatrix cycles = null_space(c.differential(k));
  FMatrix boundaries = c.incoming(k);
  if (!pivot_order.empty()) {
    std::vector<bool> seen(cycles.cols(), false);
    bool ok = pivot_order.size() == cycles.cols();
    for (auto i : pivot_order) {
      if (!ok || i >= seen.size() || seen[i]) {
        ok = false;
        break;
      }
      seen[i] = true;
    }
    if (!ok) throw Error(ErrorKind::DimensionMismatch, "pivot order must permute the cycle columns");
  }
  auto picked = greedy_complement(boundaries, cycles, pivot_order);
  FMatrix reps = select_columns(cycles, std::span<const std::size_t>(picked));
  return CohomologySpace{k, picked.size(), std::move(reps), c.space_dim(k)};
}

std::vector<std::size_t> betti_numbers(const CEComplex& c) {
  std::vector<std::size_t> dims;
  for (long k = 0; k <= static_cast<long>(c.top_degree()); ++k) {
    // dim = nullity(out) - rank(in); cheaper than building representatives.
    std::size_t nullity = c.space_dim(k) - rank(c.differential(k));
    dims.push_back(nullity - rank(c.incoming(k)));
  }
  return dims;
}

// ---------------------------------------------------------------- toral action

FMatrix cochain_action(const Subalgebra& u, const LieModule& v, const FVec& x, std::size_t k) {
  const LieAlgebra& parent = u.parent();
  std::size_t e = u.dim(), m = v.dim();
  FieldElement zero = parent.zero();
  // ad(x) restricted to u, in u coordinates.
  FMatrix adx(e, e, zero);
  auto ucols = u.basis().columns();
  for (std::size_t a = 0; a < e; ++a) {
    auto coords = u.coordinates(parent.bracket(x, ucols[a]));
    if (!coords) throw Error(ErrorKind::ActionNotChainMap, "acting element does not normalize u");
    for (std::size_t b = 0; b < e; ++b) adx(b, a) = (*coords)[b];
  }
  FMatrix rho = v.action_of(x);
  auto subsets = colex_subsets(e, k);
  std::size_t n = subsets.size() * m;
  FMatrix T(n, n, zero);
  for (const auto& S : subsets) {
    std::size_t s_base = colex_rank(S) * m;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t cc = 0; cc < m; ++cc) accumulate(T, s_base + r, s_base + cc, rho(r, cc), 1);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < e; ++b) {
        const auto& coef = adx(b, S[a]);
        if (is_zero(coef)) continue;
        std::vector<std::size_t> seq = S;
        seq[a] = b;
        int sign = sort_with_sign(seq);
        if (sign == 0) continue;
        std::size_t t_base = colex_rank(seq) * m;
        for (std::size_t r = 0; r < m; ++r) accumulate(T, s_base + r, t_base + r, coef, -sign);
      }
  }
  return T;
}

InvariantCohomology invariants_of_cohomology(const Subalgebra& t, const Subalgebra& u, const LieModule& v, long k,
                                             std::span<const std::size_t> pivot_order) {
  if (t.parent().dim() != u.parent().dim() || v.algebra().dim() != u.parent().dim())
    throw Error(ErrorKind::DimensionMismatch, "t, u and V must share a parent algebra");
  if (k < 0) throw Error(ErrorKind::DegreeOutOfRange, "negative degree " + std::to_string(k));
  FieldElement zero = u.parent().zero();
  if (k > static_cast<long>(u.dim())) return {0, 0, FMatrix(0, 0, zero)};
  std::size_t kk = static_cast<std::size_t>(k);

  CEComplex complex = build_complex(restrict_module(v, u), Direction::Cochain);
  CohomologySpace h = cohomology(complex, k, pivot_order);

  FMatrix incoming = complex.incoming(k);
  auto ech = row_reduce(incoming);
  FMatrix boundary_basis = select_columns(incoming, std::span<const std::size_t>(ech.pivot_columns));
  FMatrix frame = hcat(boundary_basis, h.representatives);
  std::size_t nb = boundary_basis.cols(), hd = h.dimension;

  std::vector<FVec> rows;
  for (const auto& x : t.basis().columns()) {
    FMatrix act = cochain_action(u, v, x, kk);
    // The action must commute with the differentials around degree k.
    FMatrix d_out = complex.differential(k);
    if (!(d_out * act == cochain_action(u, v, x, kk + 1) * d_out))
      throw Error(ErrorKind::ActionNotChainMap, "action does not commute with d^" + std::to_string(k));
    if (kk > 0) {
      FMatrix d_in = complex.differential(k - 1);
      if (!(d_in * cochain_action(u, v, x, kk - 1) == act * d_in))
        throw Error(ErrorKind::ActionNotChainMap, "action does not commute with d^" + std::to_string(k - 1));
    }
    FMatrix induced(hd, hd, zero);
    for (std::size_t j = 0; j < hd; ++j) {
      FVec image = act.apply(std::span<const FieldElement>(h.representatives.column(j)));
      auto coords = solve(frame, std::span<const FieldElement>(image));
      if (!coords) throw Error(ErrorKind::ActionNotChainMap, "image of a cocycle is not a cocycle");
      for (std::size_t i = 0; i < hd; ++i) induced(i, j) = (*coords)[nb + i];
    }
    for (std::size_t i = 0; i < hd; ++i) rows.push_back([&] {
        FVec r;
        for (std::size_t j = 0; j < hd; ++j) r.push_back(induced(i, j));
        return r;
      }());
  }
  FMatrix stacked(rows.size(), hd, zero);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < hd; ++j) stacked(i, j) = rows[i][j];
  FMatrix kernel = null_space(stacked);
  return {kernel.cols(), hd, h.representatives * kernel};
}

// ---------------------------------------------------------------- Borel data

void check_borel_shape(const BorelData& b) {
  const LieAlgebra& g = b.algebra;
  if (b.toral_dim > g.dim()) throw Error(ErrorKind::NotBorelShape, "toral part larger than the algebra");
  for (std::size_t i = 0; i < b.toral_dim; ++i)
    for (std::size_t j = i + 1; j < b.toral_dim; ++j)
      for (const auto& c : g.bracket_basis(i, j))
        if (!is_zero(c)) throw Error(ErrorKind::NotBorelShape, "toral part is not abelian");
  std::vector<FVec> ucols;
  for (std::size_t i = b.toral_dim; i < g.dim(); ++i) ucols.push_back(g.basis_vector(i));
  FMatrix u = FMatrix::from_columns(g.dim(), ucols, g.zero());
  auto derived = derived_subalgebra(g);
  if (!same_span(u, derived.basis()))
    throw Error(ErrorKind::NotBorelShape, "the non-toral basis vectors do not span [b, b]");
}

BorelKernels borel_kernels(const BorelData& b, const Embedding& iota) {
  check_borel_shape(b);
  const LieAlgebra& g = b.algebra;
  Subalgebra b0 = kernel_ideal(g, iota);
  FMatrix gens = kernel_generators(g, iota);
  std::size_t per = g.field().degree() - 1;
  std::size_t t_count = b.toral_dim * per;
  const LieAlgebra& local = b0.as_algebra();
  std::vector<FVec> tcols, ucols;
  for (std::size_t c = 0; c < gens.cols(); ++c) {
    auto coords = b0.coordinates(gens.column(c));
    (c < t_count ? tcols : ucols).push_back(std::move(*coords));
  }
  Subalgebra t0 = make_subalgebra(local, FMatrix::from_columns(local.dim(), tcols, local.zero()));
  Subalgebra u0 = make_subalgebra(local, FMatrix::from_columns(local.dim(), ucols, local.zero()));
  return BorelKernels{std::move(b0), std::move(t0), std::move(u0)};
}

LieModule character_module_on_kernel(const BorelData& b, const Embedding& iota, const DifferentialCharacter& dchi) {
  Subalgebra b0 = kernel_ideal(b.algebra, iota);
  auto chi = validate_character(b0.parent(), dchi.values);
  return one_dim_module(b0.as_algebra(), restrict_character(chi, b0));
}

std::vector<std::size_t> t_dimensions(const BorelData& b, const Embedding& iota, const DifferentialCharacter& dchi) {
  LieModule v = character_module_on_kernel(b, iota, dchi);
  return betti_numbers(build_complex(v, Direction::Cochain));
}

DecompositionReport hs_decomposition_check(const BorelData& b, const Embedding& iota,
                                           const DifferentialCharacter& dchi) {
  auto kernels = borel_kernels(b, iota);
  LieModule v = character_module_on_kernel(b, iota, dchi);
  DecompositionReport rep;
  CEComplex whole = build_complex(v, Direction::Cochain);
  rep.direct = betti_numbers(whole);
  rep.t0_dim = kernels.t0.dim();
  rep.u0_dim = kernels.u0.dim();
  for (long k = 0; k <= static_cast<long>(rep.u0_dim); ++k) {
    auto inv = invariants_of_cohomology(kernels.t0, kernels.u0, v, k);
    rep.u_invariants.push_back(inv.dimension);
    rep.u_cohomology.push_back(inv.full_dimension);
  }
  std::size_t top = kernels.b0.dim();
  for (std::size_t i = 0; i <= top; ++i) {
    std::size_t total = 0;
    for (std::size_t j = 0; j <= std::min(i, rep.t0_dim); ++j) {
      std::size_t kdeg = i - j;
      if (kdeg < rep.u_invariants.size())
        total += static_cast<std::size_t>(binomial(static_cast<int>(rep.t0_dim), static_cast<int>(j))) *
                 rep.u_invariants[kdeg];
    }
    rep.factored.push_back(total);
  }
  rep.equal = rep.direct == rep.factored;
  rep.vanishing_bound = (b.algebra.field().degree() - 1) * b.algebra.dim();
  rep.vanishes_above_bound = true;
  for (std::size_t i = rep.vanishing_bound + 1; i < rep.direct.size(); ++i)
    if (rep.direct[i] != 0) rep.vanishes_above_bound = false;
  for (long k = static_cast<long>(rep.vanishing_bound) + 1; k <= static_cast<long>(rep.vanishing_bound) + 2; ++k)
    if (cohomology(whole, k).dimension != 0) rep.vanishes_above_bound = false;
  return rep;
}

DifferentialCharacter toral_character(const BorelData& b, const Embedding& iota, const FieldElement& value) {
  std::size_t n = b.algebra.field().degree();
  DifferentialCharacter chi;
  chi.values.assign(n * b.algebra.dim(), iota.target().zero());
  for (std::size_t j = 0; j < b.toral_dim; ++j) chi.values[j * n] = value;
  return chi;
}

DifferentialCharacter zero_character(const LieAlgebra& ambient) {
  return DifferentialCharacter{std::vector<FieldElement>(ambient.dim(), ambient.zero())};
}

// ---------------------------------------------------------------- checks

WhiteheadResult whitehead_check(const LieAlgebra& g, const Embedding& iota,
                                const std::function<LieModule(const LieAlgebra&)>& make_module) {
  if (!is_semisimple(g)) throw Error(ErrorKind::NotSemisimple, "Killing form is degenerate");
  Subalgebra g0 = kernel_ideal(g, iota);
  LieModule v = make_module(g0.as_algebra());
  auto h1 = cohomology(build_complex(v, Direction::Cochain), 1).dimension;
  return {h1 == 0, h1};
}

DixmierResult dixmier_check(const LieAlgebra& u) {
  if (!is_nilpotent(u)) throw Error(ErrorKind::NotNilpotent, "lower central series does not reach zero");
  auto dims = betti_numbers(build_complex(trivial_module(u), Direction::Cochain));
  bool holds = std::all_of(dims.begin(), dims.end(), [](std::size_t x) { return x >= 1; });
  return {holds, std::move(dims)};
}

DualityResult duality_check(const LieModule& v) {
  auto homology = betti_numbers(build_complex(dual_module(v), Direction::Chain));
  auto coh = betti_numbers(build_complex(v, Direction::Cochain));
  bool holds = homology == coh;
  return {holds, std::move(homology), std::move(coh)};
}

EulerResult euler_check(const CEComplex& c) {
  long long chain = 0, betti = 0;
  auto dims = betti_numbers(c);
  for (long k = 0; k <= static_cast<long>(c.top_degree()); ++k) {
    long long s = k % 2 == 0 ? 1 : -1;
    chain += s * static_cast<long long>(c.space_dim(k));
    betti += s * static_cast<long long>(dims[static_cast<std::size_t>(k)]);
  }
  long long expected = c.top_degree() >= 1 ? 0 : static_cast<long long>(c.module().dim());
  return {chain == betti && chain == expected, chain, betti};
}

bool poincare_symmetric(const std::vector<std::size_t>& dims) {
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (dims[k] != dims[dims.size() - 1 - k]) return false;
  return true;
}

}  // namespace hav
