#pragma once

// Chevalley-Eilenberg complexes with exact differentials, (co)homology with
// representatives, induced toral actions on cohomology, and the dimension
// checks built on them (higher analytic vectors T^i, the Hochschild-Serre
// split for Borel data, Whitehead, Dixmier, duality, Euler characteristic).

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hav/lie_core.hpp"

namespace hav {

enum class Direction { Chain, Cochain };

/// k-subsets of {0..d-1} in colexicographic order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t d, std::size_t k);
/// Position of an increasing subset in colex order.
std::size_t colex_rank(std::span<const std::size_t> subset);

/// Chain direction: V ⊗ Λ^k h with V made a right module by v·x = -ρ(x)v and
///   ∂(v ⊗ x_1∧…∧x_q) = Σ_{s<t} (-1)^{s+t} v ⊗ [x_s,x_t]∧…x̂_s…x̂_t…
///                     + Σ_s (-1)^{s+1} v·x_s ⊗ …x̂_s… .
/// Cochain direction: Hom(Λ^k h, V) with
///   (df)(x_0,…,x_k) = Σ_i (-1)^i ρ(x_i) f(…x̂_i…)
///                   + Σ_{i<j} (-1)^{i+j} f([x_i,x_j], …x̂_i…x̂_j…).
/// Degree-k coordinates are indexed colex_rank(S)·dim V + module index.
class CEComplex {
 public:
  const LieAlgebra& algebra() const { return module_.algebra(); }
  const LieModule& module() const { return module_; }
  Direction direction() const { return direction_; }
  std::size_t top_degree() const { return algebra().dim(); }

  /// dim of the degree-k space; 0 outside [0, top_degree].
  std::size_t space_dim(long k) const;
  /// The differential leaving degree k (to k-1 for chains, k+1 for cochains).
  /// Outside the nonzero range this is a zero matrix of the right shape.
  FMatrix differential(long k) const;
  /// The differential arriving in degree k.
  FMatrix incoming(long k) const;

 private:
  friend CEComplex build_complex(const LieModule&, Direction);
  CEComplex(LieModule m, Direction d) : module_(std::move(m)), direction_(d) {}

  LieModule module_;
  Direction direction_;
  // chain: maps_[k] = ∂_k for k = 1..d (index 0 unused); cochain: maps_[k] = d^k for k = 0..d-1
  std::vector<FMatrix> maps_;
};

CEComplex build_complex(const LieModule& v, Direction direction);

/// Exactly checks that consecutive differentials compose to zero.
bool squares_to_zero(const CEComplex& c);

struct CohomologySpace {
  long degree;
  std::size_t dimension;
  /// Columns: cycles (cocycles) independent modulo boundaries.
  FMatrix representatives;
  std::size_t ambient_dim;
};

/// Cohomology for cochain complexes, homology for chain complexes.
/// Degrees above the top give the zero space; negative degrees throw
/// DegreeOutOfRange. `pivot_order`, a permutation of the cycle basis
/// (nullity of the outgoing differential), sets the order in which cycles are
/// offered when choosing representatives.
CohomologySpace cohomology(const CEComplex& c, long k, std::span<const std::size_t> pivot_order = {});

/// Dimensions for k = 0..top_degree.
std::vector<std::size_t> betti_numbers(const CEComplex& c);

/// Matrix of the action of x ∈ t on Hom(Λ^k u, V):
/// (x·f)(w) = ρ(x)f(w) - Σ_i f(…,[x,w_i],…). `x` is given in parent coordinates.
FMatrix cochain_action(const Subalgebra& u, const LieModule& v, const FVec& x, std::size_t k);

struct InvariantCohomology {
  std::size_t dimension;
  std::size_t full_dimension;  ///< dim H^k(u, V) before taking invariants
  FMatrix basis;               ///< invariant classes as cocycle columns
};

/// H^k(u, V)^t for subalgebras t, u of a common parent, t normalizing u, and
/// V a module over the parent. Throws ActionNotChainMap when the induced
/// action does not commute with the differential.
InvariantCohomology invariants_of_cohomology(const Subalgebra& t, const Subalgebra& u, const LieModule& v, long k,
                                             std::span<const std::size_t> pivot_order = {});

/// The Borel data b over L (constants already in L), its kernel ideal b^0 in
/// K ⊗ b_0 and the toral and nilpotent kernels t^0, u^0 as subalgebras of b^0.
struct BorelKernels {
  Subalgebra b0;  ///< inside K ⊗_Q b_0
  Subalgebra t0;  ///< inside b0.as_algebra()
  Subalgebra u0;  ///< inside b0.as_algebra()
};

/// Checks the shape b = t ⋉ u with t abelian and u = [b, b]; throws NotBorelShape.
void check_borel_shape(const BorelData& b);
BorelKernels borel_kernels(const BorelData& b, const Embedding& iota);

/// The module K_dχ on b^0 for a character dχ of K ⊗ b_0 (values on the
/// v_i x_j basis).
LieModule character_module_on_kernel(const BorelData& b, const Embedding& iota, const DifferentialCharacter& dchi);

/// dim T^i K_χ = dim H^i(b^0, K_dχ) for i = 0..(n-1)·dim b.
std::vector<std::size_t> t_dimensions(const BorelData& b, const Embedding& iota, const DifferentialCharacter& dchi);

struct DecompositionReport {
  std::vector<std::size_t> direct;          ///< dim H^i(b^0, K_dχ)
  std::vector<std::size_t> factored;        ///< Σ_{j+k=i} C(dim t^0, j)·dim H^k(u^0, K_dχ)^{t^0}
  std::vector<std::size_t> u_invariants;    ///< dim H^k(u^0, K_dχ)^{t^0}
  std::vector<std::size_t> u_cohomology;    ///< dim H^k(u^0, K_dχ)
  std::size_t t0_dim = 0;
  std::size_t u0_dim = 0;
  std::size_t vanishing_bound = 0;          ///< (n-1)·dim_L b
  bool equal = false;
  bool vanishes_above_bound = false;
};

DecompositionReport hs_decomposition_check(const BorelData& b, const Embedding& iota,
                                           const DifferentialCharacter& dchi);

/// The character of K ⊗ b_0 taking `value` on v_1·t_j for each toral t_j and
/// zero elsewhere.
DifferentialCharacter toral_character(const BorelData& b, const Embedding& iota, const FieldElement& value);
DifferentialCharacter zero_character(const LieAlgebra& ambient);

struct WhiteheadResult {
  bool vanishes;
  std::size_t h1_dim;
};

/// For semisimple g over L: dim H^1(g^0, V) = 0, with V built from g^0 by
/// `make_module`. Throws NotSemisimple.
WhiteheadResult whitehead_check(const LieAlgebra& g, const Embedding& iota,
                                const std::function<LieModule(const LieAlgebra&)>& make_module);

struct DixmierResult {
  bool holds;
  std::vector<std::size_t> dims;
};

/// dim H^k(u, K) >= 1 for 0 <= k <= dim u; throws NotNilpotent.
DixmierResult dixmier_check(const LieAlgebra& u);

struct DualityResult {
  bool holds;
  std::vector<std::size_t> homology_of_dual;
  std::vector<std::size_t> cohomology;
};

/// dim H_k(h, V*) = dim H^k(h, V) for all k, from two separately built complexes.
DualityResult duality_check(const LieModule& v);

struct EulerResult {
  bool holds;
  long long chain_characteristic;
  long long betti_characteristic;
};

EulerResult euler_check(const CEComplex& c);

/// dim H^k = dim H^{top-k} for every k.
bool poincare_symmetric(const std::vector<std::size_t>& dims);

}  // namespace hav
