#pragma once

// Lie algebras given by structure constants over an exact number field,
// finite-dimensional modules, restriction and extension of scalars, and the
// kernel ideals of K ⊗_Q g_0 → K ⊗_L g (and their Galois twists).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hav/field_tower.hpp"
#include "hav/matrix.hpp"

namespace hav {

using FVec = Vec<FieldElement>;
using FMatrix = Matrix<FieldElement>;

class LieAlgebra {
 public:
  /// Unchecked construction; use validate_algebra for untrusted constants.
  /// constants[(i*d + j)*d + k] is the coefficient of x_k in [x_i, x_j].
  LieAlgebra(NumberField field, std::size_t dim, std::vector<FieldElement> constants,
             std::vector<std::string> labels = {});

  const NumberField& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const FieldElement& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<FieldElement>& constants() const { return constants_; }

  FieldElement zero() const { return field_.zero(); }
  FVec zero_vector() const { return FVec(dim_, field_.zero()); }
  FVec basis_vector(std::size_t i) const;

  /// [a, b] for coordinate vectors.
  FVec bracket(const FVec& a, const FVec& b) const;
  /// Coordinates of [x_i, x_j].
  FVec bracket_basis(std::size_t i, std::size_t j) const;
  /// Matrix of ad(x_i): column j holds [x_i, x_j].
  FMatrix ad(std::size_t i) const;
  FMatrix ad(const FVec& x) const;

  bool is_abelian() const;

 private:
  NumberField field_;
  std::size_t dim_;
  std::vector<FieldElement> constants_;
  std::vector<std::string> labels_;
};

/// Checks antisymmetry and the Jacobi identity exactly; the error names the
/// first violated triple (1-based indices).
LieAlgebra validate_algebra(const NumberField& field, std::size_t dim, std::vector<FieldElement> constants,
                            std::vector<std::string> labels = {});

struct SparseConstant {
  std::size_t i, j, k;
  Rational value;
};

/// Sparse input with i < j only; [x_j, x_i] is filled in by antisymmetry.
LieAlgebra algebra_from_sparse(const NumberField& field, std::size_t dim, const std::vector<SparseConstant>& entries,
                               std::vector<std::string> labels = {});

class LieModule {
 public:
  /// `dim` is required only when the algebra has dimension 0.
  LieModule(LieAlgebra algebra, std::vector<FMatrix> action, std::optional<std::size_t> dim = std::nullopt);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const FMatrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<FMatrix>& actions() const { return action_; }
  /// ρ(x) for a coordinate vector x.
  FMatrix action_of(const FVec& x) const;

 private:
  LieAlgebra algebra_;
  std::size_t dim_;
  std::vector<FMatrix> action_;
};

/// Checks ρ([x_i, x_j]) = ρ_i ρ_j - ρ_j ρ_i for all pairs.
LieModule validate_module(const LieAlgebra& g, std::vector<FMatrix> action);

LieModule trivial_module(const LieAlgebra& g, std::size_t dim = 1);
LieModule adjoint_module(const LieAlgebra& g);
/// V* with ρ*(x) = -ρ(x)^T.
LieModule dual_module(const LieModule& v);

/// A linear form on g vanishing on [g, g].
struct DifferentialCharacter {
  std::vector<FieldElement> values;

  bool is_zero() const;
  FieldElement operator()(const FVec& x) const;
};

/// Validates dχ against g; throws NotACharacter naming the offending pair.
DifferentialCharacter validate_character(const LieAlgebra& g, std::vector<FieldElement> values);

/// The 1-dimensional module K_dχ.
LieModule one_dim_module(const LieAlgebra& g, const DifferentialCharacter& dchi);

/// A subalgebra given by independent coordinate columns in its parent.
class Subalgebra {
 public:
  const LieAlgebra& parent() const { return parent_; }
  const FMatrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  /// The subalgebra as a Lie algebra in its own basis.
  const LieAlgebra& as_algebra() const { return induced_; }
  bool is_ideal() const { return is_ideal_; }

  bool contains(const FVec& x) const;
  /// Coordinates of x in this basis; nullopt if x is outside.
  std::optional<FVec> coordinates(const FVec& x) const;
  /// Parent coordinates of a vector given in this basis.
  FVec to_parent(const FVec& local) const;

 private:
  friend Subalgebra make_subalgebra(const LieAlgebra&, const FMatrix&);
  Subalgebra(LieAlgebra parent, FMatrix basis, LieAlgebra induced, bool ideal)
      : parent_(std::move(parent)), basis_(std::move(basis)), induced_(std::move(induced)), is_ideal_(ideal) {}

  LieAlgebra parent_;
  FMatrix basis_;
  LieAlgebra induced_;
  bool is_ideal_;
};

/// Subalgebra spanned by the columns of `spanning` (dependent columns are
/// dropped, first-pivot order). Throws DimensionMismatch if not closed.
Subalgebra make_subalgebra(const LieAlgebra& parent, const FMatrix& spanning);

/// Restriction of a module on `s.parent()` to the subalgebra s.
LieModule restrict_module(const LieModule& v, const Subalgebra& s);
/// Restriction of a character of `s.parent()` to s.
DifferentialCharacter restrict_character(const DifferentialCharacter& dchi, const Subalgebra& s);

/// g over L viewed over Q: basis v_i x_j at index j*n + i.
LieAlgebra restrict_scalars(const LieAlgebra& g);

/// The same constants pushed through ι.
LieAlgebra base_change(const LieAlgebra& g, const Embedding& iota);

/// K ⊗_Q g_0 for g over L and ι: L → K.
LieAlgebra ambient_algebra(const LieAlgebra& g, const Embedding& iota);

/// The generators ι(σ(v_i)) ⊗ v_1x_j - 1 ⊗ v_ix_j (i >= 2) of the σ-twisted
/// kernel, as columns in K ⊗ g_0 coordinates, ordered j-major.
FMatrix kernel_generators(const LieAlgebra& g, const Embedding& iota, std::size_t sigma = 0);

/// Kernel of K ⊗_Q g_0 → K ⊗_L g, a ⊗ v_ix_j ↦ a·ι(v_i)·x_j, computed as an
/// exact null space and returned in the explicit generator basis.
Subalgebra kernel_ideal(const LieAlgebra& g, const Embedding& iota);

/// Kernel of a ⊗ v_ix_j ↦ a·ι(σ(v_i))·x_j for σ the sigma-th automorphism.
Subalgebra sigma_kernel_ideal(const LieAlgebra& g, std::size_t sigma, const Embedding& iota);

Subalgebra whole_algebra(const LieAlgebra& g);
Subalgebra derived_subalgebra(const LieAlgebra& g);
Subalgebra center(const LieAlgebra& g);
/// g = g^1 ⊇ g^2 = [g, g] ⊇ ... until the series stabilizes (last term
/// repeated once dropped).
std::vector<Subalgebra> lower_central_series(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
FMatrix killing_form(const LieAlgebra& g);
bool is_semisimple(const LieAlgebra& g);

/// A solvable algebra b = t ⋉ u whose first toral_dim basis vectors span t.
struct BorelData {
  LieAlgebra algebra;
  std::size_t toral_dim;
};

using CatalogParams = std::map<std::string, long>;

/// Built-ins over Q: abelian{n}, heisenberg{m} (dim 2m+1), sl2, borel_sl2,
/// borel_sl3. Every entry accepts scale_p = p, multiplying all constants by
/// p^κ (κ = 1 for odd p, 2 for p = 2).
LieAlgebra catalog(const std::string& name, const CatalogParams& params = {});
BorelData catalog_borel(const std::string& name, const CatalogParams& params = {});
std::vector<std::string> catalog_names();

/// κ = 1 for odd p, 2 for p = 2.
inline int kappa_for(long p) { return p == 2 ? 2 : 1; }

}  // namespace hav
