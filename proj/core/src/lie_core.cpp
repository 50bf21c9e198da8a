#include "hav/lie_core.hpp"

#include <sstream>

namespace hav {

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra::LieAlgebra(NumberField field, std::size_t dim, std::vector<FieldElement> constants,
                       std::vector<std::string> labels)
    : field_(std::move(field)), dim_(dim), constants_(std::move(constants)), labels_(std::move(labels)) {
  if (constants_.size() != dim_ * dim_ * dim_)
    throw Error(ErrorKind::DimensionMismatch, "structure constants must form a d x d x d cube");
  if (labels_.empty())
    for (std::size_t i = 0; i < dim_; ++i) labels_.push_back("x" + std::to_string(i + 1));
  if (labels_.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "label count");
}

FVec LieAlgebra::basis_vector(std::size_t i) const {
  FVec v = zero_vector();
  v[i] = field_.one();
  return v;
}

FVec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  FVec v;
  v.reserve(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v.push_back(constant(i, j, k));
  return v;
}

FVec LieAlgebra::bracket(const FVec& a, const FVec& b) const {
  FVec out = zero_vector();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (is_zero(b[j]) || i == j) continue;
      FieldElement ab = a[i] * b[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        const auto& c = constant(i, j, k);
        if (!is_zero(c)) out[k] = out[k] + ab * c;
      }
    }
  }
  return out;
}

FMatrix LieAlgebra::ad(std::size_t i) const {
  FMatrix m(dim_, dim_, field_.zero());
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = constant(i, j, k);
  return m;
}

FMatrix LieAlgebra::ad(const FVec& x) const {
  FMatrix m(dim_, dim_, field_.zero());
  for (std::size_t j = 0; j < dim_; ++j) {
    auto col = bracket(x, basis_vector(j));
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& c : constants_)
    if (!is_zero(c)) return false;
  return true;
}

LieAlgebra validate_algebra(const NumberField& field, std::size_t dim, std::vector<FieldElement> constants,
                            std::vector<std::string> labels) {
  LieAlgebra g(field, dim, std::move(constants), std::move(labels));
  auto triple = [](std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        bool ok = i == j ? is_zero(g.constant(i, i, k)) : is_zero(g.constant(i, j, k) + g.constant(j, i, k));
        if (!ok) throw Error(ErrorKind::AntisymmetryViolated, "constants at " + triple(i, j, k));
      }
  // Jacobi: [[x_i,x_j],x_k] + [[x_j,x_k],x_i] + [[x_k,x_i],x_j] = 0.
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (std::size_t k = j + 1; k < dim; ++k) {
        FVec s = g.bracket(g.bracket_basis(i, j), g.basis_vector(k));
        FVec t = g.bracket(g.bracket_basis(j, k), g.basis_vector(i));
        FVec u = g.bracket(g.bracket_basis(k, i), g.basis_vector(j));
        for (std::size_t m = 0; m < dim; ++m)
          if (!is_zero(s[m] + t[m] + u[m])) throw Error(ErrorKind::JacobiViolated, "triple " + triple(i, j, k));
      }
  return g;
}

LieAlgebra algebra_from_sparse(const NumberField& field, std::size_t dim, const std::vector<SparseConstant>& entries,
                               std::vector<std::string> labels) {
  std::vector<FieldElement> c(dim * dim * dim, field.zero());
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim)
      throw Error(ErrorKind::DimensionMismatch, "constant index out of range");
    if (e.i >= e.j) throw Error(ErrorKind::AntisymmetryViolated, "sparse constants must have i < j");
    c[(e.i * dim + e.j) * dim + e.k] = field.from_rational(e.value);
    c[(e.j * dim + e.i) * dim + e.k] = field.from_rational(-e.value);
  }
  return validate_algebra(field, dim, std::move(c), std::move(labels));
}

// ---------------------------------------------------------------- modules

LieModule::LieModule(LieAlgebra algebra, std::vector<FMatrix> action, std::optional<std::size_t> dim)
    : algebra_(std::move(algebra)), dim_(dim.value_or(0)), action_(std::move(action)) {
  if (action_.size() != algebra_.dim()) throw Error(ErrorKind::DimensionMismatch, "one action matrix per basis vector");
  if (!action_.empty()) dim_ = action_[0].rows();
  for (const auto& a : action_)
    if (a.rows() != dim_ || a.cols() != dim_) throw Error(ErrorKind::DimensionMismatch, "action matrices must be square");
}

FMatrix LieModule::action_of(const FVec& x) const {
  FMatrix out(dim_, dim_, algebra_.zero());
  for (std::size_t i = 0; i < action_.size(); ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c)
        if (!is_zero(action_[i](r, c))) out(r, c) = out(r, c) + x[i] * action_[i](r, c);
  }
  return out;
}

LieModule validate_module(const LieAlgebra& g, std::vector<FMatrix> action) {
  LieModule v(g, std::move(action));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      FMatrix lhs = v.action_of(g.bracket_basis(i, j));
      FMatrix rhs = v.action(i) * v.action(j) - v.action(j) * v.action(i);
      if (!(lhs == rhs))
        throw Error(ErrorKind::DimensionMismatch,
                    "module relation fails for pair (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  return v;
}

LieModule trivial_module(const LieAlgebra& g, std::size_t dim) {
  std::vector<FMatrix> action(g.dim(), FMatrix(dim, dim, g.zero()));
  return LieModule(g, std::move(action), dim);
}

LieModule adjoint_module(const LieAlgebra& g) {
  std::vector<FMatrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(g.ad(i));
  return LieModule(g, std::move(action), g.dim());
}

LieModule dual_module(const LieModule& v) {
  std::vector<FMatrix> action;
  for (const auto& a : v.actions()) {
    FMatrix t = a.transpose();
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) = -t(r, c);
    action.push_back(std::move(t));
  }
  return LieModule(v.algebra(), std::move(action), v.dim());
}

bool DifferentialCharacter::is_zero() const {
  for (const auto& v : values)
    if (!hav::is_zero(v)) return false;
  return true;
}

FieldElement DifferentialCharacter::operator()(const FVec& x) const {
  if (x.size() != values.size()) throw Error(ErrorKind::DimensionMismatch, "character evaluation");
  FieldElement acc = zero_like(values.empty() ? x.at(0) : values[0]);
  for (std::size_t i = 0; i < x.size(); ++i) acc = acc + values[i] * x[i];
  return acc;
}

DifferentialCharacter validate_character(const LieAlgebra& g, std::vector<FieldElement> values) {
  if (values.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "one character value per basis vector");
  DifferentialCharacter chi{std::move(values)};
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!is_zero(chi(g.bracket_basis(i, j))))
        throw Error(ErrorKind::NotACharacter, "does not vanish on [x" + std::to_string(i + 1) + ", x" +
                                                  std::to_string(j + 1) + "]");
  return chi;
}

LieModule one_dim_module(const LieAlgebra& g, const DifferentialCharacter& dchi) {
  auto chi = validate_character(g, dchi.values);
  std::vector<FMatrix> action;
  for (const auto& v : chi.values) {
    FMatrix m(1, 1, g.zero());
    m(0, 0) = v;
    action.push_back(std::move(m));
  }
  return LieModule(g, std::move(action), 1);
}

// ---------------------------------------------------------------- subalgebras

bool Subalgebra::contains(const FVec& x) const { return coordinates(x).has_value(); }

std::optional<FVec> Subalgebra::coordinates(const FVec& x) const {
  return coordinates_in(basis_, std::span<const FieldElement>(x));
}

FVec Subalgebra::to_parent(const FVec& local) const { return basis_.apply(std::span<const FieldElement>(local)); }

Subalgebra make_subalgebra(const LieAlgebra& parent, const FMatrix& spanning) {
  if (spanning.rows() != parent.dim()) throw Error(ErrorKind::DimensionMismatch, "spanning vectors length");
  auto ech = row_reduce(spanning);
  FMatrix basis = select_columns(spanning, std::span<const std::size_t>(ech.pivot_columns));
  std::size_t k = basis.cols();
  std::vector<FieldElement> consts(k * k * k, parent.zero());
  std::vector<FVec> cols = basis.columns();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      FVec br = parent.bracket(cols[a], cols[b]);
      auto c = coordinates_in(basis, std::span<const FieldElement>(br));
      if (!c) throw Error(ErrorKind::DimensionMismatch, "span is not closed under the bracket");
      for (std::size_t m = 0; m < k; ++m) {
        consts[(a * k + b) * k + m] = (*c)[m];
        consts[(b * k + a) * k + m] = -(*c)[m];
      }
    }
  bool ideal = true;
  for (std::size_t i = 0; i < parent.dim() && ideal; ++i)
    for (std::size_t a = 0; a < k && ideal; ++a)
      if (!span_contains(basis, std::span<const FieldElement>(parent.bracket(parent.basis_vector(i), cols[a]))))
        ideal = false;
  LieAlgebra induced(parent.field(), k, std::move(consts));
  return Subalgebra(parent, std::move(basis), std::move(induced), ideal);
}

LieModule restrict_module(const LieModule& v, const Subalgebra& s) {
  std::vector<FMatrix> action;
  for (const auto& col : s.basis().columns()) action.push_back(v.action_of(col));
  return LieModule(s.as_algebra(), std::move(action), v.dim());
}

DifferentialCharacter restrict_character(const DifferentialCharacter& dchi, const Subalgebra& s) {
  DifferentialCharacter out;
  for (const auto& col : s.basis().columns()) out.values.push_back(dchi(col));
  return out;
}

Subalgebra whole_algebra(const LieAlgebra& g) {
  return make_subalgebra(g, FMatrix::identity(g.dim(), g.zero()));
}

Subalgebra derived_subalgebra(const LieAlgebra& g) {
  std::vector<FVec> cols;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) cols.push_back(g.bracket_basis(i, j));
  return make_subalgebra(g, FMatrix::from_columns(g.dim(), cols, g.zero()));
}

Subalgebra center(const LieAlgebra& g) {
  std::size_t d = g.dim();
  FMatrix m(d * d, d, g.zero());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) m(j * d + k, a) = g.constant(a, j, k);
  return make_subalgebra(g, null_space(m));
}

std::vector<Subalgebra> lower_central_series(const LieAlgebra& g) {
  std::vector<Subalgebra> series{whole_algebra(g)};
  while (series.back().dim() > 0) {
    std::vector<FVec> cols;
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (const auto& t : series.back().basis().columns()) cols.push_back(g.bracket(g.basis_vector(i), t));
    auto next = make_subalgebra(g, FMatrix::from_columns(g.dim(), cols, g.zero()));
    if (next.dim() == series.back().dim()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_nilpotent(const LieAlgebra& g) { return lower_central_series(g).back().dim() == 0; }

bool is_solvable(const LieAlgebra& g) {
  LieAlgebra cur = g;
  while (cur.dim() > 0) {
    auto d = derived_subalgebra(cur);
    if (d.dim() == cur.dim()) return false;
    cur = d.as_algebra();
  }
  return true;
}

FMatrix killing_form(const LieAlgebra& g) {
  std::size_t d = g.dim();
  std::vector<FMatrix> ads;
  for (std::size_t i = 0; i < d; ++i) ads.push_back(g.ad(i));
  FMatrix k(d, d, g.zero());
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      FMatrix p = ads[a] * ads[b];
      FieldElement tr = g.zero();
      for (std::size_t i = 0; i < d; ++i) tr = tr + p(i, i);
      k(a, b) = tr;
      k(b, a) = tr;
    }
  return k;
}

bool is_semisimple(const LieAlgebra& g) {
  if (g.dim() == 0) return true;
  return !is_zero(determinant(killing_form(g)));
}

// ---------------------------------------------------------------- scalars

LieAlgebra restrict_scalars(const LieAlgebra& g) {
  const NumberField& L = g.field();
  NumberField Q = NumberField::rationals();
  std::size_t n = L.degree(), d = g.dim(), D = n * d;
  std::vector<FieldElement> consts(D * D * D, Q.zero());
  std::vector<FieldElement> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(L.basis_element(i));
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < n; ++i)
      labels.push_back(n == 1 ? g.labels()[j] : "v" + std::to_string(i + 1) + "*" + g.labels()[j]);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t l = 0; l < d; ++l) {
      if (j == l) continue;
      for (std::size_t m = 0; m < d; ++m) {
        const auto& c = g.constant(j, l, m);
        if (is_zero(c)) continue;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < n; ++k) {
            auto coords = L.basis_coordinates(v[i] * v[k] * c);
            std::size_t a = j * n + i, b = l * n + k;
            for (std::size_t t = 0; t < n; ++t)
              if (!is_zero(coords[t])) {
                auto& slot = consts[(a * D + b) * D + m * n + t];
                slot = slot + Q.from_rational(coords[t]);
              }
          }
      }
    }
  return LieAlgebra(Q, D, std::move(consts), std::move(labels));
}

LieAlgebra base_change(const LieAlgebra& g, const Embedding& iota) {
  if (!(iota.source() == g.field()))
    throw Error(ErrorKind::EmbeddingInvalid, "embedding source differs from the algebra's field");
  std::vector<FieldElement> consts;
  consts.reserve(g.constants().size());
  for (const auto& c : g.constants()) consts.push_back(iota(c));
  return LieAlgebra(iota.target(), g.dim(), std::move(consts), g.labels());
}

LieAlgebra ambient_algebra(const LieAlgebra& g, const Embedding& iota) {
  if (!(iota.source() == g.field()))
    throw Error(ErrorKind::EmbeddingInvalid, "embedding source differs from the algebra's field");
  return base_change(restrict_scalars(g), Embedding::from_rationals(iota.target()));
}

namespace {

Automorphism automorphism_at(const NumberField& L, std::size_t sigma) {
  if (sigma == 0) return Automorphism{Matrix<Rational>::identity(L.degree(), Rational(0))};
  if (!L.is_galois()) throw Error(ErrorKind::NotGalois, L.describe() + " is not Galois");
  if (sigma >= L.automorphisms().size()) throw Error(ErrorKind::DimensionMismatch, "automorphism index out of range");
  return L.automorphisms()[sigma];
}

// Matrix of a ⊗ v_ix_j ↦ a·ι(σ(v_i))·x_j from K ⊗ g_0 to K ⊗_L g.
FMatrix twisted_multiplication(const LieAlgebra& g, const Embedding& iota, const Automorphism* sigma) {
  const NumberField& L = g.field();
  std::size_t n = L.degree(), d = g.dim();
  FMatrix phi(d, n * d, iota.target().zero());
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement vi = L.basis_element(i);
    if (sigma) vi = apply(*sigma, vi);
    FieldElement img = iota(vi);
    for (std::size_t j = 0; j < d; ++j) phi(j, j * n + i) = img;
  }
  return phi;
}

Subalgebra twisted_kernel(const LieAlgebra& g, const Embedding& iota, std::size_t sigma) {
  if (!(iota.source() == g.field()))
    throw Error(ErrorKind::EmbeddingInvalid, "embedding source differs from the algebra's field");
  Automorphism s = automorphism_at(g.field(), sigma);
  LieAlgebra ambient = ambient_algebra(g, iota);
  FMatrix kernel = null_space(twisted_multiplication(g, iota, &s));
  FMatrix gens = kernel_generators(g, iota, sigma);
  if (!same_span(kernel, gens))
    throw Error(ErrorKind::DimensionMismatch, "explicit generators do not span the computed kernel");
  return make_subalgebra(ambient, gens);
}

}  // namespace

FMatrix kernel_generators(const LieAlgebra& g, const Embedding& iota, std::size_t sigma) {
  const NumberField& L = g.field();
  Automorphism s = automorphism_at(L, sigma);
  const NumberField& K = iota.target();
  std::size_t n = L.degree(), d = g.dim();
  std::vector<FVec> cols;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 1; i < n; ++i) {
      FVec v(n * d, K.zero());
      v[j * n] = iota(apply(s, L.basis_element(i)));
      v[j * n + i] = -K.one();
      cols.push_back(std::move(v));
    }
  return FMatrix::from_columns(n * d, cols, K.zero());
}

Subalgebra kernel_ideal(const LieAlgebra& g, const Embedding& iota) { return twisted_kernel(g, iota, 0); }

Subalgebra sigma_kernel_ideal(const LieAlgebra& g, std::size_t sigma, const Embedding& iota) {
  if (!g.field().is_galois()) throw Error(ErrorKind::NotGalois, g.field().describe() + " is not Galois");
  return twisted_kernel(g, iota, sigma);
}

}  // namespace hav
