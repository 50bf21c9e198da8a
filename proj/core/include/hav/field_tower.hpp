#pragma once

// Exact number fields Q ⊆ L ⊆ K standing in for the local fields of the
// theory: arithmetic in a power basis, Galois automorphisms, p-adic
// valuations (where the extension of v_p is unique) and the splitting
// L ⊗_Q L ≅ Π_σ L.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hav/matrix.hpp"
#include "hav/rational.hpp"

namespace hav {

class FieldElement;
class NumberField;

namespace detail {
struct FieldData;
}

/// A field automorphism as the matrix acting on power-basis coordinates;
/// column k holds the coordinates of σ(θ^k).
struct Automorphism {
  Matrix<Rational> matrix;
};

class NumberField {
 public:
  /// The field Q, modelled as Q[x]/(x).
  static NumberField rationals();

  std::size_t degree() const;
  /// Ascending coefficients c_0..c_n of the monic defining polynomial.
  const std::vector<Rational>& polynomial() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The class θ of x.
  FieldElement generator() const;
  FieldElement element(std::vector<Rational> power_coordinates) const;
  FieldElement from_rational(const Rational& q) const;

  /// Designated Q-basis v_1 = 1, ..., v_n; column i holds the power-basis
  /// coordinates of v_{i+1}.
  const Matrix<Rational>& basis() const;
  FieldElement basis_element(std::size_t i) const;
  /// Coordinates of x with respect to the designated basis.
  std::vector<Rational> basis_coordinates(const FieldElement& x) const;

  bool is_galois() const;
  /// Identity first; empty unless the field was validated as Galois.
  const std::vector<Automorphism>& automorphisms() const;

  /// Matrix of y ↦ x·y on power coordinates.
  Matrix<Rational> multiplication_matrix(const FieldElement& x) const;
  Rational norm(const FieldElement& x) const;

  std::string describe() const;

  friend bool operator==(const NumberField& a, const NumberField& b);

 private:
  friend class FieldElement;
  friend NumberField validate_field(const std::vector<Rational>&, const std::optional<Matrix<Rational>>&, bool,
                                    const std::vector<Matrix<Rational>>&);
  explicit NumberField(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

class FieldElement {
 public:
  FieldElement(const NumberField& field, std::vector<Rational> coords);

  const std::vector<Rational>& coordinates() const { return coords_; }
  NumberField field() const { return NumberField(data_); }
  bool is_rational() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.coords_ == b.coords_; }

  FieldElement inverse() const;
  FieldElement scaled(const Rational& q) const;
  FieldElement pow(unsigned e) const;

  std::string to_string() const;

 private:
  friend class NumberField;
  FieldElement(std::shared_ptr<const detail::FieldData> data, std::vector<Rational> coords)
      : data_(std::move(data)), coords_(std::move(coords)) {}

  std::shared_ptr<const detail::FieldData> data_;
  std::vector<Rational> coords_;
};

bool is_zero(const FieldElement& x);
FieldElement zero_like(const FieldElement& x);
FieldElement one_like(const FieldElement& x);

/// Builds and checks a number field from ascending monic coefficients.
/// `basis` (columns in power coordinates) defaults to the power basis.
/// With `galois` set, `automorphisms` are checked when supplied and computed
/// by root-finding otherwise.
NumberField validate_field(const std::vector<Rational>& polynomial,
                           const std::optional<Matrix<Rational>>& basis = std::nullopt, bool galois = false,
                           const std::vector<Matrix<Rational>>& automorphisms = {});

/// Named desk-scale fields: "Q", "sqrt2" (x^2 - 2), "cubic" (x^3 - x^2 - 2x + 1),
/// "pure_cubic" (x^3 - 2, not Galois), "i" (x^2 + 1).
NumberField named_field(const std::string& name);

/// All roots of the defining polynomial that lie in L, as automorphism
/// matrices (identity first). Throws NotGalois if fewer than n exist.
std::vector<Automorphism> galois_automorphisms(const NumberField& field);

/// Roots of the defining polynomial of `poly_field` inside `target`.
std::vector<FieldElement> roots_in(const std::vector<Rational>& polynomial, const NumberField& target);

FieldElement apply(const Automorphism& sigma, const FieldElement& x);
bool is_ring_homomorphism(const NumberField& field, const Matrix<Rational>& m);
Automorphism compose(const Automorphism& a, const Automorphism& b);

/// Polynomial with rational coefficients evaluated at a field element.
FieldElement evaluate(const std::vector<Rational>& polynomial, const FieldElement& x);

/// A ring embedding ι: source → target, stored as the matrix on power
/// coordinates (column k = coordinates of ι(θ^k)).
class Embedding {
 public:
  static Embedding identity(const NumberField& field);
  /// The unique embedding Q → target.
  static Embedding from_rationals(const NumberField& target);
  /// θ ↦ image; throws EmbeddingInvalid if image is not a root.
  static Embedding from_generator_image(const NumberField& source, const FieldElement& image);
  static Embedding from_matrix(const NumberField& source, const NumberField& target, Matrix<Rational> m);

  const NumberField& source() const { return source_; }
  const NumberField& target() const { return target_; }
  const Matrix<Rational>& matrix() const { return matrix_; }

  FieldElement operator()(const FieldElement& x) const;

 private:
  Embedding(NumberField s, NumberField t, Matrix<Rational> m)
      : source_(std::move(s)), target_(std::move(t)), matrix_(std::move(m)) {}
  NumberField source_;
  NumberField target_;
  Matrix<Rational> matrix_;
};

/// The p-adic valuation on L normalized by v(p) = 1. Available for L = Q and
/// for quadratic L in which p is inert or ramified.
class PAdicValuation {
 public:
  PAdicValuation(NumberField field, long p);

  long prime() const { return p_; }
  /// Ramification index of p in L.
  int ramification() const { return e_; }
  /// nullopt for zero (+infinity).
  std::optional<Rational> operator()(const FieldElement& x) const;
  std::optional<Rational> operator()(const Rational& x) const;

 private:
  NumberField field_;
  long p_;
  int e_ = 1;
};

/// Matrix of L ⊗_Q L → Π_σ L, a ⊗ b ↦ (σ(a)·b)_σ. Domain basis v_i ⊗ v_k at
/// index i·n + k; codomain basis v_k in copy σ at index σ·n + k.
Matrix<Rational> splitting_matrix(const NumberField& field);

/// The preimage of the unit of component σ (coordinates over v_i ⊗ v_k).
std::vector<Rational> idempotent_preimage(const NumberField& field, std::size_t sigma);

struct SigmaBound {
  LogNorm log_s;   ///< log_p of max |v_i|·|x_ik| over the preimage's coordinates
  bool integral;   ///< log_s <= 0
};

SigmaBound s_sigma(const NumberField& field, std::size_t sigma, long p);

}  // namespace hav
