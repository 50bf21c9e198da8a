#pragma once

// Truncated models of U_r(g, K) (PBW series) and of D_r(Z_p^d, K) (Mahler
// series), with exact norms kept in log_p scale.

#include <cstddef>
#include <map>
#include <vector>

#include "hav/lie_core.hpp"
#include "hav/rational.hpp"

namespace hav {

/// r = p^{-a} with 0 < a < 1; κ is forced by p.
struct RadiusParam {
  long p = 3;
  Rational a;
  int kappa = 1;
  bool small_radius = false;  ///< κ·a > 1/(p-1)

  /// Validates p and a; throws PreconditionUnmet otherwise.
  static RadiusParam make(long p, const Rational& a);
};

struct RadiusConstant {
  LogNorm log_c;
  /// The t in {1, p, p^2, ...} attaining the maximum, ascending.
  std::vector<Integer> argmax;
};

/// log_p c_r = max_t (v_p(t) - κ·a·t). The maximum over all t >= 1 sits on a
/// prime power, and m - κ·a·p^m decreases for good once its step
/// 1 - κ·a·p^m·(p-1) turns negative, so the search stops there.
RadiusConstant radius_constant(const RadiusParam& param);
LogNorm c_r(const RadiusParam& param);

using MultiIndex = std::vector<unsigned>;

inline unsigned total_degree(const MultiIndex& beta) {
  unsigned s = 0;
  for (auto b : beta) s += b;
  return s;
}

/// Σ d_β ∂^β with |β| < N over an algebra with rational constants.
class TruncatedPBWSeries {
 public:
  TruncatedPBWSeries(LieAlgebra g, std::size_t truncation);

  static TruncatedPBWSeries one(const LieAlgebra& g, std::size_t truncation);
  static TruncatedPBWSeries generator(const LieAlgebra& g, std::size_t truncation, std::size_t i);
  static TruncatedPBWSeries monomial(const LieAlgebra& g, std::size_t truncation, MultiIndex beta, Rational coeff);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return algebra_.dim(); }
  std::size_t truncation() const { return truncation_; }
  bool exact() const { return exact_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·∂^β; terms with |β| >= N are dropped and clear the exactness flag.
  void add_term(const MultiIndex& beta, const Rational& c);
  void mark_inexact() { exact_ = false; }

  TruncatedPBWSeries operator+(const TruncatedPBWSeries& o) const;
  TruncatedPBWSeries operator-(const TruncatedPBWSeries& o) const;
  TruncatedPBWSeries scaled(const Rational& c) const;

  friend bool operator==(const TruncatedPBWSeries& a, const TruncatedPBWSeries& b) {
    return a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

 private:
  LieAlgebra algebra_;
  std::size_t truncation_;
  std::map<MultiIndex, Rational> terms_;
  bool exact_ = true;
};

/// Same constants, dimension and truncation.
bool same_basis(const TruncatedPBWSeries& a, const TruncatedPBWSeries& b);

/// Straightens ∂^β·∂^γ with ∂_j∂_i = ∂_i∂_j + [∂_j, ∂_i] for j > i, then
/// drops degree >= N. Throws BasisMismatch.
TruncatedPBWSeries pbw_multiply(const TruncatedPBWSeries& lambda, const TruncatedPBWSeries& mu);

/// max over terms of (-v_p(d_β) + |β|·log_p c_r).
LogNorm nu_norm(const TruncatedPBWSeries& lambda, const RadiusParam& param);

/// Terms whose own log-norm equals nu_norm(λ).
std::vector<std::pair<MultiIndex, Rational>> principal_symbol(const TruncatedPBWSeries& lambda,
                                                              const RadiusParam& param);

/// min over nonzero structure constants of v_p; nullopt when all vanish.
std::optional<long> constant_valuation(const LieAlgebra& g, long p);

struct MultiplicativityResult {
  bool pass;
  LogNorm product;
  LogNorm sum_of_factors;
};

/// ν(λμ) = ν(λ) + ν(μ). Throws PreconditionUnmet (small radius, v_p of the
/// constants >= κ, exact product) or BasisMismatch.
MultiplicativityResult multiplicativity_check(const TruncatedPBWSeries& lambda, const TruncatedPBWSeries& mu,
                                              const RadiusParam& param);

struct GradedResult {
  bool pass;
  bool symbols_commute;
  bool defect_drops;
  std::size_t pairs_checked;
  LogNorm worst_defect;  ///< max over i<j of ν([∂_i, ∂_j])
  LogNorm defect_bound;  ///< 2·log_p c_r
};

/// Principal symbols of ∂^β·∂^γ are (β+γ, 1) for |β|+|γ| <= D, and every
/// commutator ν([∂_i, ∂_j]) < 2·log_p c_r. Throws PreconditionUnmet.
GradedResult graded_polynomial_check(const LieAlgebra& g, const RadiusParam& param, std::size_t degree);

/// Σ d_α b^α over commuting b_1..b_d, total degree < N.
class MahlerSeries {
 public:
  MahlerSeries(std::size_t vars, std::size_t truncation) : vars_(vars), truncation_(truncation) {}

  std::size_t vars() const { return vars_; }
  std::size_t truncation() const { return truncation_; }
  bool exact() const { return exact_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  void add_term(const MultiIndex& alpha, const Rational& c);
  void mark_inexact() { exact_ = false; }

  friend bool operator==(const MahlerSeries& a, const MahlerSeries& b) {
    return a.vars_ == b.vars_ && a.truncation_ == b.truncation_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t vars_;
  std::size_t truncation_;
  std::map<MultiIndex, Rational> terms_;
  bool exact_ = true;
};

MahlerSeries mahler_multiply(const MahlerSeries& a, const MahlerSeries& b);

/// max over terms of (-v_p(d_α) - κ·a·|α|).
LogNorm mahler_norm(const MahlerSeries& s, const RadiusParam& param);

/// Σ_{1<=t<N} (-1)^{t+1} b^t / t in one variable. Requires N >= 2.
MahlerSeries log_one_plus_b(std::size_t truncation);

struct LogSeriesNorm {
  LogNorm value;
  /// N-1 reaches every maximizing prime power of c_r.
  bool stable;
};

LogSeriesNorm log_one_plus_b_norm(std::size_t truncation, const RadiusParam& param);

/// δ_x = Π (1+b_i)^{x_i} via generalized binomials, truncated at N.
MahlerSeries mahler_dirac(const std::vector<long>& x, std::size_t truncation);

/// x(x-1)...(x-k+1)/k!.
Integer generalized_binomial(long x, unsigned k);

}  // namespace hav
