#include "hav/dist_algebra.hpp"

#include <algorithm>

namespace hav {

RadiusParam RadiusParam::make(long p, const Rational& a) {
  if (!is_prime(p)) throw Error(ErrorKind::PreconditionUnmet, "p = " + std::to_string(p) + " is not prime");
  if (sgn(a) <= 0 || cmp(a, 1) >= 0)
    throw Error(ErrorKind::PreconditionUnmet, "radius exponent a = " + format_rational(a) + " must lie in (0,1)");
  RadiusParam r;
  r.p = p;
  r.a = a;
  r.kappa = p == 2 ? 2 : 1;
  r.small_radius = cmp(Rational(r.kappa * a * (p - 1)), 1) > 0;
  return r;
}

RadiusConstant radius_constant(const RadiusParam& param) {
  Rational ka = param.kappa * param.a;
  RadiusConstant out;
  Integer t = 1;
  std::optional<Rational> best;
  for (long m = 0;; ++m) {
    Rational g = Rational(m) - ka * Rational(t);
    int c = best ? cmp(g, *best) : 1;
    if (c > 0) {
      best = g;
      out.argmax = {t};
    } else if (c == 0) {
      out.argmax.push_back(t);
    }
    Rational step = 1 - ka * Rational(t) * (param.p - 1);
    if (sgn(step) < 0) break;
    t *= param.p;
  }
  out.log_c = LogNorm(*best);
  return out;
}

LogNorm c_r(const RadiusParam& param) { return radius_constant(param).log_c; }

// ---------------------------------------------------------------- PBW series

namespace {

std::vector<Rational> rational_constants(const LieAlgebra& g) {
  if (g.field().degree() != 1)
    throw Error(ErrorKind::PreconditionUnmet, "PBW series need an algebra with rational constants");
  std::vector<Rational> out;
  out.reserve(g.constants().size());
  for (const auto& c : g.constants()) out.push_back(c.coordinates()[0]);
  return out;
}

using Terms = std::map<MultiIndex, Rational>;

void add_into(Terms& t, const MultiIndex& beta, const Rational& c) {
  if (is_zero(c)) return;
  auto [it, inserted] = t.emplace(beta, c);
  if (!inserted) {
    it->second += c;
    if (is_zero(it->second)) t.erase(it);
  }
}

// Left multiplication of sorted monomials by a generator, memoized.
class Straightener {
 public:
  explicit Straightener(const LieAlgebra& g) : d_(g.dim()), c_(rational_constants(g)) {}

  // ∂_i · ∂^β in PBW form.
  const Terms& left(std::size_t i, const MultiIndex& beta) {
    auto key = std::make_pair(i, beta);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Terms out;
    std::size_t j = 0;
    while (j < i && beta[j] == 0) ++j;
    if (j == i) {
      MultiIndex b = beta;
      ++b[i];
      out.emplace(std::move(b), Rational(1));
    } else {
      // ∂_i ∂_j ∂^{β'} = ∂_j (∂_i ∂^{β'}) + [∂_i, ∂_j] ∂^{β'} with j < i smallest in β.
      MultiIndex rest = beta;
      --rest[j];
      Terms moved = left(i, rest);
      for (const auto& [m, c] : moved)
        for (const auto& [m2, c2] : left(j, m)) add_into(out, m2, c * c2);
      for (std::size_t k = 0; k < d_; ++k) {
        const Rational& ck = c_[(i * d_ + j) * d_ + k];
        if (is_zero(ck)) continue;
        for (const auto& [m2, c2] : left(k, rest)) add_into(out, m2, ck * c2);
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  Terms multiply(const MultiIndex& beta, const MultiIndex& gamma) {
    Terms cur{{gamma, Rational(1)}};
    for (std::size_t i = d_; i-- > 0;)
      for (unsigned e = 0; e < beta[i]; ++e) {
        Terms next;
        for (const auto& [m, c] : cur)
          for (const auto& [m2, c2] : left(i, m)) add_into(next, m2, c * c2);
        cur = std::move(next);
      }
    return cur;
  }

 private:
  std::size_t d_;
  std::vector<Rational> c_;
  std::map<std::pair<std::size_t, MultiIndex>, Terms> memo_;
};

}  // namespace

TruncatedPBWSeries::TruncatedPBWSeries(LieAlgebra g, std::size_t truncation)
    : algebra_(std::move(g)), truncation_(truncation) {
  rational_constants(algebra_);
}

TruncatedPBWSeries TruncatedPBWSeries::one(const LieAlgebra& g, std::size_t truncation) {
  return monomial(g, truncation, MultiIndex(g.dim(), 0), Rational(1));
}

TruncatedPBWSeries TruncatedPBWSeries::generator(const LieAlgebra& g, std::size_t truncation, std::size_t i) {
  MultiIndex beta(g.dim(), 0);
  beta.at(i) = 1;
  return monomial(g, truncation, std::move(beta), Rational(1));
}

TruncatedPBWSeries TruncatedPBWSeries::monomial(const LieAlgebra& g, std::size_t truncation, MultiIndex beta,
                                                Rational coeff) {
  TruncatedPBWSeries s(g, truncation);
  s.add_term(beta, coeff);
  return s;
}

void TruncatedPBWSeries::add_term(const MultiIndex& beta, const Rational& c) {
  if (beta.size() != dim()) throw Error(ErrorKind::BasisMismatch, "multi-index length differs from dim g");
  if (hav::is_zero(c)) return;
  if (total_degree(beta) >= truncation_) {
    exact_ = false;
    return;
  }
  add_into(terms_, beta, c);
}

TruncatedPBWSeries TruncatedPBWSeries::operator+(const TruncatedPBWSeries& o) const {
  if (!same_basis(*this, o)) throw Error(ErrorKind::BasisMismatch, "series over different bases");
  TruncatedPBWSeries s = *this;
  for (const auto& [b, c] : o.terms_) add_into(s.terms_, b, c);
  s.exact_ = exact_ && o.exact_;
  return s;
}

TruncatedPBWSeries TruncatedPBWSeries::operator-(const TruncatedPBWSeries& o) const {
  return *this + o.scaled(Rational(-1));
}

TruncatedPBWSeries TruncatedPBWSeries::scaled(const Rational& c) const {
  TruncatedPBWSeries s(algebra_, truncation_);
  s.exact_ = exact_;
  for (const auto& [b, v] : terms_) add_into(s.terms_, b, v * c);
  return s;
}

bool same_basis(const TruncatedPBWSeries& a, const TruncatedPBWSeries& b) {
  return a.truncation() == b.truncation() && a.dim() == b.dim() &&
         a.algebra().constants() == b.algebra().constants();
}

TruncatedPBWSeries pbw_multiply(const TruncatedPBWSeries& lambda, const TruncatedPBWSeries& mu) {
  if (!same_basis(lambda, mu)) throw Error(ErrorKind::BasisMismatch, "factors use different algebras or truncations");
  Straightener st(lambda.algebra());
  Terms acc;
  for (const auto& [b, c] : lambda.terms())
    for (const auto& [g, e] : mu.terms())
      for (const auto& [m, f] : st.multiply(b, g)) add_into(acc, m, c * e * f);
  TruncatedPBWSeries out(lambda.algebra(), lambda.truncation());
  if (!lambda.exact() || !mu.exact()) out.mark_inexact();
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

namespace {

Rational term_log(const Rational& c, unsigned degree, const Rational& log_c, long p) {
  return Rational(-*padic_valuation(c, p)) + Rational(degree) * log_c;
}

}  // namespace

LogNorm nu_norm(const TruncatedPBWSeries& lambda, const RadiusParam& param) {
  if (lambda.is_zero()) return LogNorm::neg_inf();
  Rational log_c = c_r(param).value();
  LogNorm best;
  for (const auto& [b, c] : lambda.terms()) best = std::max(best, LogNorm(term_log(c, total_degree(b), log_c, param.p)));
  return best;
}

std::vector<std::pair<MultiIndex, Rational>> principal_symbol(const TruncatedPBWSeries& lambda,
                                                              const RadiusParam& param) {
  std::vector<std::pair<MultiIndex, Rational>> out;
  LogNorm top = nu_norm(lambda, param);
  if (top.is_neg_inf()) return out;
  Rational log_c = c_r(param).value();
  for (const auto& [b, c] : lambda.terms())
    if (term_log(c, total_degree(b), log_c, param.p) == top.value()) out.emplace_back(b, c);
  return out;
}

std::optional<long> constant_valuation(const LieAlgebra& g, long p) {
  std::optional<long> best;
  for (const auto& c : rational_constants(g)) {
    auto v = padic_valuation(c, p);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

namespace {

void require_norm_preconditions(const LieAlgebra& g, const RadiusParam& param) {
  if (!param.small_radius)
    throw Error(ErrorKind::PreconditionUnmet, "radius is not small: need kappa*a > 1/(p-1)");
  auto v = constant_valuation(g, param.p);
  if (v && *v < param.kappa)
    throw Error(ErrorKind::PreconditionUnmet, "structure constants have v_p = " + std::to_string(*v) +
                                                  " < kappa = " + std::to_string(param.kappa));
}

}  // namespace

MultiplicativityResult multiplicativity_check(const TruncatedPBWSeries& lambda, const TruncatedPBWSeries& mu,
                                              const RadiusParam& param) {
  if (!same_basis(lambda, mu)) throw Error(ErrorKind::BasisMismatch, "factors use different algebras or truncations");
  require_norm_preconditions(lambda.algebra(), param);
  TruncatedPBWSeries prod = pbw_multiply(lambda, mu);
  if (!prod.exact()) throw Error(ErrorKind::PreconditionUnmet, "product lost terms to truncation");
  LogNorm lhs = nu_norm(prod, param);
  LogNorm rhs = nu_norm(lambda, param) + nu_norm(mu, param);
  return {lhs == rhs, lhs, rhs};
}

namespace {

void monomials_up_to(std::size_t d, unsigned degree, MultiIndex& cur, std::size_t pos, unsigned left,
                     std::vector<MultiIndex>& out) {
  if (pos == d) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    cur[pos] = e;
    monomials_up_to(d, degree, cur, pos + 1, left - e, out);
  }
  cur[pos] = 0;
}

}  // namespace

GradedResult graded_polynomial_check(const LieAlgebra& g, const RadiusParam& param, std::size_t degree) {
  require_norm_preconditions(g, param);
  std::size_t d = g.dim();
  std::size_t n = degree + 1;
  GradedResult r{true, true, true, 0, LogNorm::neg_inf(), LogNorm::neg_inf()};
  Rational log_c = c_r(param).value();
  r.defect_bound = LogNorm(Rational(2 * log_c));

  std::vector<MultiIndex> monos;
  MultiIndex cur(d, 0);
  monomials_up_to(d, static_cast<unsigned>(degree), cur, 0, static_cast<unsigned>(degree), monos);
  for (const auto& b : monos)
    for (const auto& c : monos) {
      if (total_degree(b) + total_degree(c) > degree) continue;
      ++r.pairs_checked;
      auto prod = pbw_multiply(TruncatedPBWSeries::monomial(g, n, b, Rational(1)),
                               TruncatedPBWSeries::monomial(g, n, c, Rational(1)));
      MultiIndex sum(d);
      for (std::size_t i = 0; i < d; ++i) sum[i] = b[i] + c[i];
      auto sym = principal_symbol(prod, param);
      if (!prod.exact() || sym.size() != 1 || sym[0].first != sum || sym[0].second != 1) r.symbols_commute = false;
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto xi = TruncatedPBWSeries::generator(g, 3, i);
      auto xj = TruncatedPBWSeries::generator(g, 3, j);
      auto comm = pbw_multiply(xi, xj) - pbw_multiply(xj, xi);
      LogNorm defect = nu_norm(comm, param);
      r.worst_defect = std::max(r.worst_defect, defect);
      if (!(defect < r.defect_bound)) r.defect_drops = false;
    }
  r.pass = r.symbols_commute && r.defect_drops;
  return r;
}

// ---------------------------------------------------------------- Mahler series

void MahlerSeries::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != vars_) throw Error(ErrorKind::BasisMismatch, "multi-index length differs from variable count");
  if (is_zero(c)) return;
  if (total_degree(alpha) >= truncation_) {
    exact_ = false;
    return;
  }
  add_into(terms_, alpha, c);
}

MahlerSeries mahler_multiply(const MahlerSeries& a, const MahlerSeries& b) {
  if (a.vars() != b.vars() || a.truncation() != b.truncation())
    throw Error(ErrorKind::BasisMismatch, "Mahler series with different shapes");
  Terms acc;
  for (const auto& [x, c] : a.terms())
    for (const auto& [y, e] : b.terms()) {
      MultiIndex s(x.size());
      for (std::size_t i = 0; i < s.size(); ++i) s[i] = x[i] + y[i];
      add_into(acc, s, c * e);
    }
  MahlerSeries out(a.vars(), a.truncation());
  if (!a.exact() || !b.exact()) out.mark_inexact();
  for (const auto& [m, c] : acc) out.add_term(m, c);
  return out;
}

LogNorm mahler_norm(const MahlerSeries& s, const RadiusParam& param) {
  LogNorm best;
  Rational ka = param.kappa * param.a;
  for (const auto& [m, c] : s.terms())
    best = std::max(best, LogNorm(Rational(-*padic_valuation(c, param.p) - ka * total_degree(m))));
  return best;
}

MahlerSeries log_one_plus_b(std::size_t truncation) {
  if (truncation < 2) throw Error(ErrorKind::PreconditionUnmet, "log(1+b) needs N >= 2");
  MahlerSeries s(1, truncation);
  for (std::size_t t = 1; t < truncation; ++t)
    s.add_term({static_cast<unsigned>(t)}, Rational(t % 2 == 1 ? 1 : -1, static_cast<unsigned long>(t)));
  s.mark_inexact();
  return s;
}

LogSeriesNorm log_one_plus_b_norm(std::size_t truncation, const RadiusParam& param) {
  LogSeriesNorm out{mahler_norm(log_one_plus_b(truncation), param), true};
  for (const auto& t : radius_constant(param).argmax)
    if (cmp(t, Integer(static_cast<unsigned long>(truncation - 1))) > 0) out.stable = false;
  return out;
}

Integer generalized_binomial(long x, unsigned k) {
  Integer num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= Integer(x) - Integer(i);
    den *= Integer(i + 1);
  }
  return num / den;
}

MahlerSeries mahler_dirac(const std::vector<long>& x, std::size_t truncation) {
  std::size_t d = x.size();
  MahlerSeries acc(d, truncation);
  acc.add_term(MultiIndex(d, 0), Rational(1));
  for (std::size_t i = 0; i < d; ++i) {
    MahlerSeries factor(d, truncation);
    for (unsigned k = 0; k < truncation; ++k) {
      MultiIndex a(d, 0);
      a[i] = k;
      factor.add_term(a, Rational(generalized_binomial(x[i], k)));
    }
    // The binomial series (1+b)^x ends at degree x only for x >= 0.
    if (x[i] < 0 || static_cast<unsigned long>(x[i]) >= truncation) factor.mark_inexact();
    acc = mahler_multiply(acc, factor);
  }
  return acc;
}

}  // namespace hav
