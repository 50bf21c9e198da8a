#include "hav/field_tower.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>

namespace hav {

namespace detail {

struct FieldData {
  std::vector<Rational> poly;  // ascending, monic
  std::size_t n = 0;
  // reduction[k] = power coordinates of θ^(n+k), k = 0..n-2
  std::vector<std::vector<Rational>> reduction;
  Matrix<Rational> basis{0, 0, Rational(0)};
  Matrix<Rational> basis_inverse{0, 0, Rational(0)};
  bool galois = false;
  std::vector<Automorphism> automorphisms;
};

}  // namespace detail

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  Poly bb = b;
  trim(bb);
  while (a.size() >= bb.size() && !a.empty()) {
    Rational f = a.back() / bb.back();
    std::size_t shift = a.size() - bb.size();
    for (std::size_t i = 0; i < bb.size(); ++i) a[shift + i] -= f * bb[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return d;
}

std::shared_ptr<detail::FieldData> make_data(const Poly& poly) {
  auto data = std::make_shared<detail::FieldData>();
  data->poly = poly;
  data->n = poly.size() - 1;
  std::size_t n = data->n;
  // θ^n = -Σ c_k θ^k, then shift repeatedly.
  std::vector<Rational> cur(n);
  for (std::size_t k = 0; k < n; ++k) cur[k] = -poly[k];
  for (std::size_t e = 0; e + 1 < n; ++e) {
    data->reduction.push_back(cur);
    std::vector<Rational> next(n);
    Rational top = cur[n - 1];
    for (std::size_t k = n - 1; k > 0; --k) next[k] = cur[k - 1];
    next[0] = 0;
    for (std::size_t k = 0; k < n; ++k) next[k] -= top * poly[k];
    cur = std::move(next);
  }
  data->basis = Matrix<Rational>::identity(n, Rational(0));
  data->basis_inverse = data->basis;
  return data;
}

bool same_field(const std::shared_ptr<const detail::FieldData>& a, const std::shared_ptr<const detail::FieldData>& b) {
  return a == b || (a && b && a->poly == b->poly);
}

void require_same(const std::shared_ptr<const detail::FieldData>& a, const std::shared_ptr<const detail::FieldData>& b) {
  if (!same_field(a, b)) throw Error(ErrorKind::BasisMismatch, "field elements from different fields");
}

// Best rational approximation with bounded denominator (continued fractions).
std::optional<Rational> rationalize(long double x, long max_den) {
  long double tol = 1e-9L * std::max<long double>(1.0L, std::fabs(x));
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  long double r = x;
  for (int iter = 0; iter < 64; ++iter) {
    long double a = std::floor(r);
    if (std::fabs(a) > 1e15L) break;
    long long ai = static_cast<long long>(a);
    long long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    if (std::fabs(static_cast<long double>(h1) / static_cast<long double>(k1) - x) < tol) {
      Rational q(Integer(std::to_string(h1)), Integer(std::to_string(k1)));
      q.canonicalize();
      return q;
    }
    long double frac = r - a;
    if (frac < 1e-18L) break;
    r = 1.0L / frac;
  }
  return std::nullopt;
}

std::vector<std::complex<long double>> complex_roots(const Poly& poly) {
  using C = std::complex<long double>;
  std::size_t n = poly.size() - 1;
  std::vector<long double> c(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) c[i] = static_cast<long double>(poly[i].get_d());
  auto eval = [&](C z) {
    C v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = v * z + c[i];
    return v;
  };
  std::vector<C> z(n);
  C seed(0.4L, 0.9L);
  for (std::size_t i = 0; i < n; ++i) z[i] = std::pow(seed, static_cast<long double>(i));
  for (int iter = 0; iter < 2000; ++iter) {
    long double delta = 0;
    for (std::size_t i = 0; i < n; ++i) {
      C den = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den *= (z[i] - z[j]);
      C step = eval(z[i]) / den;
      z[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-30L) break;
  }
  return z;
}

}  // namespace

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(const NumberField& field, std::vector<Rational> coords)
    : data_(field.data_), coords_(std::move(coords)) {
  if (coords_.size() != data_->n) throw Error(ErrorKind::DimensionMismatch, "field element coordinate count");
}

bool FieldElement::is_rational() const {
  for (std::size_t k = 1; k < coords_.size(); ++k)
    if (!hav::is_zero(coords_[k])) return false;
  return true;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a.data_, b.data_);
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return FieldElement(a.data_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same(a.data_, b.data_);
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return FieldElement(a.data_, std::move(c));
}

FieldElement operator-(const FieldElement& a) {
  std::vector<Rational> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords_[i];
  return FieldElement(a.data_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a.data_, b.data_);
  const auto& d = *a.data_;
  std::size_t n = d.n;
  if (n == 1) return FieldElement(a.data_, {Rational(a.coords_[0] * b.coords_[0])});
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (hav::is_zero(a.coords_[i])) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!hav::is_zero(b.coords_[j])) prod[i + j] += a.coords_[i] * b.coords_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<long>(n));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Rational& top = prod[n + k];
    if (hav::is_zero(top)) continue;
    for (std::size_t i = 0; i < n; ++i) out[i] += top * d.reduction[k][i];
  }
  return FieldElement(a.data_, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (hav::is_zero(*this)) throw Error(ErrorKind::DimensionMismatch, "division by zero in number field");
  if (data_->n == 1) return FieldElement(data_, {Rational(1 / coords_[0])});
  NumberField f(data_);
  auto m = f.multiplication_matrix(*this);
  std::vector<Rational> e(data_->n, Rational(0));
  e[0] = 1;
  auto x = solve(m, std::span<const Rational>(e));
  return FieldElement(data_, std::move(*x));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::scaled(const Rational& q) const {
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] * q;
  return FieldElement(data_, std::move(c));
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = one_like(*this);
  FieldElement base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

std::string FieldElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (hav::is_zero(coords_[k])) continue;
    if (!first) os << " + ";
    first = false;
    os << format_rational(coords_[k]);
    if (k == 1) os << "*t";
    if (k > 1) os << "*t^" << k;
  }
  if (first) os << "0";
  return os.str();
}

bool is_zero(const FieldElement& x) {
  for (const auto& c : x.coordinates())
    if (!is_zero(c)) return false;
  return true;
}

FieldElement zero_like(const FieldElement& x) { return x.field().zero(); }
FieldElement one_like(const FieldElement& x) { return x.field().one(); }

// ---------------------------------------------------------------- NumberField

NumberField NumberField::rationals() {
  static const NumberField q = validate_field({Rational(0), Rational(1)}, std::nullopt, true);
  return q;
}

std::size_t NumberField::degree() const { return data_->n; }
const std::vector<Rational>& NumberField::polynomial() const { return data_->poly; }

FieldElement NumberField::zero() const { return FieldElement(data_, std::vector<Rational>(data_->n)); }

FieldElement NumberField::one() const {
  std::vector<Rational> c(data_->n);
  c[0] = 1;
  return FieldElement(data_, std::move(c));
}

FieldElement NumberField::generator() const {
  if (data_->n == 1) return FieldElement(data_, {Rational(-data_->poly[0])});
  std::vector<Rational> c(data_->n);
  c[1] = 1;
  return FieldElement(data_, std::move(c));
}

FieldElement NumberField::element(std::vector<Rational> power_coordinates) const {
  return FieldElement(*this, std::move(power_coordinates));
}

FieldElement NumberField::from_rational(const Rational& q) const { return one().scaled(q); }

const Matrix<Rational>& NumberField::basis() const { return data_->basis; }

FieldElement NumberField::basis_element(std::size_t i) const {
  return FieldElement(data_, data_->basis.column(i));
}

std::vector<Rational> NumberField::basis_coordinates(const FieldElement& x) const {
  require_same(data_, x.data_);
  return data_->basis_inverse.apply(std::span<const Rational>(x.coordinates()));
}

bool NumberField::is_galois() const { return data_->galois; }
const std::vector<Automorphism>& NumberField::automorphisms() const { return data_->automorphisms; }

Matrix<Rational> NumberField::multiplication_matrix(const FieldElement& x) const {
  std::size_t n = data_->n;
  Matrix<Rational> m(n, n, Rational(0));
  FieldElement power = one();
  FieldElement theta = generator();
  for (std::size_t k = 0; k < n; ++k) {
    FieldElement col = x * power;
    for (std::size_t r = 0; r < n; ++r) m(r, k) = col.coordinates()[r];
    power = power * theta;
  }
  return m;
}

Rational NumberField::norm(const FieldElement& x) const { return determinant(multiplication_matrix(x)); }

std::string NumberField::describe() const {
  std::ostringstream os;
  os << "Q[x]/(";
  bool first = true;
  for (std::size_t k = data_->poly.size(); k-- > 0;) {
    const Rational& c = data_->poly[k];
    if (is_zero(c)) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational a = abs(c);
    if (k == 0 || a != 1) os << format_rational(a);
    if (k >= 1) os << "x";
    if (k > 1) os << "^" << k;
    first = false;
  }
  os << ")";
  return os.str();
}

bool operator==(const NumberField& a, const NumberField& b) {
  return a.data_ == b.data_ || (a.data_->poly == b.data_->poly && a.data_->basis == b.data_->basis);
}

// ---------------------------------------------------------------- helpers

FieldElement evaluate(const std::vector<Rational>& polynomial, const FieldElement& x) {
  FieldElement acc = zero_like(x);
  for (std::size_t i = polynomial.size(); i-- > 0;) acc = acc * x + x.field().from_rational(polynomial[i]);
  return acc;
}

FieldElement apply(const Automorphism& sigma, const FieldElement& x) {
  return x.field().element(sigma.matrix.apply(std::span<const Rational>(x.coordinates())));
}

bool is_ring_homomorphism(const NumberField& field, const Matrix<Rational>& m) {
  std::size_t n = field.degree();
  if (m.rows() != n || m.cols() != n) return false;
  auto image = [&](const FieldElement& x) { return field.element(m.apply(std::span<const Rational>(x.coordinates()))); };
  if (!(image(field.one()) == field.one())) return false;
  std::vector<FieldElement> powers;
  FieldElement p = field.one();
  for (std::size_t k = 0; k < n; ++k) {
    powers.push_back(p);
    p = p * field.generator();
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      if (!(image(powers[a] * powers[b]) == image(powers[a]) * image(powers[b]))) return false;
  return true;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) { return Automorphism{a.matrix * b.matrix}; }

std::vector<FieldElement> roots_in(const std::vector<Rational>& polynomial, const NumberField& target) {
  std::size_t n = target.degree();
  std::size_t m = polynomial.size() - 1;
  std::vector<FieldElement> roots;
  auto add_root = [&](const FieldElement& y) {
    if (!is_zero(evaluate(polynomial, y))) return;
    for (const auto& r : roots)
      if (r == y) return;
    roots.push_back(y);
  };
  if (n == 1) {
    // Rational roots of a desk-scale polynomial: test the numerically found
    // real roots after rationalization.
    for (auto z : complex_roots(polynomial)) {
      if (std::fabs(z.imag()) > 1e-9L) continue;
      if (auto q = rationalize(z.real(), 1000000)) add_root(target.from_rational(*q));
    }
    return roots;
  }
  if (n > 6 || m > 6) throw Error(ErrorKind::PreconditionUnmet, "root finding is limited to degree <= 6");
  // Each root y = Σ y_k θ^k satisfies Σ_k y_k α_j^k = β_{π(j)} for the complex
  // roots α of the target polynomial and some assignment π into the complex
  // roots β of `polynomial`. Solve numerically, rationalize, certify exactly.
  auto alpha = complex_roots(target.polynomial());
  auto beta = complex_roots(polynomial);
  using C = std::complex<long double>;
  std::vector<std::vector<C>> vander(n, std::vector<C>(n));
  for (std::size_t j = 0; j < n; ++j) {
    C pw = 1;
    for (std::size_t k = 0; k < n; ++k) {
      vander[j][k] = pw;
      pw *= alpha[j];
    }
  }
  auto solve_complex = [&](std::vector<C> rhs) -> std::vector<C> {
    auto a = vander;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t best = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(a[r][c]) > std::abs(a[best][c])) best = r;
      std::swap(a[c], a[best]);
      std::swap(rhs[c], rhs[best]);
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        C f = a[r][c] / a[c][c];
        for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        rhs[r] -= f * rhs[c];
      }
    }
    for (std::size_t c = 0; c < n; ++c) rhs[c] /= a[c][c];
    return rhs;
  };
  // Enumerate maps j ↦ index into beta (with repetition allowed when m < n).
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<C> rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = beta[idx[j]];
    auto y = solve_complex(rhs);
    bool ok = true;
    std::vector<Rational> coords;
    for (auto& v : y) {
      if (std::fabs(v.imag()) > 1e-7L) {
        ok = false;
        break;
      }
      auto q = rationalize(v.real(), 1000000);
      if (!q) {
        ok = false;
        break;
      }
      coords.push_back(*q);
    }
    if (ok) add_root(target.element(coords));
    std::size_t pos = 0;
    while (pos < n && ++idx[pos] == m) idx[pos++] = 0;
    if (pos == n) break;
  }
  return roots;
}

std::vector<Automorphism> galois_automorphisms(const NumberField& field) {
  std::size_t n = field.degree();
  auto roots = roots_in(field.polynomial(), field);
  if (roots.size() < n)
    throw Error(ErrorKind::NotGalois, field.describe() + " contains " + std::to_string(roots.size()) + " of " +
                                          std::to_string(n) + " roots");
  std::vector<Automorphism> autos;
  for (const auto& y : roots) {
    Matrix<Rational> m(n, n, Rational(0));
    FieldElement p = field.one();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) m(r, k) = p.coordinates()[r];
      p = p * y;
    }
    autos.push_back(Automorphism{std::move(m)});
  }
  auto id = Matrix<Rational>::identity(n, Rational(0));
  std::stable_partition(autos.begin(), autos.end(), [&](const Automorphism& a) { return a.matrix == id; });
  return autos;
}

NumberField validate_field(const std::vector<Rational>& polynomial, const std::optional<Matrix<Rational>>& basis,
                           bool galois, const std::vector<Matrix<Rational>>& automorphisms) {
  Poly poly = polynomial;
  trim(poly);
  if (poly.size() < 2) throw Error(ErrorKind::ParseError, "defining polynomial must have degree >= 1");
  if (poly.back() != 1) throw Error(ErrorKind::ParseError, "defining polynomial must be monic");
  if (poly_gcd(poly, derivative(poly)).size() > 1)
    throw Error(ErrorKind::NonSquarefree, "defining polynomial has a repeated factor");

  auto data = make_data(poly);
  std::size_t n = data->n;
  if (basis) {
    if (basis->rows() != n || basis->cols() != n)
      throw Error(ErrorKind::BasisNotUnimodular, "basis must be n x n");
    auto inv = inverse(*basis);
    if (!inv) throw Error(ErrorKind::BasisNotUnimodular, "basis vectors are linearly dependent");
    for (std::size_t r = 0; r < n; ++r)
      if ((*basis)(r, 0) != (r == 0 ? 1 : 0)) throw Error(ErrorKind::BasisNotUnimodular, "v_1 must equal 1");
    data->basis = *basis;
    data->basis_inverse = *inv;
  }

  NumberField provisional(data);
  if (galois) {
    std::vector<Automorphism> autos;
    if (!automorphisms.empty()) {
      for (std::size_t s = 0; s < automorphisms.size(); ++s) {
        if (!is_ring_homomorphism(provisional, automorphisms[s]))
          throw Error(ErrorKind::BadAutomorphism, "automorphism " + std::to_string(s) + " is not a ring homomorphism");
        autos.push_back(Automorphism{automorphisms[s]});
      }
      if (autos.size() != n)
        throw Error(ErrorKind::BadAutomorphism, "expected " + std::to_string(n) + " automorphisms");
      for (const auto& a : autos)
        for (const auto& b : autos) {
          auto c = compose(a, b);
          bool found = std::any_of(autos.begin(), autos.end(), [&](const Automorphism& x) { return x.matrix == c.matrix; });
          if (!found) throw Error(ErrorKind::BadAutomorphism, "automorphisms are not closed under composition");
        }
      for (std::size_t s = 0; s < autos.size(); ++s)
        for (std::size_t t = s + 1; t < autos.size(); ++t)
          if (autos[s].matrix == autos[t].matrix) throw Error(ErrorKind::BadAutomorphism, "repeated automorphism");
      auto id = Matrix<Rational>::identity(n, Rational(0));
      std::stable_partition(autos.begin(), autos.end(), [&](const Automorphism& a) { return a.matrix == id; });
    } else {
      autos = galois_automorphisms(provisional);
    }
    data->galois = true;
    data->automorphisms = std::move(autos);
  }
  return NumberField(data);
}

NumberField named_field(const std::string& name) {
  auto ints = [](std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return v;
  };
  if (name == "Q") return NumberField::rationals();
  if (name == "sqrt2") return validate_field(ints({-2, 0, 1}), std::nullopt, true);
  if (name == "cubic") return validate_field(ints({1, -2, -1, 1}), std::nullopt, true);
  if (name == "pure_cubic") return validate_field(ints({-2, 0, 0, 1}));
  if (name == "i") return validate_field(ints({1, 0, 1}), std::nullopt, true);
  throw Error(ErrorKind::UnknownName, "unknown field '" + name + "'");
}

// ---------------------------------------------------------------- Embedding

Embedding Embedding::identity(const NumberField& field) {
  return Embedding(field, field, Matrix<Rational>::identity(field.degree(), Rational(0)));
}

Embedding Embedding::from_rationals(const NumberField& target) {
  Matrix<Rational> m(target.degree(), 1, Rational(0));
  m(0, 0) = 1;
  return Embedding(NumberField::rationals(), target, std::move(m));
}

Embedding Embedding::from_generator_image(const NumberField& source, const FieldElement& image) {
  NumberField target = image.field();
  if (!is_zero(evaluate(source.polynomial(), image)))
    throw Error(ErrorKind::EmbeddingInvalid, "image of the generator is not a root of " + source.describe());
  std::size_t n = source.degree();
  Matrix<Rational> m(target.degree(), n, Rational(0));
  FieldElement p = target.one();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < target.degree(); ++r) m(r, k) = p.coordinates()[r];
    p = p * image;
  }
  return Embedding(source, target, std::move(m));
}

Embedding Embedding::from_matrix(const NumberField& source, const NumberField& target, Matrix<Rational> m) {
  if (m.rows() != target.degree() || m.cols() != source.degree())
    throw Error(ErrorKind::EmbeddingInvalid, "embedding matrix has the wrong shape");
  if (source.degree() == 1) {
    if (!(target.element(m.column(0)) == target.one()))
      throw Error(ErrorKind::EmbeddingInvalid, "embedding must send 1 to 1");
    // Q[x]/(x - c): the generator is the rational c.
    return Embedding(source, target, std::move(m));
  }
  FieldElement image = target.element(m.column(1));
  auto e = from_generator_image(source, image);
  if (!(e.matrix() == m)) throw Error(ErrorKind::EmbeddingInvalid, "matrix is not multiplicative");
  return e;
}

FieldElement Embedding::operator()(const FieldElement& x) const {
  if (!(x.field() == source_)) throw Error(ErrorKind::EmbeddingInvalid, "element is not in the source field");
  return target_.element(matrix_.apply(std::span<const Rational>(x.coordinates())));
}

// ---------------------------------------------------------------- valuations

namespace {

long long squarefree_part(long long d) {
  long long sign = d < 0 ? -1 : 1;
  d = d < 0 ? -d : d;
  long long out = 1;
  for (long long q = 2; q * q <= d; ++q) {
    int e = 0;
    while (d % q == 0) {
      d /= q;
      ++e;
    }
    if (e % 2) out *= q;
  }
  return sign * out * d;
}

int legendre(long long a, long p) {
  long long r = ((a % p) + p) % p;
  if (r == 0) return 0;
  long long result = 1, base = r, e = (p - 1) / 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

}  // namespace

PAdicValuation::PAdicValuation(NumberField field, long p) : field_(std::move(field)), p_(p) {
  if (!is_prime(p)) throw Error(ErrorKind::ValuationUnavailable, std::to_string(p) + " is not prime");
  std::size_t n = field_.degree();
  if (n == 1) return;
  if (n != 2)
    throw Error(ErrorKind::ValuationUnavailable, "valuations are supported only on Q and quadratic fields");
  const auto& f = field_.polynomial();
  Rational disc = f[1] * f[1] - 4 * f[0];
  // Scale by a square so the discriminant becomes an integer.
  Integer den = disc.get_den();
  Integer scaled_int = disc.get_num() * den;
  if (!scaled_int.fits_slong_p()) throw Error(ErrorKind::ValuationUnavailable, "discriminant too large");
  long long d = squarefree_part(scaled_int.get_si());
  if (d == 1) throw Error(ErrorKind::ValuationUnavailable, "defining polynomial is reducible");
  bool split;
  if (p == 2) {
    long long r = ((d % 8) + 8) % 8;
    if (r == 1) split = true;
    else if (r == 5) split = false, e_ = 1;
    else split = false, e_ = 2;
  } else {
    int l = legendre(d, p);
    split = l == 1;
    e_ = l == 0 ? 2 : 1;
  }
  if (split)
    throw Error(ErrorKind::ValuationUnavailable,
                std::to_string(p) + " splits in " + field_.describe() + "; the extension of v_p is not unique");
}

std::optional<Rational> PAdicValuation::operator()(const Rational& x) const {
  auto v = padic_valuation(x, p_);
  if (!v) return std::nullopt;
  return Rational(*v);
}

std::optional<Rational> PAdicValuation::operator()(const FieldElement& x) const {
  if (is_zero(x)) return std::nullopt;
  if (field_.degree() == 1) return (*this)(x.coordinates()[0]);
  // Unique prime above p: v(x) = v_p(N(x)) / [L:Q].
  auto v = padic_valuation(field_.norm(x), p_);
  Rational out(*v, static_cast<long>(field_.degree()));
  out.canonicalize();
  return out;
}

// ---------------------------------------------------------------- splitting

Matrix<Rational> splitting_matrix(const NumberField& field) {
  if (!field.is_galois()) throw Error(ErrorKind::NotGalois, field.describe() + " was not validated as Galois");
  std::size_t n = field.degree();
  const auto& autos = field.automorphisms();
  Matrix<Rational> m(n * n, n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t s = 0; s < autos.size(); ++s) {
        FieldElement img = apply(autos[s], field.basis_element(i)) * field.basis_element(k);
        auto coords = field.basis_coordinates(img);
        for (std::size_t r = 0; r < n; ++r) m(s * n + r, i * n + k) = coords[r];
      }
  return m;
}

std::vector<Rational> idempotent_preimage(const NumberField& field, std::size_t sigma) {
  std::size_t n = field.degree();
  if (sigma >= field.automorphisms().size())
    throw Error(ErrorKind::DimensionMismatch, "automorphism index out of range");
  auto m = splitting_matrix(field);
  std::vector<Rational> target(n * n, Rational(0));
  target[sigma * n] = 1;  // v_1 = 1 in copy σ
  auto x = solve(m, std::span<const Rational>(target));
  if (!x) throw Error(ErrorKind::NotGalois, "splitting map is not surjective");
  return *x;
}

SigmaBound s_sigma(const NumberField& field, std::size_t sigma, long p) {
  PAdicValuation v(field, p);
  std::size_t n = field.degree();
  auto e = idempotent_preimage(field, sigma);
  LogNorm best = LogNorm::neg_inf();
  for (std::size_t i = 0; i < n; ++i) {
    auto vi = v(field.basis_element(i));
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& x = e[i * n + k];
      if (is_zero(x)) continue;
      LogNorm term(Rational(-*vi - *v(x)));
      if (term > best) best = term;
    }
  }
  bool integral = best.is_neg_inf() || sgn(best.value()) <= 0;
  return SigmaBound{best, integral};
}

}  // namespace hav
