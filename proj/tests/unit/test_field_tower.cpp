#include <doctest.h>

#include <functional>
#include <random>

#include "hav/errors.hpp"
#include "hav/field_tower.hpp"

using namespace hav;

namespace {

std::vector<Rational> poly(std::initializer_list<long> c) {
  std::vector<Rational> out;
  for (long v : c) out.emplace_back(v);
  return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

FieldElement random_element(const NumberField& f, std::mt19937_64& rng) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < f.degree(); ++i) {
    Rational q(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(rng() % 9 + 1));
    q.canonicalize();
    c.push_back(q);
  }
  return f.element(c);
}

}  // namespace

TEST_CASE("field arithmetic in Q(sqrt2)") {
  auto f = named_field("sqrt2");
  auto t = f.generator();
  CHECK(t * t == f.from_rational(Rational(2)));
  auto x = f.one() + t;
  CHECK(x * x.inverse() == f.one());
  CHECK(f.norm(x) == Rational(-1));
  CHECK_THROWS_AS(f.zero().inverse(), Error);
}

TEST_CASE("automorphisms of sqrt2 and the cyclic cubic") {
  auto f = named_field("sqrt2");
  REQUIRE(f.automorphisms().size() == 2);
  CHECK(f.automorphisms()[0].matrix == Matrix<Rational>::identity(2, Rational(0)));
  CHECK(apply(f.automorphisms()[1], f.generator()) == -f.generator());

  auto c = named_field("cubic");
  const auto& autos = c.automorphisms();
  REQUIRE(autos.size() == 3);
  auto id = Matrix<Rational>::identity(3, Rational(0));
  for (std::size_t s = 1; s < 3; ++s) {
    const auto& sigma = autos[s];
    CHECK(sigma.matrix != id);
    CHECK(compose(sigma, compose(sigma, sigma)).matrix == id);
    CHECK(is_ring_homomorphism(c, sigma.matrix));
    CHECK(is_zero(evaluate(c.polynomial(), apply(sigma, c.generator()))));
  }
}

TEST_CASE("validation errors") {
  CHECK(kind_of([] { validate_field(poly({1, -2, 1})); }) == ErrorKind::NonSquarefree);
  CHECK(kind_of([] { validate_field(poly({-2, 0, 0, 1}), std::nullopt, true); }) == ErrorKind::NotGalois);
  CHECK(kind_of([] { galois_automorphisms(named_field("pure_cubic")); }) == ErrorKind::NotGalois);

  Matrix<Rational> shift(2, 2, Rational(0));
  shift(0, 0) = 1;
  shift(0, 1) = 1;
  shift(1, 1) = 1;
  auto id = Matrix<Rational>::identity(2, Rational(0));
  CHECK(kind_of([&] { validate_field(poly({1, 0, 1}), std::nullopt, true, {id, shift}); }) ==
        ErrorKind::BadAutomorphism);

  Matrix<Rational> basis(2, 2, Rational(0));
  basis(0, 0) = 2;
  basis(1, 1) = 1;
  CHECK(kind_of([&] { validate_field(poly({-2, 0, 1}), basis); }) == ErrorKind::BasisNotUnimodular);
  CHECK(kind_of([] { named_field("quartic"); }) == ErrorKind::UnknownName);
}

TEST_CASE("custom basis keeps v1 = 1") {
  Matrix<Rational> basis(2, 2, Rational(0));
  basis(0, 0) = 1;
  basis(0, 1) = 1;
  basis(1, 1) = 1;
  auto f = validate_field(poly({-2, 0, 1}), basis, true);
  CHECK(f.basis_element(1) == f.one() + f.generator());
  auto coords = f.basis_coordinates(f.generator());
  CHECK(coords == std::vector<Rational>{Rational(-1), Rational(1)});
}

TEST_CASE("splitting matrix of Q(sqrt2)") {
  auto f = named_field("sqrt2");
  auto m = splitting_matrix(f);
  // domain 1⊗1, 1⊗θ, θ⊗1, θ⊗θ; codomain (1, θ) in copy id, then in copy conj
  long expect[4][4] = {{1, 0, 0, 2}, {0, 1, 1, 0}, {1, 0, 0, -2}, {0, 1, -1, 0}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) CHECK(m(r, c) == expect[r][c]);
  CHECK(determinant(m) == -8);

  CHECK(idempotent_preimage(f, 0) ==
        std::vector<Rational>{Rational(1, 2), Rational(0), Rational(0), Rational(1, 4)});
  CHECK(idempotent_preimage(f, 1) ==
        std::vector<Rational>{Rational(1, 2), Rational(0), Rational(0), Rational(-1, 4)});

  auto q = NumberField::rationals();
  CHECK(splitting_matrix(q) == Matrix<Rational>::identity(1, Rational(0)));
  CHECK(idempotent_preimage(q, 0) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("splitting is invertible on the cubic") {
  auto c = named_field("cubic");
  auto m = splitting_matrix(c);
  CHECK(m.rows() == 9);
  CHECK(determinant(m) != 0);
  for (std::size_t s = 0; s < 3; ++s) {
    auto pre = idempotent_preimage(c, s);
    auto img = m.apply(std::span<const Rational>(pre));
    for (std::size_t r = 0; r < 9; ++r) CHECK(img[r] == (r == s * 3 ? 1 : 0));
  }
}

TEST_CASE("s_sigma") {
  auto f = named_field("sqrt2");
  auto five = s_sigma(f, 1, 5);
  CHECK(five.log_s == LogNorm(Rational(0)));
  CHECK(five.integral);
  auto two = s_sigma(f, 1, 2);
  CHECK(two.log_s == LogNorm(Rational(3, 2)));
  CHECK_FALSE(two.integral);
  auto q = s_sigma(NumberField::rationals(), 0, 7);
  CHECK(q.log_s == LogNorm(Rational(0)));
}

TEST_CASE("valuations on quadratic fields") {
  auto f = named_field("sqrt2");
  PAdicValuation v2(f, 2), v3(f, 3);
  CHECK(v2.ramification() == 2);
  CHECK(v3.ramification() == 1);
  CHECK(*v2(f.generator()) == Rational(1, 2));
  CHECK(*v3(f.generator()) == Rational(0));
  CHECK(*v3(f.from_rational(Rational(9, 2))) == Rational(2));
  CHECK_FALSE(v3(f.zero()).has_value());
  CHECK_THROWS_AS(PAdicValuation(f, 7), Error);
  CHECK(kind_of([&] { PAdicValuation(f, 7); }) == ErrorKind::ValuationUnavailable);
  CHECK_THROWS_AS(PAdicValuation(named_field("cubic"), 3), Error);

  std::mt19937_64 rng(11);
  for (auto* v : {&v2, &v3}) {
    for (int t = 0; t < 100; ++t) {
      auto x = random_element(f, rng), y = random_element(f, rng);
      if (is_zero(x) || is_zero(y)) continue;
      CHECK(*(*v)(x * y) == *(*v)(x) + *(*v)(y));
      auto s = x + y;
      if (!is_zero(s)) CHECK(*(*v)(s) >= std::min(*(*v)(x), *(*v)(y)));
      CHECK(*(*v)(x) == *(*v)(apply(f.automorphisms()[1], x)));
    }
  }
}

TEST_CASE("embeddings") {
  auto f = named_field("sqrt2");
  auto e = Embedding::from_generator_image(f, -f.generator());
  CHECK(e(f.generator() * f.generator()) == f.from_rational(Rational(2)));
  CHECK_THROWS_AS(Embedding::from_generator_image(f, f.one()), Error);
  auto q = Embedding::from_rationals(f);
  CHECK(q(NumberField::rationals().from_rational(Rational(5, 3))) == f.from_rational(Rational(5, 3)));
  CHECK(roots_in(poly({-2, 0, 1}), f).size() == 2);
  CHECK(roots_in(poly({-2, 0, 0, 1}), f).empty());
}
