#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "hav/cohomology.hpp"
#include "hav/errors.hpp"

using namespace hav;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

using Dims = std::vector<std::size_t>;

BorelData borel_over(const std::string& name, const NumberField& L) {
  auto b = catalog_borel(name);
  return {base_change(b.algebra, Embedding::from_rationals(L)), b.toral_dim};
}

}  // namespace

TEST_CASE("colex order") {
  auto s = colex_subsets(4, 2);
  std::vector<std::vector<std::size_t>> expect{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(s == expect);
  for (std::size_t r = 0; r < s.size(); ++r) CHECK(colex_rank(s[r]) == r);
  CHECK(colex_subsets(3, 0).size() == 1);
  CHECK(colex_subsets(3, 4).empty());
}

TEST_CASE("Heisenberg differentials by hand") {
  auto h = catalog("heisenberg");
  auto f = h.field();
  auto chain = build_complex(trivial_module(h), Direction::Chain);
  auto d2 = chain.differential(2);
  REQUIRE(d2.rows() == 3);
  REQUIRE(d2.cols() == 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(d2(r, c) == f.from_rational(Rational(r == 2 && c == 0 ? -1 : 0)));
  CHECK(rank(d2) == 1);

  auto cochain = build_complex(trivial_module(h), Direction::Cochain);
  auto d1 = cochain.differential(1);
  REQUIRE(d1.rows() == 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(d1(r, c) == f.from_rational(Rational(r == 0 && c == 2 ? -1 : 0)));
  CHECK(chain.differential(0).rows() == 0);
  CHECK(chain.differential(7).is_zero_matrix());
}

TEST_CASE("betti numbers") {
  for (long n = 0; n <= 4; ++n) {
    auto c = build_complex(trivial_module(catalog("abelian", {{"n", n}})), Direction::Cochain);
    auto b = betti_numbers(c);
    REQUIRE(b.size() == static_cast<std::size_t>(n + 1));
    for (long k = 0; k <= n; ++k) CHECK(b[k] == static_cast<std::size_t>(binomial(n, k)));
  }
  CHECK(betti_numbers(build_complex(trivial_module(catalog("heisenberg")), Direction::Cochain)) == Dims{1, 2, 2, 1});
  CHECK(betti_numbers(build_complex(trivial_module(catalog("heisenberg", {{"m", 2}})), Direction::Cochain)) ==
        Dims{1, 4, 5, 5, 4, 1});
  CHECK(betti_numbers(build_complex(trivial_module(catalog("sl2")), Direction::Cochain)) == Dims{1, 0, 0, 1});
  CHECK(betti_numbers(build_complex(adjoint_module(catalog("sl2")), Direction::Cochain)) == Dims{0, 0, 0, 0});
  CHECK(betti_numbers(build_complex(trivial_module(catalog("borel_sl2")), Direction::Cochain)) == Dims{1, 1, 0});
}

TEST_CASE("degrees out of range") {
  auto c = build_complex(trivial_module(catalog("heisenberg")), Direction::Cochain);
  CHECK(kind_of([&] { cohomology(c, -1); }) == ErrorKind::DegreeOutOfRange);
  CHECK(cohomology(c, 4).dimension == 0);
  CHECK(cohomology(c, 9).dimension == 0);
  CHECK(c.space_dim(5) == 0);
}

TEST_CASE("representatives are independent cocycles") {
  auto g = catalog("heisenberg");
  auto c = build_complex(adjoint_module(g), Direction::Cochain);
  REQUIRE(squares_to_zero(c));
  for (long k = 0; k <= 3; ++k) {
    auto h = cohomology(c, k);
    CHECK((c.differential(k) * h.representatives).is_zero_matrix());
    auto img = c.incoming(k);
    CHECK(rank(hcat(img, h.representatives)) == rank(img) + h.dimension);

    std::vector<std::size_t> order(c.space_dim(k) - rank(c.differential(k)));
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::reverse(order.begin(), order.end());
    auto rev = cohomology(c, k, order);
    CHECK(rev.dimension == h.dimension);
    CHECK(same_span(hcat(img, rev.representatives), hcat(img, h.representatives)));
  }
  std::vector<std::size_t> too_long(20, 0);
  CHECK(kind_of([&] { cohomology(c, 1, too_long); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("invariants need a chain map") {
  auto g = catalog("sl2");
  auto f = g.field();
  FMatrix e(3, 1, f.zero()), hh(3, 1, f.zero());
  e(1, 0) = f.one();
  hh(0, 0) = f.one();
  auto t = make_subalgebra(g, e);
  auto u = make_subalgebra(g, hh);
  CHECK(kind_of([&] { invariants_of_cohomology(t, u, trivial_module(g), 1); }) == ErrorKind::ActionNotChainMap);

  auto inv = invariants_of_cohomology(u, t, trivial_module(g), 1);
  CHECK(inv.full_dimension == 1);
  CHECK(inv.dimension == 0);
}

TEST_CASE("Borel decompositions over Q(sqrt2)") {
  auto L = named_field("sqrt2");
  auto iota = Embedding::identity(L);
  auto b = borel_over("borel_sl2", L);
  CHECK_NOTHROW(check_borel_shape(b));
  CHECK(kind_of([&] { check_borel_shape({catalog("sl2"), 1}); }) == ErrorKind::NotBorelShape);

  auto zero = hs_decomposition_check(b, iota, zero_character(ambient_algebra(b.algebra, iota)));
  CHECK(zero.direct == Dims{1, 1, 0});
  CHECK(zero.equal);
  CHECK(zero.t0_dim == 1);
  CHECK(zero.u0_dim == 1);
  CHECK(zero.vanishing_bound == 2);

  auto generic = hs_decomposition_check(b, iota, toral_character(b, iota, L.one()));
  CHECK(generic.direct == Dims{0, 0, 0});
  CHECK(generic.equal);

  // χ(T) = 4√2 matches the weight of T on u^0, so H^1(u^0) is invariant
  auto resonant = hs_decomposition_check(b, iota, toral_character(b, iota, L.from_rational(Rational(4))));
  CHECK(resonant.u_invariants == Dims{0, 1});
  CHECK(resonant.direct == Dims{0, 1, 1});
  CHECK(resonant.equal);

  auto b3 = borel_over("borel_sl3", L);
  auto r3 = hs_decomposition_check(b3, iota, zero_character(ambient_algebra(b3.algebra, iota)));
  CHECK(r3.t0_dim == 2);
  CHECK(r3.u0_dim == 3);
  CHECK(r3.direct == Dims{1, 2, 1, 0, 0, 0});
  CHECK(r3.equal);
  CHECK(r3.vanishes_above_bound);
}

TEST_CASE("classical checks") {
  auto L = named_field("sqrt2");
  auto iota = Embedding::identity(L);
  auto sl2 = base_change(catalog("sl2"), Embedding::from_rationals(L));
  auto w = whitehead_check(sl2, iota, [](const LieAlgebra& a) { return adjoint_module(a); });
  CHECK(w.vanishes);
  CHECK(w.h1_dim == 0);
  CHECK(kind_of([&] {
          whitehead_check(catalog("heisenberg"), Embedding::identity(NumberField::rationals()),
                          [](const LieAlgebra& a) { return trivial_module(a); });
        }) == ErrorKind::NotSemisimple);

  auto dx = dixmier_check(catalog("heisenberg"));
  CHECK(dx.holds);
  CHECK(dx.dims == Dims{1, 2, 2, 1});
  CHECK(kind_of([] { dixmier_check(catalog("sl2")); }) == ErrorKind::NotNilpotent);

  auto du = duality_check(adjoint_module(catalog("heisenberg")));
  CHECK(du.holds);
  CHECK(du.cohomology == Dims{1, 4, 5, 2});

  auto eu = euler_check(build_complex(adjoint_module(catalog("heisenberg")), Direction::Chain));
  CHECK(eu.holds);
  CHECK(eu.chain_characteristic == 0);
  auto e0 = euler_check(build_complex(trivial_module(catalog("abelian", {{"n", 0}}), 2), Direction::Cochain));
  CHECK(e0.betti_characteristic == 2);

  CHECK(poincare_symmetric({1, 2, 2, 1}));
  CHECK_FALSE(poincare_symmetric({1, 1, 0}));
}
