#include "starconf/invariants.hpp"
#include "starconf/verify.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace starconf;

namespace {

struct Vars {
  RingPtr ring = make_ring();
  Polynomial x0 = Polynomial::variable(ring, 0);
  Polynomial x1 = Polynomial::variable(ring, 1);
  Polynomial x2 = Polynomial::variable(ring, 2);
  Ideal ideal(std::vector<Polynomial> g) const { return Ideal(ring, std::move(g)); }
};

ProjectivePoint pt(Coeff a, Coeff b, Coeff c) { return ProjectivePoint({a, b, c}, PrimeField()); }

}  // namespace

TEST_CASE("reduced bases of small ideals", "[groebner]") {
  Vars v;
  const Ideal I = v.ideal({v.x0, v.x0 + v.x1});
  const auto& gb = I.groebner_basis();
  REQUIRE(gb.size() == 2);
  REQUIRE(std::count(gb.begin(), gb.end(), v.x0) == 1);
  REQUIRE(std::count(gb.begin(), gb.end(), v.x1) == 1);
  REQUIRE(v.ideal({v.x2.scaled(7)}).groebner_basis() == std::vector<Polynomial>{v.x2});
}

TEST_CASE("two quadrics: Hilbert function from leading terms matches linear algebra", "[groebner]") {
  Vars v;
  const auto q1 = v.x0 * v.x0 - v.x1 * v.x2;
  const auto q2 = v.x0 * v.x1.scaled(3) + v.x1 * v.x1.scaled(5) + v.x2 * v.x2.scaled(11) + v.x0 * v.x2;
  const Ideal I = v.ideal({q1, q2});
  for (unsigned t = 0; t <= 10; ++t) REQUIRE(hilbert_function(I, t) == hilbert_function_by_rank(I, t));
  REQUIRE(hilbert_profile(I).stable_value == std::optional<std::size_t>(4));
  REQUIRE(suite::s_polynomials_reduce(I));
}

TEST_CASE("normal forms", "[groebner]") {
  Vars v;
  const Ideal I = v.ideal({v.x0});
  REQUIRE(normal_form(v.x0 * v.x1, I).is_zero());
  REQUIRE(normal_form(v.x1 * v.x1, I) == v.x1 * v.x1);
  const Ideal P = point_ideal(pt(1, 0, 0), v.ring);
  const Ideal P2 = ideal_power(P, 2);
  const Ideal meet = ideal_intersection(P2, P2);
  for (const auto& g : meet.groebner_basis()) REQUIRE(normal_form(g, P2).is_zero());
}

TEST_CASE("sums, products and powers", "[groebner]") {
  Vars v;
  REQUIRE(same_ideal(ideal_sum(v.ideal({v.x0}), v.ideal({v.x1})), v.ideal({v.x0, v.x1})));
  const Ideal I = v.ideal({v.x0 * v.x1 + v.x2 * v.x2, v.x1});
  REQUIRE(same_ideal(ideal_sum(I, I), I));
  REQUIRE(same_ideal(ideal_product(v.ideal({v.x0}), v.ideal({v.x1})), v.ideal({v.x0 * v.x1})));
  const Ideal m01 = v.ideal({v.x0, v.x1});
  REQUIRE(same_ideal(ideal_product(m01, m01), v.ideal({v.x0 * v.x0, v.x0 * v.x1, v.x1 * v.x1})));
  const auto cube = ideal_power(v.ideal({v.x1, v.x2}), 3);
  std::vector<Polynomial> expect;
  for (unsigned a = 0; a <= 3; ++a) expect.push_back(Polynomial::monomial(v.ring, Monomial(0, a, 3 - a)));
  REQUIRE(same_ideal(cube, v.ideal(expect)));
}

TEST_CASE("intersections", "[groebner]") {
  Vars v;
  REQUIRE(same_ideal(ideal_intersection(v.ideal({v.x0}), v.ideal({v.x1})), v.ideal({v.x0 * v.x1})));
  const Ideal I = v.ideal({v.x0 * v.x1, v.x2 * v.x2});
  REQUIRE(same_ideal(ideal_intersection(I, I), I));
  const Ideal P = ideal_power(point_ideal(pt(1, 0, 0), v.ring), 2);
  const Ideal Q = ideal_power(point_ideal(pt(0, 1, 0), v.ring), 2);
  const auto profile = hilbert_profile(ideal_intersection(P, Q));
  REQUIRE(profile.stable_value == std::optional<std::size_t>(6));
}

TEST_CASE("subideal tests", "[groebner]") {
  Vars v;
  const Ideal I = v.ideal({v.x0 * v.x1 + v.x2 * v.x2, v.x1 * v.x1});
  REQUIRE(is_subideal(ideal_power(I, 2), I).holds);
  const auto r = is_subideal(v.ideal({v.x0}), ideal_power(v.ideal({v.x0}), 2));
  REQUIRE_FALSE(r.holds);
  REQUIRE(*r.witness == v.x0);
  const auto z3 = quasi_star(3, 1);
  REQUIRE(is_subideal(configuration_ideal(z3, 3), ideal_power(configuration_ideal(z3), 2)).holds);
}

TEST_CASE("every S-polynomial of a computed basis reduces to zero", "[groebner]") {
  const auto ring = make_ring();
  for (std::uint64_t k = 0; k < 10; ++k) REQUIRE(suite::s_polynomials_reduce(suite::random_ideal(500 + k, ring)));
  REQUIRE(suite::s_polynomials_reduce(configuration_ideal(quasi_star(4, 2), 2)));
}

TEST_CASE("a budget of zero seconds is unlimited and an expired one throws", "[groebner]") {
  REQUIRE_FALSE(Deadline::after_seconds(0).expired());
  const auto d = Deadline::after_seconds(1e-9);
  while (!d.expired()) {
  }
  REQUIRE_THROWS_AS(d.check("test"), BudgetExhausted);
}
