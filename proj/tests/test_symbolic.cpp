#include "starconf/symbolic.hpp"
#include "starconf/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace starconf;

namespace {

Configuration single_point() {
  const auto ring = make_ring();
  return custom_configuration(ring, {ProjectivePoint({1, 0, 0}, ring->field())});
}

}  // namespace

TEST_CASE("symbolic powers of a single point are ordinary powers", "[symbolic]") {
  const auto p = single_point();
  const auto ring = p.ring;
  const auto x1 = Polynomial::variable(ring, 1), x2 = Polynomial::variable(ring, 2);
  REQUIRE(same_ideal(symbolic_power(p, 2).ideal, Ideal(ring, {x1 * x1, x1 * x2, x2 * x2})));
  REQUIRE(symbolic_power(quasi_star(3, 1), 1).ideal.groebner_basis() ==
          configuration_ideal(quasi_star(3, 1)).groebner_basis());
}

TEST_CASE("the product of the star lines lies in the second symbolic power", "[symbolic]") {
  const auto s = star_configuration(4, 1);
  std::vector<Polynomial> factors;
  for (const auto& L : s.lines) factors.push_back(L.polynomial(s.ring));
  const auto D = product(s.ring, factors);
  REQUIRE(normal_form(D, symbolic_power(s, 2).ideal).is_zero());
  for (const auto& p : s.points) REQUIRE(vanishing_order_at_least(D, p.point, 2));
  REQUIRE(alpha(symbolic_power(s, 2).ideal) <= 4);
}

TEST_CASE("initial degrees by interpolation", "[symbolic]") {
  const auto five = generic_points(5, 1);
  const auto a = alpha_fat_points(five.ring, five.projective_points(), scaled_multiplicities(five, 2), 20);
  REQUIRE(a->degree == 4);
  const auto p = single_point();
  REQUIRE(alpha_fat_points(p.ring, p.projective_points(), {3}, 10)->degree == 3);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto g = generic_points(n, 3);
    unsigned t = 0;
    while (count_monomials(t) <= n) ++t;
    REQUIRE(alpha_fat_points(g.ring, g.projective_points(), scaled_multiplicities(g, 1), 20)->degree == t);
  }
}

TEST_CASE("low degrees cannot vanish to high order", "[symbolic]") {
  const auto p = single_point();
  const auto& f = p.field();
  for (unsigned t = 0; t < 3; ++t)
    REQUIRE(kernel_basis(fat_point_conditions(p.projective_points(), {3}, t, f), f).empty());
}

TEST_CASE("interpolation and intersection agree on initial degrees of I(Z_3)^(m)", "[symbolic]") {
  const auto z = quasi_star(3, 1);
  const std::vector<unsigned> expect{3, 5, 7, 9};
  for (unsigned m = 1; m <= 4; ++m) {
    const auto by_rank = alpha_fat_points(z.ring, z.projective_points(), scaled_multiplicities(z, m), 40);
    REQUIRE(by_rank->degree == expect[m - 1]);
    REQUIRE(alpha(symbolic_power(z, m).ideal) == expect[m - 1]);
  }
}

TEST_CASE("Waldschmidt interval of I(Z_3)", "[symbolic]") {
  WaldschmidtOptions w;
  w.m_max = 8;
  const auto est = waldschmidt_estimate(quasi_star(3, 1), w);
  REQUIRE(est.alpha_values == std::map<unsigned, unsigned>{{1, 3}, {2, 5}, {3, 7}, {4, 9}, {5, 12}, {6, 14}, {7, 16}, {8, 18}});
  REQUIRE(est.upper == make_rational(9, 4));
  REQUIRE(est.lower == 2);
  REQUIRE(est.contains(make_rational(9, 4)));
}

TEST_CASE("c_d table", "[symbolic]") {
  REQUIRE(c_d(4) == make_rational(2));
  REQUIRE(c_d(5) == make_rational(2));
  REQUIRE(c_d(6) == make_rational(12, 5));
  REQUIRE(c_d(7) == make_rational(21, 8));
  REQUIRE(c_d(8) == make_rational(48, 17));
  REQUIRE(c_d(9) == make_rational(3));
  REQUIRE_FALSE(c_d(10));
}

TEST_CASE("certificates", "[symbolic]") {
  const auto c4 = waldschmidt_certificate(quasi_star(4, 1), 1);
  REQUIRE(c4.route == "c_d");
  REQUIRE(c4.membership_verified);
  REQUIRE(c4.bound_implied == 3);
  const auto c9 = waldschmidt_certificate(quasi_star(9, 1), 1);
  REQUIRE(c9.bound_implied == 6);
  REQUIRE(c9.symbolic_order == 2);
  const auto c16 = waldschmidt_certificate(quasi_star(16, 1), 1);
  REQUIRE(c16.route == "sqrt");
  REQUIRE(c16.membership_verified);
  // The certificate is a genuine element of the claimed symbolic power.
  const auto z = quasi_star(5, 2);
  const auto c = waldschmidt_certificate(z, 1);
  for (const auto& p : z.points) REQUIRE(vanishing_order_at_least(c.element, p.point, c.symbolic_order));
  REQUIRE(c.element.degree() == c.degree);
}

TEST_CASE("containment grid of I(Z_3)", "[symbolic]") {
  const auto z = quasi_star(3, 1);
  const auto rep = containment_table(z, 8, 6);
  REQUIRE(rep.violations.empty());
  REQUIRE(rep.all_resolved());
  REQUIRE(rep.cell(1, 1).status == CellStatus::Holds);
  REQUIRE(rep.cell(2, 1).status == CellStatus::Holds);
  REQUIRE(rep.cell(3, 2).status == CellStatus::Holds);
  for (unsigned m = 1; m <= 6; ++m)
    for (unsigned r = 1; 2 * r <= m && r <= 4; ++r) REQUIRE(rep.cell(m, r).status == CellStatus::Holds);
  REQUIRE(rep.max_failing_ratio == make_rational(6, 5));
  REQUIRE(*rep.max_failing_ratio <= make_rational(4, 3));
}

TEST_CASE("containment on six star points agrees with linear algebra", "[symbolic]") {
  const auto s = star_configuration(4, 1);
  const auto rep = containment_table(s, 4, 3);
  REQUIRE(rep.cell(3, 2).status == CellStatus::Holds);
  REQUIRE(containment_by_rank(s, 3, 2) == CellStatus::Holds);
  REQUIRE(rep.cell(2, 2).status == CellStatus::Fails);
  REQUIRE(containment_by_rank(s, 2, 2) == CellStatus::Fails);
}

TEST_CASE("resurgence bounds for the six point triple", "[symbolic]") {
  ResurgenceOptions ro;
  ro.waldschmidt.m_max = 4;
  const auto y = resurgence_bounds(star_configuration(4, 1), ro);
  REQUIRE(y.lower == make_rational(3, 2));
  REQUIRE(y.upper == make_rational(3, 2));
  ro.waldschmidt.m_max = 9;
  const auto w = resurgence_bounds(quasi_star(3, 1), ro);
  REQUIRE(w.contains(make_rational(4, 3)));
  REQUIRE_FALSE(w.contains(make_rational(3, 2)));
}

TEST_CASE("interval for d = 4, 5", "[symbolic]") {
  const auto b4 = resurgence_range(4);
  REQUIRE(b4.lower_exact == make_rational(4, 3));
  REQUIRE(b4.upper == make_rational(8, 5));
  const auto b16 = resurgence_range(16);
  REQUIRE(b16.lower_exact == make_rational(8, 5));
  const auto b10 = resurgence_range(10);
  REQUIRE_FALSE(b10.lower_exact);
  REQUIRE(b10.lower_value == Catch::Approx(2 - 2 / (std::sqrt(10.0) + 1)));
}

TEST_CASE("exact comparison with 2 - 2/(sqrt(d)+1)", "[symbolic]") {
  REQUIRE(suite::at_least_sqrt_bound(make_rational(8, 5), 16));
  REQUIRE_FALSE(suite::at_least_sqrt_bound(make_rational(159, 100), 16));
  REQUIRE(suite::at_least_sqrt_bound(make_rational(152, 100), 10));
  REQUIRE_FALSE(suite::at_least_sqrt_bound(make_rational(151, 100), 10));
}

TEST_CASE("derived parameters", "[symbolic]") {
  const auto e = corollary_from_epsilon(make_rational(2, 5));
  REQUIRE(e.d == 16);
  REQUIRE(e.predicted_lower == make_rational(8, 5));
  REQUIRE(e.predicted_upper == 2);
  const auto r2 = corollary_from_failure_order(2);
  REQUIRE(r2.d == 9);
  REQUIRE(r2.predicted_lower == make_rational(3, 2));
  const auto r3 = corollary_from_failure_order(3);
  REQUIRE(r3.d == 25);
  REQUIRE(r3.range.lower_exact == make_rational(5, 3));
}

TEST_CASE("Waldschmidt intervals of a point and of six star points", "[symbolic]") {
  for (unsigned m_max : {1u, 3u, 6u}) {
    WaldschmidtOptions w;
    w.m_max = m_max;
    const auto est = waldschmidt_estimate(single_point(), w);
    REQUIRE(est.lower == 1);
    REQUIRE(est.upper == 1);
  }
  WaldschmidtOptions w;
  w.m_max = 4;
  REQUIRE(waldschmidt_estimate(star_configuration(4, 1), w).contains(make_rational(2)));
}

TEST_CASE("interpolation and intersection agree on small configurations", "[symbolic]") {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto g = generic_points(n, 20 + n);
    for (unsigned m = 1; m <= 3; ++m) {
      const auto by_rank = alpha_fat_points(g.ring, g.projective_points(), scaled_multiplicities(g, m), 30);
      REQUIRE(by_rank->degree == alpha(symbolic_power(g, m).ideal));
    }
  }
}

TEST_CASE("resurgence bounds are ordered inside [1, 2)", "[symbolic]") {
  ResurgenceOptions ro;
  ro.waldschmidt.m_max = 6;
  ro.containment_m_max = 4;
  ro.containment_r_max = 3;
  for (auto cfg : {quasi_star(3, 2), quasi_star(4, 2), star_configuration(4, 2), generic_points(6, 2),
                   generic_points(7, 2)}) {
    const auto rb = resurgence_bounds(cfg, ro);
    REQUIRE(1 <= rb.lower);
    REQUIRE(rb.lower <= rb.upper);
    REQUIRE(rb.upper < 2);
  }
}
