#include "starconf/invariants.hpp"
#include "starconf/verify.hpp"

#include <catch_amalgamated.hpp>

using namespace starconf;

namespace {

using Entries = std::map<std::pair<unsigned, unsigned>, std::size_t>;

struct Vars {
  RingPtr ring = make_ring();
  Polynomial x0 = Polynomial::variable(ring, 0);
  Polynomial x1 = Polynomial::variable(ring, 1);
  Polynomial x2 = Polynomial::variable(ring, 2);
};

Configuration single_point(unsigned multiplicity = 1) {
  const auto ring = make_ring();
  return custom_configuration(ring, {ProjectivePoint({1, 0, 0}, ring->field())}, {multiplicity});
}

}  // namespace

TEST_CASE("Hilbert profiles", "[invariants]") {
  const auto p = hilbert_profile(configuration_ideal(single_point()));
  for (std::size_t t = 0; t < p.values.size(); ++t) REQUIRE(p.values[t] == 1);
  const auto z3 = hilbert_profile(configuration_ideal(quasi_star(3, 1)));
  REQUIRE(std::vector<std::size_t>(z3.values.begin(), z3.values.begin() + 5) ==
          std::vector<std::size_t>{1, 3, 6, 6, 6});
  REQUIRE(z3.stabilized_at == std::optional<unsigned>(2));
  REQUIRE(z3.is_generic());
  const auto dbl = hilbert_profile(configuration_ideal(single_point(2)));
  for (std::size_t t = 2; t < dbl.values.size(); ++t) REQUIRE(dbl.values[t] == 3);
}

TEST_CASE("minimal generator degrees", "[invariants]") {
  Vars v;
  const Ideal I = configuration_ideal(quasi_star(3, 1));
  REQUIRE(minimal_generator_degrees(I) == std::map<unsigned, std::size_t>{{3, 4}});
  REQUIRE(minimal_generator_degrees(ideal_power(I, 2)) == std::map<unsigned, std::size_t>{{6, 10}});
  REQUIRE(minimal_generator_degrees(Ideal(v.ring, {v.x0, v.x1 * v.x1})) ==
          std::map<unsigned, std::size_t>{{1, 1}, {2, 1}});
}

TEST_CASE("multiplicities", "[invariants]") {
  for (unsigned d = 3; d <= 5; ++d) REQUIRE(multiplicity(configuration_ideal(quasi_star(d, d))) == d * (d + 1) / 2);
  REQUIRE(multiplicity(configuration_ideal(single_point())) == 1);
  REQUIRE(multiplicity(configuration_ideal(single_point(2))) == 3);
}

TEST_CASE("Betti numbers of ideals with known resolutions", "[invariants]") {
  Vars v;
  // Koszul complex on the three variables.
  auto b = regularity_with_table(Ideal(v.ring, {v.x0, v.x1, v.x2})).betti;
  REQUIRE(b.entries == Entries{{{0, 1}, 3}, {{1, 2}, 3}, {{2, 3}, 1}});
  // Complete intersection of degrees 2 and 3.
  b = regularity_with_table(Ideal(v.ring, {v.x0 * v.x0, v.x1 * v.x1 * v.x1})).betti;
  REQUIRE(b.entries == Entries{{{0, 2}, 1}, {{0, 3}, 1}, {{1, 5}, 1}});
  REQUIRE(b.regularity() == 4);
  // Eagon-Northcott for (x0, x1)^2.
  b = regularity_with_table(ideal_power(Ideal(v.ring, {v.x0, v.x1}), 2)).betti;
  REQUIRE(b.entries == Entries{{{0, 2}, 3}, {{1, 3}, 2}});
  REQUIRE(b.complete);
}

TEST_CASE("Betti tables of quasi star ideals", "[invariants]") {
  const Ideal I = configuration_ideal(quasi_star(3, 1));
  const auto b1 = regularity_with_table(I);
  REQUIRE(b1.betti.entries == Entries{{{0, 3}, 4}, {{1, 4}, 3}});
  REQUIRE(b1.regularity == 3);
  const auto b2 = regularity_with_table(ideal_power(I, 2));
  REQUIRE(b2.betti.entries == Entries{{{0, 6}, 10}, {{1, 7}, 12}, {{2, 8}, 3}});
  REQUIRE(betti_hilbert_consistent(b2.betti));
}

TEST_CASE("Betti tables satisfy the alternating sum identity", "[invariants]") {
  const auto ring = make_ring();
  for (std::uint64_t k = 0; k < 10; ++k) {
    const Ideal I = suite::random_ideal(900 + k, ring);
    REQUIRE(betti_hilbert_consistent(graded_betti(I, 10)));
  }
  for (auto cfg : {generic_points(7, 1), generic_points(5, 1), star_configuration(5, 1)})
    REQUIRE(betti_hilbert_consistent(regularity_with_table(configuration_ideal(cfg)).betti));
}

TEST_CASE("truncated tables are flagged incomplete", "[invariants]") {
  const Ideal I = configuration_ideal(quasi_star(4, 1));
  REQUIRE_FALSE(graded_betti(I, 3).complete);
  REQUIRE(graded_betti(I, 8).complete);
}

TEST_CASE("Hilbert function from standard monomials matches the rank oracle", "[invariants]") {
  const auto ring = make_ring();
  for (std::uint64_t k = 0; k < 10; ++k) {
    const Ideal I = suite::random_ideal(77 + k, ring);
    for (unsigned t = 0; t <= 12; ++t) REQUIRE(hilbert_function(I, t) == hilbert_function_by_rank(I, t));
  }
}

TEST_CASE("invariant reports", "[invariants]") {
  auto rep = compute_invariants(configuration_ideal(quasi_star(4, 1)), true);
  REQUIRE(rep.alpha == 4);
  REQUIRE(rep.regularity == 4);
  REQUIRE(rep.betti.entries == Entries{{{0, 4}, 5}, {{1, 5}, 4}});
  rep = compute_invariants(configuration_ideal(star_configuration(4, 1)), true);
  REQUIRE(rep.alpha == 3);
  REQUIRE(rep.regularity == 3);
  rep = compute_invariants(configuration_ideal(single_point()), true);
  REQUIRE(rep.alpha == 1);
  REQUIRE(rep.regularity == 1);
  REQUIRE(rep.multiplicity == std::optional<std::size_t>(1));
}

TEST_CASE("determinantal ideal", "[invariants]") {
  for (unsigned d = 3; d <= 5; ++d) {
    const auto z = quasi_star(d, 10 + d);
    REQUIRE(same_ideal(determinantal_ideal(z), configuration_ideal(z)));
  }
}

TEST_CASE("seven equivalent conditions", "[invariants]") {
  const std::array<bool, 7> yes{true, true, true, true, true, true, true};
  const std::array<bool, 7> no{};
  REQUIRE(verify_equivalences(quasi_star(4, 1)).conditions == yes);
  REQUIRE(verify_equivalences(generic_points(6, 1)).conditions == yes);
  REQUIRE(verify_equivalences(generic_points(7, 1)).conditions == no);
  REQUIRE(verify_equivalences(generic_points(7, 1)).alpha == 3);
  REQUIRE_THROWS_AS(verify_equivalences(single_point(2)), std::invalid_argument);
}
