#include "starconf/polynomial.hpp"
#include "starconf/rng.hpp"

#include <catch_amalgamated.hpp>

using namespace starconf;

namespace {

struct Vars {
  RingPtr ring = make_ring();
  Polynomial x0 = Polynomial::variable(ring, 0);
  Polynomial x1 = Polynomial::variable(ring, 1);
  Polynomial x2 = Polynomial::variable(ring, 2);
};

Polynomial random_form(const RingPtr& ring, unsigned degree, CounterRng& rng) {
  std::vector<Term> terms;
  for (Monomial m : plane_monomials(degree))
    if (const Coeff c = rng.uniform(ring->prime())) terms.push_back({m, c});
  return Polynomial::from_sorted(ring, std::move(terms));
}

}  // namespace

TEST_CASE("addition", "[polynomial]") {
  Vars v;
  REQUIRE((v.x0 + (-v.x0)).is_zero());
  REQUIRE((v.x0 + v.x1).size() == 2);
  const auto s = (v.x0 + v.x1) + (v.x0 - v.x1);
  REQUIRE(s == v.x0.scaled(2));
}

TEST_CASE("multiplication", "[polynomial]") {
  Vars v;
  REQUIRE(v.x0 * v.x1 == Polynomial::monomial(v.ring, Monomial(1, 1, 0)));
  const auto sq = poly_pow(v.x0 + v.x1, 2);
  REQUIRE(sq == v.x0 * v.x0 + (v.x0 * v.x1).scaled(2) + v.x1 * v.x1);
  REQUIRE((v.x0 * Polynomial(v.ring)).is_zero());
}

TEST_CASE("products agree with pointwise evaluation", "[polynomial]") {
  Vars v;
  const auto& f = v.ring->field();
  CounterRng rng(3, 0);
  for (int k = 0; k < 20; ++k) {
    const auto a = random_form(v.ring, 1 + k % 5, rng);
    const auto b = random_form(v.ring, 2 + k % 3, rng);
    const std::array<Coeff, 3> pt{rng.uniform(f.modulus()), rng.uniform(f.modulus()), rng.uniform(f.modulus())};
    REQUIRE(evaluate(a * b, pt) == f.mul(evaluate(a, pt), evaluate(b, pt)));
    REQUIRE(evaluate(a + b, pt) == f.add(evaluate(a, pt), evaluate(b, pt)));
  }
}

TEST_CASE("evaluation", "[polynomial]") {
  Vars v;
  const std::array<Coeff, 3> e0{1, 0, 0}, ones{1, 1, 1};
  REQUIRE(evaluate(v.x1, e0) == 0);
  REQUIRE(evaluate(v.x0, e0) == 1);
  REQUIRE(evaluate(v.x0 * v.x2 - v.x1 * v.x1, ones) == 0);
}

TEST_CASE("grevlex order", "[polynomial]") {
  const auto o = MonomialOrder::GRevLex;
  REQUIRE(compare(Monomial(2, 0, 0), Monomial(1, 1, 0), o) == std::strong_ordering::greater);
  REQUIRE(compare(Monomial(0, 2, 0), Monomial(1, 0, 1), o) == std::strong_ordering::greater);
  REQUIRE(compare(Monomial(1, 1, 1), Monomial(1, 1, 1), o) == std::strong_ordering::equal);
  // Dense indexing follows the order.
  const auto monos = plane_monomials(4);
  REQUIRE(monos.size() == count_monomials(4));
  for (std::size_t i = 0; i < monos.size(); ++i) {
    REQUIRE(plane_index(monos[i]) == i);
    if (i) REQUIRE(compare(monos[i - 1], monos[i], o) == std::strong_ordering::greater);
  }
}

TEST_CASE("homogeneous components", "[polynomial]") {
  Vars v;
  const auto f = v.x0 * v.x1 + v.x2 + Polynomial::constant(v.ring, 5);
  REQUIRE_FALSE(f.is_homogeneous());
  const auto parts = f.homogeneous_components();
  REQUIRE(parts.size() == 3);
  Polynomial sum(v.ring);
  for (const auto& p : parts) {
    REQUIRE(p.is_homogeneous());
    sum = sum + p;
  }
  REQUIRE(sum == f);
}

TEST_CASE("mixing rings is rejected", "[polynomial]") {
  const auto a = Polynomial::variable(make_ring(), 0);
  const auto b = Polynomial::variable(make_ring(PrimeField::kSecondPrime), 0);
  REQUIRE_THROWS_AS(a + b, RingMismatch);
}
