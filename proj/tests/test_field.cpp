#include "starconf/field.hpp"
#include "starconf/rational.hpp"
#include "starconf/rng.hpp"

#include <catch_amalgamated.hpp>

using namespace starconf;

TEST_CASE("field axioms on random triples", "[field]") {
  for (std::uint64_t p : {PrimeField::kDefaultPrime, PrimeField::kSecondPrime}) {
    const PrimeField f(p);
    CounterRng rng(5, p);
    for (int k = 0; k < 2000; ++k) {
      const Coeff a = rng.uniform(p), b = rng.uniform(p), c = rng.uniform(p);
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.add(a, f.neg(a)) == 0);
      REQUIRE(f.sub(a, b) == f.add(a, f.neg(b)));
      if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("reduction matches the remainder operator", "[field]") {
  const PrimeField f;
  CounterRng rng(9, 1);
  for (int k = 0; k < 5000; ++k) {
    const std::uint64_t x = rng.uniform(f.modulus()) * rng.uniform(f.modulus());
    REQUIRE(f.reduce(x) == x % f.modulus());
  }
  REQUIRE(f.from_int(-1) == f.modulus() - 1);
  REQUIRE(f.to_signed(f.from_int(-7)) == -7);
}

TEST_CASE("moduli are validated", "[field]") {
  REQUIRE(is_prime(65521));
  REQUIRE(is_prime(1000003));
  REQUIRE_FALSE(is_prime(65535));
  REQUIRE_THROWS_AS(PrimeField(65535), std::invalid_argument);
  REQUIRE_THROWS_AS(PrimeField(101), std::invalid_argument);
  REQUIRE_THROWS_AS(PrimeField().inv(0), std::domain_error);
}

TEST_CASE("rational helpers", "[field]") {
  REQUIRE(to_string(make_rational(6, 4)) == "3/2");
  REQUIRE(to_string(make_rational(4, 2)) == "2");
  REQUIRE(parse_rational("2/5") == make_rational(2, 5));
  REQUIRE(parse_rational("0.4") == make_rational(2, 5));
  REQUIRE(floor_rational(make_rational(-3, 2)) == -2);
  REQUIRE(ceil_rational(make_rational(3, 2)) == 2);
  for (long n : {0L, 1L, 15L, 16L, 17L, 99L, 100L, 1000001L}) {
    const BigInt r = isqrt_floor(BigInt(n));
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("counter generator is a pure function of seed, stream and index", "[field]") {
  CounterRng a(42, 3), b(42, 3), c(42, 4);
  for (int k = 0; k < 10; ++k) {
    const auto x = a.next();
    REQUIRE(x == b.next());
    REQUIRE(x != c.next());
  }
}
