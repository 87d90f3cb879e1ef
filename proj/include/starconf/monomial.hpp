#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace starconf {

// Variables x0 > x1 > x2 of the plane ring, plus an elimination variable t
// (slot 3) that only appears in the extension ring.
inline constexpr int kPlaneVars = 3;
inline constexpr int kMaxVars = 4;
inline constexpr int kElimVar = 3;

enum class MonomialOrder {
  GRevLex,      // 3-variable graded reverse lexicographic
  Elimination,  // t-degree first, ties broken by grevlex on x0, x1, x2
};

// Exponent vector packed as four 16-bit fields. Exponents stay below 2^15,
// which keeps the borrow test in divides() exact.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr Monomial(unsigned e0, unsigned e1, unsigned e2, unsigned t = 0)
      : packed_(std::uint64_t{e0} | (std::uint64_t{e1} << 16) | (std::uint64_t{e2} << 32) |
                (std::uint64_t{t} << 48)) {}

  static constexpr Monomial from_packed(std::uint64_t p) {
    Monomial m;
    m.packed_ = p;
    return m;
  }
  static constexpr Monomial variable(int i) {
    return from_packed(std::uint64_t{1} << (16 * i));
  }

  constexpr std::uint64_t packed() const { return packed_; }
  constexpr unsigned exponent(int i) const {
    return static_cast<unsigned>((packed_ >> (16 * i)) & 0xFFFF);
  }
  constexpr unsigned x_degree() const { return exponent(0) + exponent(1) + exponent(2); }
  constexpr unsigned t_degree() const { return exponent(kElimVar); }
  constexpr unsigned total_degree() const { return x_degree() + t_degree(); }
  constexpr bool is_one() const { return packed_ == 0; }

  friend constexpr Monomial operator*(Monomial a, Monomial b) {
    return from_packed(a.packed_ + b.packed_);
  }
  // Requires b | a.
  friend constexpr Monomial operator/(Monomial a, Monomial b) {
    return from_packed(a.packed_ - b.packed_);
  }
  friend constexpr bool operator==(Monomial a, Monomial b) = default;

  // True when this monomial divides m.
  constexpr bool divides(Monomial m) const {
    return ((m.packed_ - packed_) & 0x8000800080008000ull) == 0;
  }

  constexpr bool coprime(Monomial m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (exponent(i) != 0 && m.exponent(i) != 0) return false;
    return true;
  }

  friend constexpr Monomial lcm(Monomial a, Monomial b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      const unsigned e = a.exponent(i) > b.exponent(i) ? a.exponent(i) : b.exponent(i);
      r.packed_ |= std::uint64_t{e} << (16 * i);
    }
    return r;
  }

 private:
  std::uint64_t packed_ = 0;
};

// Integer key whose natural order is the monomial order.
constexpr std::uint64_t order_key(Monomial m, MonomialOrder order) {
  const std::uint64_t e1 = m.exponent(1), e2 = m.exponent(2), t = m.t_degree();
  if (order == MonomialOrder::GRevLex) {
    return (std::uint64_t{m.total_degree()} << 48) | ((0xFFFF - t) << 32) |
           ((0xFFFF - e2) << 16) | (0xFFFF - e1);
  }
  return (t << 48) | (std::uint64_t{m.x_degree()} << 32) | ((0xFFFF - e2) << 16) |
         (0xFFFF - e1);
}

constexpr std::strong_ordering compare(Monomial a, Monomial b, MonomialOrder order) {
  return order_key(a, order) <=> order_key(b, order);
}

// Dense indexing of the plane monomials of a fixed degree D. Index 0 is x0^D
// and increasing index means decreasing grevlex order.
constexpr std::size_t count_monomials(unsigned degree) {
  return std::size_t{degree + 1} * (degree + 2) / 2;
}

constexpr std::size_t plane_index(Monomial m) {
  const std::size_t d = m.x_degree(), e1 = m.exponent(1), e2 = m.exponent(2);
  return e2 * (d + 1) - e2 * (e2 - (e2 > 0 ? 1 : 0)) / 2 + e1;
}

// All plane monomials of the given degree in decreasing grevlex order.
inline std::vector<Monomial> plane_monomials(unsigned degree) {
  std::vector<Monomial> out;
  out.reserve(count_monomials(degree));
  for (unsigned e2 = 0; e2 <= degree; ++e2)
    for (unsigned e1 = 0; e1 + e2 <= degree; ++e1) out.emplace_back(degree - e1 - e2, e1, e2);
  return out;
}

}  // namespace starconf
