#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace starconf {

using Coeff = std::uint64_t;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t k = 3; k * k <= n; k += 2)
    if (n % k == 0) return false;
  return true;
}

// Arithmetic in Z/pZ for a runtime prime 2^15 <= p < 2^31. Residues are
// stored as plain 64-bit integers in [0, p).
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultPrime = 65521;
  static constexpr std::uint64_t kSecondPrime = 1000003;

  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(p) {
    if (p < (1u << 15) || p >= (1ull << 31) || !is_prime(p))
      throw std::invalid_argument("modulus must be a prime in [2^15, 2^31): " +
                                  std::to_string(p));
    barrett_ = ~std::uint64_t{0} / p_;
    // Number of products (p-1)^2 that may be added to a reduced value
    // without overflowing 64 bits.
    const std::uint64_t sq = (p_ - 1) * (p_ - 1);
    safe_accumulations_ = (~std::uint64_t{0} - p_) / sq;
  }

  std::uint64_t modulus() const { return p_; }
  std::uint64_t safe_accumulations() const { return safe_accumulations_; }

  // Reduces any 64-bit value.
  Coeff reduce(std::uint64_t x) const {
    const std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }

  Coeff from_int(std::int64_t v) const {
    const std::int64_t p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Coeff>(r);
  }

  // Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Coeff a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)
                      : static_cast<std::int64_t>(a);
  }

  Coeff add(Coeff a, Coeff b) const {
    const Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const { return reduce(a * b); }

  Coeff pow(Coeff a, std::uint64_t e) const {
    Coeff result = 1;
    while (e) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Coeff inv(Coeff a) const {
    if (a == 0) throw std::domain_error("inverse of zero in prime field");
    return pow(a, p_ - 2);
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint64_t p_;
  std::uint64_t barrett_ = 0;
  std::uint64_t safe_accumulations_ = 0;
};

}  // namespace starconf
