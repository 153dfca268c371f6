#pragma once

#include <cstdint>

namespace prop {

/// Field element storage. Every supported prime is below 2^16.
using Coef = std::uint16_t;

inline constexpr std::uint32_t kMaxPrime = 65521;  // largest prime < 2^16

bool is_prime(std::uint64_t n) noexcept;

/// Arithmetic in the prime field F_p. Values are canonical residues in [0, p).
class PrimeField {
 public:
  /// Throws InputError unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const noexcept { return p_; }

  Coef add(Coef a, Coef b) const noexcept {
    std::uint32_t s = std::uint32_t{a} + b;
    return static_cast<Coef>(s >= p_ ? s - p_ : s);
  }
  Coef sub(Coef a, Coef b) const noexcept {
    return static_cast<Coef>(a >= b ? a - b : a + p_ - b);
  }
  Coef neg(Coef a) const noexcept { return static_cast<Coef>(a == 0 ? 0 : p_ - a); }
  Coef mul(Coef a, Coef b) const noexcept {
    return static_cast<Coef>((std::uint32_t{a} * b) % p_);
  }
  /// Multiplicative inverse; a must be nonzero.
  Coef inv(Coef a) const;
  Coef pow(Coef a, std::uint64_t e) const noexcept;

  /// Reduces an arbitrary signed integer.
  Coef reduce(std::int64_t v) const noexcept;

  /// Generalized binomial coefficient C(n, k) mod p for any signed n, using
  /// C(-a, k) = (-1)^k C(a+k-1, k) and Lucas' theorem.
  Coef binomial(std::int64_t n, std::uint64_t k) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

}  // namespace prop
