#include "prop/fp.hpp"

#include <string>

#include "prop/error.hpp"

namespace prop {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": " + message),
      line_(line),
      column_(column) {}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw InputError("p = " + std::to_string(p) + " is not prime");
  if (p > kMaxPrime) throw InputError("p = " + std::to_string(p) + " exceeds 2^16");
}

Coef PrimeField::pow(Coef a, std::uint64_t e) const noexcept {
  Coef result = static_cast<Coef>(1 % p_);
  Coef base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Coef PrimeField::inv(Coef a) const {
  if (a % p_ == 0) throw InputError("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Coef PrimeField::reduce(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Coef>(r);
}

namespace {

// C(n, k) mod p for 0 <= k, n < p.
Coef small_binomial(const PrimeField& f, std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Coef num = 1;
  Coef den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = f.mul(num, static_cast<Coef>((n - i) % f.prime()));
    den = f.mul(den, static_cast<Coef>((i + 1) % f.prime()));
  }
  return f.mul(num, f.inv(den));
}

Coef lucas(const PrimeField& f, std::uint64_t n, std::uint64_t k) {
  Coef result = 1;
  while (k != 0 || n != 0) {
    std::uint64_t nd = n % f.prime();
    std::uint64_t kd = k % f.prime();
    if (kd > nd) return 0;
    result = f.mul(result, small_binomial(f, nd, kd));
    n /= f.prime();
    k /= f.prime();
  }
  return result;
}

}  // namespace

Coef PrimeField::binomial(std::int64_t n, std::uint64_t k) const {
  if (n >= 0) return lucas(*this, static_cast<std::uint64_t>(n), k);
  // -n fits in uint64 even for INT64_MIN.
  std::uint64_t a = std::uint64_t{0} - static_cast<std::uint64_t>(n);
  if (k > 0 && a > UINT64_MAX - (k - 1)) throw InputError("binomial argument overflow");
  Coef c = lucas(*this, a + k - 1, k);
  return (k % 2 == 0) ? c : neg(c);
}

}  // namespace prop
