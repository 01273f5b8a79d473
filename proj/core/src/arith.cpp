#include "syzcert/arith.hpp"

#include <string>

#include "syzcert/errors.hpp"

namespace syz::arith {

bool is_prime(std::uint64_t p) noexcept {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t q = 3; q <= p / q; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not a prime");
}

DigitVector padic_digits(std::uint64_t x, std::uint64_t p) {
  require_prime(p);
  DigitVector dv{p, {}};
  while (x != 0) {
    dv.digits.push_back(x % p);
    x /= p;
  }
  return dv;
}

std::uint64_t digits_value(const DigitVector& dv) {
  if (!dv.digits.empty() && dv.digits.back() == 0)
    throw ParameterError("digit vector has a trailing zero");
  std::uint64_t value = 0;
  for (auto it = dv.digits.rbegin(); it != dv.digits.rend(); ++it) {
    if (*it >= dv.base) throw ParameterError("digit out of range for base");
    value = value * dv.base + *it;
  }
  return value;
}

Nat binom(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) return 0;
  std::uint64_t k = static_cast<std::uint64_t>(b);
  if (k > a - k) k = a - k;
  // Each partial product is itself binom(a - k + j, j), so the division is exact.
  Nat acc = 1;
  for (std::uint64_t j = 1; j <= k; ++j) {
    acc *= a - k + j;
    acc /= j;
  }
  return acc;
}

std::uint64_t binom_mod_p_lucas(std::uint64_t i, std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  Nat residue = 1;
  while (i != 0 || k != 0) {
    std::uint64_t ij = i % p;
    std::uint64_t kj = k % p;
    if (kj > ij) return 0;
    residue = (residue * binom(ij, static_cast<std::int64_t>(kj))) % p;
    i /= p;
    k /= p;
  }
  return static_cast<std::uint64_t>(residue);
}

bool is_binom_unit_mod_p(std::uint64_t i, std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  if (k > i) throw ParameterError("is_binom_unit_mod_p requires k <= i");
  for (; k != 0; i /= p, k /= p) {
    if (k % p > i % p) return false;
  }
  return true;
}

Nat dim_sym(std::uint64_t n, std::uint64_t a) {
  if (n < 1) throw ParameterError("dim_sym requires n >= 1");
  return binom(a + n - 1, static_cast<std::int64_t>(n - 1));
}

Nat h0(std::uint64_t n, std::uint64_t a) {
  if (n < 1) throw ParameterError("h0 requires n >= 1");
  return binom(a + n, static_cast<std::int64_t>(n));
}

std::uint64_t ceil_half(std::uint64_t d) {
  if (d < 1) throw ParameterError("ceil_half requires d >= 1");
  return d / 2 + d % 2;
}

Nat pow(std::uint64_t p, std::uint64_t t) {
  Nat r = 1;
  for (std::uint64_t j = 0; j < t; ++j) r *= p;
  return r;
}

}  // namespace syz::arith
