#pragma once

// Exact integer combinatorics shared by every other module: base-p digits,
// binomials (exact and reduced mod p via Lucas), and the two monomial counts
// dim S^a(V_1) and h^0(P^n, O(a)).

#include <cstdint>
#include <vector>

#include "syzcert/rational.hpp"

namespace syz::arith {

/// Little-endian base-p digits with trailing zeros stripped; empty encodes 0.
/// digits[j] is the coefficient of p^j.
struct DigitVector {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  bool empty() const noexcept { return digits.empty(); }
  std::size_t size() const noexcept { return digits.size(); }
  /// Digit at position j, zero past the end.
  std::uint64_t at(std::size_t j) const noexcept { return j < digits.size() ? digits[j] : 0; }

  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

bool is_prime(std::uint64_t p) noexcept;

/// Throws ParameterError unless p is a prime >= 2.
void require_prime(std::uint64_t p);

DigitVector padic_digits(std::uint64_t x, std::uint64_t p);

/// Inverse of padic_digits. Throws ParameterError on an out-of-range digit
/// or a trailing zero.
std::uint64_t digits_value(const DigitVector& dv);

/// Exact binomial coefficient; zero when b < 0 or b > a.
Nat binom(std::uint64_t a, std::int64_t b);

/// binom(i, k) mod p as the product of per-digit binomials (Lucas).
std::uint64_t binom_mod_p_lucas(std::uint64_t i, std::uint64_t k, std::uint64_t p);

/// True iff p does not divide binom(i, k), i.e. k is digitwise below i.
/// Throws ParameterError when k > i.
bool is_binom_unit_mod_p(std::uint64_t i, std::uint64_t k, std::uint64_t p);

/// |S^a(V_1)| for dim V_1 = n: binom(a + n - 1, n - 1).
Nat dim_sym(std::uint64_t n, std::uint64_t a);

/// h^0(P^n, O(a)) = binom(a + n, n).
Nat h0(std::uint64_t n, std::uint64_t a);

std::uint64_t ceil_half(std::uint64_t d);

/// p^t as an exact integer.
Nat pow(std::uint64_t p, std::uint64_t t);

}  // namespace syz::arith
