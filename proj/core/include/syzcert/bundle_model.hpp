#pragma once

// Numeric invariants of the syzygy bundle V_d on P^n and of its graded
// homogeneous pieces S^{d-i}(V_1) (x) O(i). "Degree" is the integer m with
// det = O(m), so deg V_d = -d.

#include <cstdint>
#include <vector>

#include "syzcert/arith.hpp"
#include "syzcert/rational.hpp"

namespace syz::bundle {

/// d = (a_0 + a_1 p + ... + a_m p^m) p^{valuation} with a_0, a_m nonzero.
struct PadicExpansion {
  std::uint64_t p = 2;
  std::uint64_t valuation = 0;
  arith::DigitVector core;  ///< digits of d' = d / p^valuation

  std::size_t m() const noexcept { return core.size() - 1; }
  std::uint64_t digit(std::size_t j) const noexcept { return core.at(j); }
  std::uint64_t core_value() const { return arith::digits_value(core); }
  /// d' * p^valuation.
  Nat value() const;

  friend bool operator==(const PadicExpansion&, const PadicExpansion&) = default;
};

struct SyzygyBundle {
  std::uint64_t n = 2;
  std::uint64_t p = 2;
  std::uint64_t d = 1;
  Nat rank;
  Int degree;
  Rational slope;
};

/// One summand S^e(V_1) (x) z^i of V_d, e = d - i.
struct GradedBlock {
  std::uint64_t twist = 0;
  std::uint64_t inner_degree = 0;
  Nat rank;
  Rational slope;
  Int degree;
};

PadicExpansion expansion(std::uint64_t d, std::uint64_t p);

Nat syzygy_rank(std::uint64_t n, std::uint64_t d);
Rational syzygy_slope(std::uint64_t n, std::uint64_t d);
SyzygyBundle syzygy_bundle(std::uint64_t n, std::uint64_t p, std::uint64_t d);

/// mu(S^e(V_1) (x) O(i)) = i - e/n.
Rational block_slope(std::uint64_t n, std::uint64_t e, std::uint64_t i);

/// Slope of the t-th Frobenius pullback: p^t * s.
Rational frobenius_slope_scale(const Rational& s, std::uint64_t t, std::uint64_t p);

/// Blocks for twists i = 0 .. d-1, in that order.
std::vector<GradedBlock> degree_decomposition(std::uint64_t n, std::uint64_t d);

/// (a+1) |S^{a+1}(V_1)| == n * sum_{k<=a} |S^k(V_1)|.
bool sym_identity_check(std::uint64_t n, std::uint64_t a);

}  // namespace syz::bundle
