#include "syzcert/bundle_model.hpp"

#include <string>

#include "syzcert/errors.hpp"

namespace syz::bundle {

namespace {

void require_n(std::uint64_t n) {
  if (n < 2) throw ParameterError("n = " + std::to_string(n) + " must be at least 2");
}

void require_d(std::uint64_t d) {
  if (d < 1) throw ParameterError("d must be positive");
}

}  // namespace

Nat PadicExpansion::value() const { return Nat(core_value()) * arith::pow(p, valuation); }

PadicExpansion expansion(std::uint64_t d, std::uint64_t p) {
  require_d(d);
  arith::require_prime(p);
  PadicExpansion e;
  e.p = p;
  while (d % p == 0) {
    d /= p;
    ++e.valuation;
  }
  e.core = arith::padic_digits(d, p);
  return e;
}

Nat syzygy_rank(std::uint64_t n, std::uint64_t d) {
  require_n(n);
  require_d(d);
  return arith::h0(n, d) - 1;
}

Rational syzygy_slope(std::uint64_t n, std::uint64_t d) {
  return Rational(-Int(d), syzygy_rank(n, d));
}

SyzygyBundle syzygy_bundle(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  arith::require_prime(p);
  SyzygyBundle b;
  b.n = n;
  b.p = p;
  b.d = d;
  b.rank = syzygy_rank(n, d);
  b.degree = -Int(d);
  b.slope = Rational(b.degree, b.rank);
  return b;
}

Rational block_slope(std::uint64_t n, std::uint64_t e, std::uint64_t i) {
  require_n(n);
  return Rational(Int(i)) - Rational(Int(e), Int(n));
}

Rational frobenius_slope_scale(const Rational& s, std::uint64_t t, std::uint64_t p) {
  arith::require_prime(p);
  return s * Rational(arith::pow(p, t));
}

std::vector<GradedBlock> degree_decomposition(std::uint64_t n, std::uint64_t d) {
  require_n(n);
  require_d(d);
  std::vector<GradedBlock> blocks;
  blocks.reserve(d);
  for (std::uint64_t i = 0; i < d; ++i) {
    GradedBlock b;
    b.twist = i;
    b.inner_degree = d - i;
    b.rank = arith::dim_sym(n, b.inner_degree);
    b.slope = block_slope(n, b.inner_degree, i);
    Rational deg = b.slope * Rational(b.rank);
    // n divides e * |S^e(V_1)| by the telescoping identity.
    if (!deg.is_integer()) throw Error("block degree is not integral");
    b.degree = deg.num();
    blocks.push_back(std::move(b));
  }
  return blocks;
}

bool sym_identity_check(std::uint64_t n, std::uint64_t a) {
  if (n < 1) throw ParameterError("sym_identity_check requires n >= 1");
  Nat partial = 0;
  for (std::uint64_t k = 0; k <= a; ++k) partial += arith::dim_sym(n, k);
  return Nat(a + 1) * arith::dim_sym(n, a + 1) == Nat(n) * partial;
}

}  // namespace syz::bundle
