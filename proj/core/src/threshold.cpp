#include <algorithm>
#include <string>

#include "syzcert/arith.hpp"
#include "syzcert/criteria.hpp"
#include "syzcert/errors.hpp"

namespace syz::criteria {

namespace {

void validate(const ThresholdQuery& q) {
  if (q.n < 2) throw ParameterError("threshold requires n >= 2");
  if (q.r < 2) throw ParameterError("threshold requires rank r >= 2");
  if (q.hn < 1) throw ParameterError("threshold requires H^n >= 1");
  if (q.horizon < 2) throw ParameterError("threshold requires horizon >= 2");
}

// (r-1)/r * disc + 1/(r (r-1) H^n)
Rational degree_floor(const ThresholdQuery& q) {
  const Int r(q.r);
  return Rational(r - 1, r) * q.disc + Rational(Int(1), r * (r - 1) * q.hn);
}

// H^n max{(r^2-1)/4, 1} + 1
Rational ratio_floor(const ThresholdQuery& q) {
  const Int r(q.r);
  Rational spread = std::max(Rational(r * r - 1, Int(4)), Rational(1));
  return Rational(Int(q.hn)) * spread + Rational(1);
}

}  // namespace

Rational threshold_ratio(std::uint64_t n, std::uint64_t d) {
  if (d < 1) throw ParameterError("d must be positive");
  if (n == 2) return Rational(arith::binom(d + n, static_cast<std::int64_t>(d)) - 1, Int(d));
  return Rational(arith::dim_sym(n, arith::ceil_half(d)), Int(d));
}

bool threshold_passes(const ThresholdQuery& q, std::uint64_t d) {
  validate(q);
  return Rational(Int(d)) > degree_floor(q) && threshold_ratio(q.n, d) > ratio_floor(q);
}

ThresholdResult restriction_threshold(const ThresholdQuery& q) {
  validate(q);
  const Rational deg_floor = degree_floor(q);
  const Rational rat_floor = ratio_floor(q);

  ThresholdResult result;
  std::vector<Rational> ratio{Rational()};  // 1-based
  std::uint64_t last_fail = 0;
  for (std::uint64_t e = 1; e <= q.scan_limit; ++e) {
    ratio.push_back(threshold_ratio(q.n, e));
    const bool pass = Rational(Int(e)) > deg_floor && ratio[e] > rat_floor;
    result.evidence.emplace_back(e, pass);
    if (pass && result.first_pass == 0) result.first_pass = e;
    if (!pass) last_fail = e;
    if (e <= q.horizon) continue;

    // Candidate d = e - horizon: window [d, e] all passing, and both parity
    // subsequences of the ratio nondecreasing at the window end.
    const std::uint64_t d = e - q.horizon;
    if (last_fail >= d) continue;
    auto nondecreasing = [&](std::uint64_t hi) { return hi < 3 || ratio[hi] >= ratio[hi - 2]; };
    if (nondecreasing(e) && nondecreasing(e - 1)) {
      result.stable_from = d;
      return result;
    }
  }
  throw ScanLimitExceeded(q.scan_limit);
}

}  // namespace syz::criteria
