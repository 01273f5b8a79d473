#pragma once

// Case classifier and certificate engine for the semistability of V_d on P^n
// in characteristic p. A certificate is a list of exact inequalities; the
// verdict is Stable only when a theorem case matches and every one holds.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syzcert/bundle_model.hpp"
#include "syzcert/rational.hpp"

namespace syz::criteria {

/// Theorem cases, in the order classify() tries them.
enum class Case { P2, TwoDigit, LowDegree, SmallP, LargeP, RemarkCase };

std::string_view to_string(Case c);
std::optional<Case> case_from_string(std::string_view s);

struct StabilityVerdict {
  std::optional<Case> stable_case;  ///< empty means Unknown

  bool is_stable() const noexcept { return stable_case.has_value(); }
  static StabilityVerdict unknown() { return {}; }
  static StabilityVerdict stable(Case c) { return {c}; }
  friend bool operator==(const StabilityVerdict&, const StabilityVerdict&) = default;
};

enum class Relation { Less, LessEq, GreaterEq, Greater };

std::string_view to_string(Relation r);
std::optional<Relation> relation_from_string(std::string_view s);
bool evaluate(const Rational& lhs, Relation rel, const Rational& rhs);

struct Obligation {
  std::string name;
  Rational lhs;
  Relation rel = Relation::Less;
  Rational rhs;
  bool holds = false;
  std::optional<std::string> context;

  /// holds is computed from the exact comparison.
  static Obligation make(std::string name, Rational lhs, Relation rel, Rational rhs,
                         std::optional<std::string> context = std::nullopt);

  /// Non-negative exactly when the obligation holds (strict relations need > 0).
  Rational slack() const;

  friend bool operator==(const Obligation&, const Obligation&) = default;
};

struct Certificate {
  std::uint64_t n = 2;
  std::uint64_t p = 2;
  std::uint64_t d = 1;
  bundle::PadicExpansion expansion;
  std::optional<Case> matched_case;  ///< what classify() found
  StabilityVerdict verdict;          ///< Stable only if matched and all_hold
  std::vector<Obligation> obligations;
  bool all_hold = true;
  std::vector<std::string> notes;

  std::size_t failed_count() const;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

StabilityVerdict classify(std::uint64_t n, std::uint64_t p, std::uint64_t d);

/// The three hypotheses of the extra (remark) case, as obligations on the
/// core digits. Shared by classify() and certify_case().
std::vector<Obligation> remark_case_conditions(std::uint64_t n,
                                               const bundle::PadicExpansion& e);

/// A_a for a in [1, d] and, when d has two or more p-adic digits, B.
std::vector<Obligation> certify_r3_obligations(std::uint64_t n, std::uint64_t p,
                                               std::uint64_t d);

/// |S^a(V_1)| / rank V_a >= n / (n + a) for a in [1, a_max].
std::vector<Obligation> certify_cm1_ratio(std::uint64_t n, std::uint64_t a_max);

struct Truncation {
  std::uint64_t top_twist = 0;  ///< W = (+)_{j <= top_twist} S^{d-j}(V_1) z^j
  Int neg_degree;
  Nat rank;
  Rational slope;
};

struct TruncationReport {
  std::vector<Truncation> truncations;
  std::vector<Obligation> obligations;
  std::vector<std::string> notes;
  bool all_hold = true;
};

/// Exact degrees of the truncation subbundles when d < p.
/// Throws CaseNotApplicable when d >= p.
TruncationReport certify_l8_truncations(std::uint64_t n, std::uint64_t p, std::uint64_t d);

/// Lower bounds on -deg W, indexed by k in [1, m-1] of the core expansion,
/// scaled by p^valuation. Throw ParameterError when k is out of range.
Nat bound_l3(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::size_t k);
Nat bound_r7(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::size_t k);
/// Additionally throws CaseNotApplicable unless p <= n and a_{k+1..m-1} = 1.
Nat bound_r6(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::size_t k);

Certificate certify_case(std::uint64_t n, std::uint64_t p, std::uint64_t d);

struct MuMaxBounds {
  Rational lower;
  Rational upper;
};

MuMaxBounds mu_max_bounds(std::uint64_t n, std::uint64_t d);
std::vector<Obligation> mu_max_proof_check(std::uint64_t n, std::uint64_t p, std::uint64_t d);

struct ThresholdQuery {
  std::uint64_t n = 2;
  std::uint64_t r = 2;
  std::uint64_t hn = 1;       ///< H^n
  Rational disc;              ///< Delta(E) H^{n-2}
  std::uint64_t horizon = 10;
  std::uint64_t scan_limit = 100'000;
};

struct ThresholdResult {
  std::uint64_t first_pass = 0;
  std::uint64_t stable_from = 0;
  std::vector<std::pair<std::uint64_t, bool>> evidence;  ///< d = 1 .. stable_from + horizon
};

/// Both degree conditions for restricting a rank-r semistable sheaf to a very
/// general hypersurface of degree d.
bool threshold_passes(const ThresholdQuery& q, std::uint64_t d);
/// The dimension ratio compared against H^n max{(r^2-1)/4, 1} + 1.
Rational threshold_ratio(std::uint64_t n, std::uint64_t d);

/// Throws ParameterError on bad input and ScanLimitExceeded when no stable
/// degree exists with d + horizon <= scan_limit.
ThresholdResult restriction_threshold(const ThresholdQuery& q);

struct CurveStats {
  std::uint64_t genus = 2;
  std::uint64_t deg_line = 5;
  std::uint64_t rank = 3;
  std::uint64_t deg_dual = 5;
  Rational slope_dual;
};

/// Throws HypothesisViolation unless g >= 2 and deg L > 2g.
CurveStats curve_syzygy_stats(std::uint64_t genus, std::uint64_t deg_line);

}  // namespace syz::criteria
