#include "syzcert/criteria.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "syzcert/arith.hpp"
#include "syzcert/errors.hpp"

namespace syz::criteria {

using arith::dim_sym;
using arith::h0;
using bundle::PadicExpansion;

namespace {

constexpr std::array<std::pair<Case, std::string_view>, 6> kCaseNames{{
    {Case::P2, "P2"},
    {Case::TwoDigit, "TwoDigit"},
    {Case::LowDegree, "LowDegree"},
    {Case::SmallP, "SmallP"},
    {Case::LargeP, "LargeP"},
    {Case::RemarkCase, "RemarkCase"},
}};

constexpr std::array<std::pair<Relation, std::string_view>, 4> kRelationNames{{
    {Relation::Less, "<"},
    {Relation::LessEq, "<="},
    {Relation::GreaterEq, ">="},
    {Relation::Greater, ">"},
}};

void require_params(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  if (n < 2) throw ParameterError("n = " + std::to_string(n) + " must be at least 2");
  arith::require_prime(p);
  if (d < 1) throw ParameterError("d must be positive");
}

std::string ctx(std::string_view key, std::uint64_t value) {
  return std::string(key) + "=" + std::to_string(value);
}

std::size_t nonzero_digits(const arith::DigitVector& dv) {
  return static_cast<std::size_t>(
      std::count_if(dv.digits.begin(), dv.digits.end(), [](auto a) { return a != 0; }));
}

// a_0 + a_1 p + ... + a_k p^k of the core.
Nat prefix_value(const PadicExpansion& e, std::size_t k) {
  Nat v = 0;
  Nat place = 1;
  for (std::size_t t = 0; t <= k; ++t) {
    v += place * e.digit(t);
    place *= e.p;
  }
  return v;
}

Nat l3_core(std::uint64_t n, const PadicExpansion& e, std::size_t k) {
  Nat v = prefix_value(e, k) * h0(n, e.digit(k + 1));
  for (std::size_t t = k + 2; t <= e.m(); ++t) v *= h0(n, e.digit(t)) - 1;
  return v;
}

Nat r7_core(std::uint64_t n, const PadicExpansion& e, std::size_t k) {
  Nat v = prefix_value(e, k);
  for (std::size_t t = k + 1; t <= e.m(); ++t) v *= dim_sym(n, e.digit(t));
  return v;
}

Nat r6_core(std::uint64_t n, const PadicExpansion& e, std::size_t k) {
  Nat v = prefix_value(e, k);
  for (std::size_t t = k + 1; t <= e.m(); ++t) v *= h0(n, e.digit(t));
  return v;
}

bool r6_applies(std::uint64_t n, const PadicExpansion& e, std::size_t k) {
  if (e.p > n) return false;
  for (std::size_t t = k + 1; t < e.m(); ++t)
    if (e.digit(t) != 1) return false;
  return true;
}

PadicExpansion checked_expansion_for_k(std::uint64_t n, std::uint64_t p, std::uint64_t d,
                                       std::size_t k) {
  require_params(n, p, d);
  auto e = bundle::expansion(d, p);
  if (e.m() < 2 || k < 1 || k > e.m() - 1)
    throw ParameterError("k = " + std::to_string(k) + " outside [1, m-1] for m = " +
                         std::to_string(e.m()));
  return e;
}

bool all_hold(const std::vector<Obligation>& obs) {
  return std::all_of(obs.begin(), obs.end(), [](const Obligation& o) { return o.holds; });
}

}  // namespace

std::string_view to_string(Case c) {
  for (auto [k, name] : kCaseNames)
    if (k == c) return name;
  return "?";
}

std::optional<Case> case_from_string(std::string_view s) {
  for (auto [k, name] : kCaseNames)
    if (name == s) return k;
  return std::nullopt;
}

std::string_view to_string(Relation r) {
  for (auto [k, name] : kRelationNames)
    if (k == r) return name;
  return "?";
}

std::optional<Relation> relation_from_string(std::string_view s) {
  for (auto [k, name] : kRelationNames)
    if (name == s) return k;
  return std::nullopt;
}

bool evaluate(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::Less: return lhs < rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
  }
  return false;
}

Obligation Obligation::make(std::string name, Rational lhs, Relation rel, Rational rhs,
                            std::optional<std::string> context) {
  Obligation o{std::move(name), std::move(lhs), rel, std::move(rhs), false, std::move(context)};
  o.holds = evaluate(o.lhs, o.rel, o.rhs);
  return o;
}

Rational Obligation::slack() const {
  switch (rel) {
    case Relation::Less:
    case Relation::LessEq: return rhs - lhs;
    case Relation::GreaterEq:
    case Relation::Greater: return lhs - rhs;
  }
  return {};
}

std::size_t Certificate::failed_count() const {
  return static_cast<std::size_t>(std::count_if(
      obligations.begin(), obligations.end(), [](const Obligation& o) { return !o.holds; }));
}

std::vector<Obligation> remark_case_conditions(std::uint64_t n, const PadicExpansion& e) {
  std::vector<Obligation> obs;
  const std::size_t m = e.m();
  const std::uint64_t top = e.digit(m);
  obs.push_back(Obligation::make("remark.dimension", Rational(Int(n)), Relation::GreaterEq,
                                 Rational(Int(m + 1))));
  obs.push_back(Obligation::make("remark.h0_top", Rational(h0(n, top)), Relation::GreaterEq,
                                 Rational(Int(1) + Int(top) * m * n)));
  if (m >= 2) {
    for (std::size_t t = 0; t + 3 <= m; ++t)
      obs.push_back(Obligation::make("remark.digit_order", Rational(Int(e.digit(t))),
                                     Relation::LessEq, Rational(Int(e.digit(t + 1))),
                                     ctx("t", t)));
    obs.push_back(Obligation::make("remark.digit_order", Rational(Int(e.digit(m - 2))),
                                   Relation::Less, Rational(Int(e.digit(m - 1))),
                                   ctx("t", m - 2)));
    obs.push_back(Obligation::make("remark.digit_top", Rational(Int(e.digit(m - 2))),
                                   Relation::LessEq, Rational(Int(top))));
  }
  return obs;
}

StabilityVerdict classify(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  require_params(n, p, d);
  if (n == 2) return StabilityVerdict::stable(Case::P2);

  const auto e = bundle::expansion(d, p);
  if (nonzero_digits(e.core) <= 2) return StabilityVerdict::stable(Case::TwoDigit);

  // n >= d'/p  <=>  n p >= d'
  if (Nat(n) * p >= Nat(e.core_value())) return StabilityVerdict::stable(Case::LowDegree);

  const std::size_t m = e.m();
  auto upper_digits_at_least = [&](std::uint64_t bound) {
    for (std::size_t t = 2; t <= m; ++t)
      if (e.digit(t) < bound) return false;
    return true;
  };
  if (p <= n && upper_digits_at_least(1)) return StabilityVerdict::stable(Case::SmallP);
  if (p >= n && upper_digits_at_least(p - n + 1)) return StabilityVerdict::stable(Case::LargeP);
  if (all_hold(remark_case_conditions(n, e))) return StabilityVerdict::stable(Case::RemarkCase);
  return StabilityVerdict::unknown();
}

std::vector<Obligation> certify_r3_obligations(std::uint64_t n, std::uint64_t p,
                                               std::uint64_t d) {
  require_params(n, p, d);
  std::vector<Obligation> obs;
  obs.reserve(d + 1);
  const Rational bound{Int(n)};
  for (std::uint64_t a = 1; a <= d; ++a) {
    Rational lhs(Int(a) * dim_sym(n, a), h0(n, a) - 1);
    obs.push_back(Obligation::make("r3.A", std::move(lhs), Relation::Less, bound, ctx("a", a)));
  }
  const auto digits = arith::padic_digits(d, p);
  if (digits.size() >= 2) {
    const std::size_t top = digits.size() - 1;
    const std::uint64_t rest =
        d - static_cast<std::uint64_t>(digits.digits[top] * arith::pow(p, top));
    obs.push_back(Obligation::make("r3.B", Rational(Nat(n) * dim_sym(n, rest)), Relation::Less,
                                   Rational(dim_sym(n, d)), ctx("rest", rest)));
  }
  return obs;
}

std::vector<Obligation> certify_cm1_ratio(std::uint64_t n, std::uint64_t a_max) {
  if (n < 2) throw ParameterError("certify_cm1_ratio requires n >= 2");
  std::vector<Obligation> obs;
  obs.reserve(a_max);
  for (std::uint64_t a = 1; a <= a_max; ++a) {
    obs.push_back(Obligation::make("cm1.ratio", Rational(dim_sym(n, a), h0(n, a) - 1),
                                   Relation::GreaterEq, Rational(Int(n), Int(n + a)),
                                   ctx("a", a)));
  }
  return obs;
}

TruncationReport certify_l8_truncations(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  require_params(n, p, d);
  if (d >= p)
    throw CaseNotApplicable("truncation certificate needs d < p (d = " + std::to_string(d) +
                            ", p = " + std::to_string(p) + ")");
  TruncationReport report;
  const auto blocks = bundle::degree_decomposition(n, d);
  const Rational bundle_slope = bundle::syzygy_slope(n, d);
  Int neg_degree = 0;
  Nat rank = 0;
  std::vector<std::string> mismatches;
  for (const auto& b : blocks) {
    neg_degree -= b.degree;
    rank += b.rank;
    const std::uint64_t i0 = b.twist;
    Truncation t{i0, neg_degree, rank, Rational(-neg_degree, rank)};

    report.obligations.push_back(Obligation::make("l8.neg_degree", Rational(neg_degree),
                                                  Relation::GreaterEq, Rational(Int(d)),
                                                  ctx("i0", i0)));
    if (i0 + 1 < d) {
      report.obligations.push_back(Obligation::make("l8.slope", t.slope, Relation::Less,
                                                    bundle_slope, ctx("i0", i0)));
    } else {
      report.obligations.push_back(Obligation::make("l8.full_degree", Rational(neg_degree),
                                                    Relation::LessEq, Rational(Int(d)),
                                                    ctx("i0", i0)));
    }

    Nat closed_form = Nat(i0 + 1) * dim_sym(n, d - i0 - 1);
    if (closed_form != Nat(neg_degree))
      mismatches.push_back("i0=" + std::to_string(i0) + ": closed form " + closed_form.str() +
                           " vs block sum " + neg_degree.str());
    report.truncations.push_back(std::move(t));
  }
  if (!mismatches.empty()) {
    std::string note =
        "closed form (i0+1)|S^(d-i0-1)(V_1)| disagrees with the direct block sum; "
        "only the block sum is asserted:";
    for (const auto& s : mismatches) note += " " + s + ";";
    report.notes.push_back(std::move(note));
  }
  report.all_hold = all_hold(report.obligations);
  return report;
}

Nat bound_l3(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::size_t k) {
  auto e = checked_expansion_for_k(n, p, d, k);
  return l3_core(n, e, k) * arith::pow(p, e.valuation);
}

Nat bound_r7(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::size_t k) {
  auto e = checked_expansion_for_k(n, p, d, k);
  return r7_core(n, e, k) * arith::pow(p, e.valuation);
}

Nat bound_r6(std::uint64_t n, std::uint64_t p, std::uint64_t d, std::size_t k) {
  auto e = checked_expansion_for_k(n, p, d, k);
  if (!r6_applies(n, e, k))
    throw CaseNotApplicable("full-h0 bound needs p <= n and a_{k+1} = ... = a_{m-1} = 1");
  return r6_core(n, e, k) * arith::pow(p, e.valuation);
}

Certificate certify_case(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  require_params(n, p, d);
  Certificate cert;
  cert.n = n;
  cert.p = p;
  cert.d = d;
  cert.expansion = bundle::expansion(d, p);
  cert.matched_case = classify(n, p, d).stable_case;

  const std::uint64_t core = cert.expansion.core_value();
  const PadicExpansion e = bundle::expansion(core, p);
  const std::size_t m = e.m();
  const Rational core_r{Int(core)};
  if (cert.expansion.valuation > 0) {
    cert.notes.push_back("obligations are evaluated on the core d' = " + std::to_string(core) +
                         "; -deg W >= p^" + std::to_string(cert.expansion.valuation) +
                         " (-deg W_1) lifts them to d");
  }

  auto& obs = cert.obligations;
  auto append = [&obs](std::vector<Obligation> more) {
    obs.insert(obs.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  };

  if (!cert.matched_case) {
    cert.notes.push_back("no theorem case matches; stability is not decided");
  } else {
    switch (*cert.matched_case) {
      case Case::P2:
        cert.notes.push_back("n = 2: stable for every d; no numeric obligations");
        break;
      case Case::TwoDigit:
        append(certify_r3_obligations(n, p, core));
        if (m == 0) cert.notes.push_back("single-digit core: d = a p^i");
        break;
      case Case::SmallP:
        append(certify_r3_obligations(n, p, core));
        for (std::size_t k = 1; k + 1 <= m; ++k) {
          Nat bound = l3_core(n, e, k);
          if (r6_applies(n, e, k)) bound = std::max(bound, r6_core(n, e, k));
          obs.push_back(Obligation::make("small_p.k_bound", Rational(bound),
                                         Relation::GreaterEq, core_r, ctx("k", k)));
        }
        break;
      case Case::LargeP:
        append(certify_r3_obligations(n, p, core));
        obs.push_back(Obligation::make("large_p.h0_top", Rational(h0(n, e.digit(m))),
                                       Relation::GreaterEq,
                                       Rational(Int(p + 1) * e.digit(m))));
        for (std::size_t k = 1; k + 1 <= m; ++k)
          obs.push_back(Obligation::make("large_p.k_bound", Rational(l3_core(n, e, k)),
                                         Relation::GreaterEq, core_r, ctx("k", k)));
        break;
      case Case::LowDegree:
        append(certify_r3_obligations(n, p, core));
        for (std::size_t k = 1; k + 1 <= m; ++k)
          obs.push_back(Obligation::make("low_degree.k_bound", Rational(r7_core(n, e, k)),
                                         Relation::Greater, core_r, ctx("k", k)));
        break;
      case Case::RemarkCase:
        append(remark_case_conditions(n, e));
        break;
    }
  }

  cert.all_hold = all_hold(obs);
  if (cert.matched_case && cert.all_hold) {
    cert.verdict = StabilityVerdict::stable(*cert.matched_case);
  } else {
    cert.verdict = StabilityVerdict::unknown();
    if (cert.matched_case)
      cert.notes.push_back("case " + std::string(to_string(*cert.matched_case)) +
                           " matched but " + std::to_string(cert.failed_count()) +
                           " obligation(s) failed");
  }
  return cert;
}

MuMaxBounds mu_max_bounds(std::uint64_t n, std::uint64_t d) {
  if (n < 2) throw ParameterError("mu_max_bounds requires n >= 2");
  if (d < 1) throw ParameterError("d must be positive");
  return {Rational(Int(d), bundle::syzygy_rank(n, d)),
          Rational(Int(d), dim_sym(n, arith::ceil_half(d)))};
}

std::vector<Obligation> mu_max_proof_check(std::uint64_t n, std::uint64_t p, std::uint64_t d) {
  require_params(n, p, d);
  const auto digits = arith::padic_digits(d, p);
  const std::size_t top = digits.size() - 1;
  const std::uint64_t lead = digits.digits[top];
  const Nat place = arith::pow(p, top);
  const std::uint64_t half = arith::ceil_half(d);

  std::vector<Obligation> obs;
  obs.push_back(Obligation::make("mu_max.top_term", Rational(Nat(lead) * place),
                                 Relation::GreaterEq, Rational(Int(half))));
  Nat sum = 0;
  for (std::uint64_t i = 0; i < lead; ++i)
    sum += dim_sym(n, static_cast<std::uint64_t>((lead - i) * place));
  obs.push_back(Obligation::make("mu_max.dim_sum", Rational(sum), Relation::GreaterEq,
                                 Rational(dim_sym(n, half))));
  return obs;
}

CurveStats curve_syzygy_stats(std::uint64_t genus, std::uint64_t deg_line) {
  if (genus < 2) throw HypothesisViolation("curve genus must be at least 2");
  if (deg_line <= 2 * genus)
    throw HypothesisViolation("deg L = " + std::to_string(deg_line) + " must exceed 2g = " +
                              std::to_string(2 * genus));
  CurveStats s;
  s.genus = genus;
  s.deg_line = deg_line;
  s.rank = deg_line - genus;
  s.deg_dual = deg_line;
  s.slope_dual = Rational(Int(deg_line), Int(s.rank));
  if (s.slope_dual >= Rational(2)) throw Error("dual syzygy slope is not below 2");
  return s;
}

}  // namespace syz::criteria
