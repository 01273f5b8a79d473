#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "syzcert/arith.hpp"
#include "syzcert/bundle_model.hpp"
#include "syzcert/criteria.hpp"
#include "syzcert/errors.hpp"

using namespace syz;
using namespace syz::criteria;
using oracle::Big;

namespace {

Rational q(long long a, long long b) { return Rational(Int(a), Int(b)); }

std::vector<std::uint64_t> core_digits(std::uint64_t d, std::uint64_t p, std::uint64_t* val) {
  *val = 0;
  while (d % p == 0) d /= p, ++*val;
  return oracle::digits(d, p);
}

Big h(std::uint64_t n, std::uint64_t t) { return oracle::choose(t + n, n); }
Big sym(std::uint64_t n, std::uint64_t t) { return oracle::choose(t + n - 1, n - 1); }

// The three k-indexed lower bounds straight from their product formulas.
enum class Kind { L3, R7, R6 };
Big bound(Kind kind, std::uint64_t n, std::uint64_t p, std::uint64_t d, std::size_t k) {
  std::uint64_t val;
  const auto a = core_digits(d, p, &val);
  const std::size_t m = a.size() - 1;
  Big head = 0, place = 1;
  for (std::size_t t = 0; t <= k; ++t, place *= p) head += Big(a[t]) * place;
  Big prod = 1;
  for (std::size_t t = k + 1; t <= m; ++t) {
    switch (kind) {
      case Kind::L3: prod *= t == k + 1 ? h(n, a[t]) : h(n, a[t]) - 1; break;
      case Kind::R7: prod *= sym(n, a[t]); break;
      case Kind::R6: prod *= h(n, a[t]); break;
    }
  }
  Big scale = 1;
  for (std::uint64_t v = 0; v < val; ++v) scale *= p;
  return head * prod * scale;
}

const Obligation* find(const Certificate& c, const std::string& name,
                       const std::string& context = "") {
  for (const auto& o : c.obligations)
    if (o.name == name && (context.empty() || o.context == context)) return &o;
  return nullptr;
}

bool recheck(const Obligation& o) {
  switch (o.rel) {
    case Relation::Less: return o.lhs < o.rhs;
    case Relation::LessEq: return o.lhs <= o.rhs;
    case Relation::GreaterEq: return o.lhs >= o.rhs;
    case Relation::Greater: return o.lhs > o.rhs;
  }
  return false;
}

}  // namespace

TEST(Names, RoundTrip) {
  for (auto c : {Case::P2, Case::TwoDigit, Case::LowDegree, Case::SmallP, Case::LargeP,
                 Case::RemarkCase})
    EXPECT_EQ(case_from_string(to_string(c)), c);
  EXPECT_FALSE(case_from_string("Stable").has_value());
  for (auto r : {Relation::Less, Relation::LessEq, Relation::GreaterEq, Relation::Greater})
    EXPECT_EQ(relation_from_string(to_string(r)), r);
  EXPECT_FALSE(relation_from_string("=").has_value());
}

TEST(Obligation, HoldsAndSlack) {
  auto o = Obligation::make("x", Rational(3), Relation::Less, Rational(3));
  EXPECT_FALSE(o.holds);
  o = Obligation::make("x", Rational(3), Relation::LessEq, Rational(3));
  EXPECT_TRUE(o.holds);
  EXPECT_EQ(o.slack(), Rational(0));
  o = Obligation::make("x", q(252, 119), Relation::Less, Rational(3));
  EXPECT_TRUE(o.holds);
  EXPECT_EQ(o.slack(), Rational(3) - q(252, 119));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(2, 5, 9), StabilityVerdict::stable(Case::P2));
  EXPECT_EQ(classify(3, 3, 19), StabilityVerdict::stable(Case::TwoDigit));
  EXPECT_EQ(classify(5, 3, 13), StabilityVerdict::stable(Case::LowDegree));
  EXPECT_EQ(classify(3, 2, 7), StabilityVerdict::stable(Case::SmallP));
  EXPECT_EQ(classify(3, 7, 449), StabilityVerdict::unknown());
  EXPECT_EQ(classify(3, 5, 81), StabilityVerdict::stable(Case::LargeP));
}

TEST(Classify, ParameterErrors) {
  EXPECT_THROW(classify(1, 2, 7), ParameterError);
  EXPECT_THROW(classify(3, 4, 7), ParameterError);
  EXPECT_THROW(classify(3, 2, 0), ParameterError);
}

TEST(Classify, AgreesWithIndependentConditionCheck) {
  for (std::uint64_t n = 2; n <= 6; ++n)
    for (std::uint64_t p : {2, 3, 5, 7, 11})
      for (std::uint64_t d = 1; d <= 400; ++d) {
        const auto v = classify(n, p, d);
        const std::string want = oracle::first_case(n, p, d);
        const std::string got = v.is_stable() ? std::string(to_string(*v.stable_case)) : "";
        ASSERT_EQ(got, want) << n << " " << p << " " << d;
      }
}

TEST(Classify, ValuationIsStripped) {
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t d = 1; d <= 60; ++d)
      for (std::uint64_t n = 3; n <= 5; ++n) EXPECT_EQ(classify(n, p, d), classify(n, p, d * p));
}

TEST(SlopeRatio, Examples) {
  auto obs = certify_r3_obligations(3, 2, 7);
  ASSERT_EQ(obs.size(), 8u);
  EXPECT_EQ(obs[6].name, "r3.A");
  EXPECT_EQ(obs[6].lhs, q(252, 119));
  EXPECT_EQ(obs[6].rhs, Rational(3));
  EXPECT_TRUE(obs[6].holds);
  EXPECT_EQ(obs[7].name, "r3.B");
  EXPECT_EQ(obs[7].lhs, Rational(30));
  EXPECT_EQ(obs[7].rhs, Rational(36));
  EXPECT_TRUE(obs[7].holds);

  obs = certify_r3_obligations(2, 3, 5);
  EXPECT_EQ(obs[4].lhs, q(30, 20));
  EXPECT_TRUE(obs[4].holds);

  obs = certify_r3_obligations(3, 5, 1);
  ASSERT_EQ(obs.size(), 1u);
  EXPECT_EQ(obs[0].lhs, Rational(1));
  EXPECT_TRUE(obs[0].holds);
}

// Every A_a holds, and B holds for n >= 3. On the line B reads
// 2 (rest + 1) < d + 1, which is an equality exactly when d = 2 p^m - 1
// (top digit 1, every lower digit p - 1).
TEST(SlopeRatio, SweepHoldsExceptTightLineCase) {
  for (std::uint64_t n = 2; n <= 5; ++n)
    for (std::uint64_t p : {2, 3, 5, 7})
      for (std::uint64_t d = 1; d <= 300; ++d) {
        const auto a = oracle::digits(d, p);
        bool tight = n == 2 && a.size() >= 2 && a.back() == 1;
        for (std::size_t t = 0; t + 1 < a.size(); ++t) tight = tight && a[t] == p - 1;
        for (const auto& o : certify_r3_obligations(n, p, d)) {
          ASSERT_EQ(o.holds, recheck(o));
          const bool expect = !(tight && o.name == "r3.B");
          ASSERT_EQ(o.holds, expect) << o.name << " " << n << " " << p << " " << d;
          if (!expect) ASSERT_EQ(o.lhs, o.rhs);
        }
      }
}

TEST(BlockRatio, Examples) {
  auto obs = certify_cm1_ratio(3, 2);
  EXPECT_EQ(obs[1].lhs, q(6, 9));
  EXPECT_EQ(obs[1].rhs, q(3, 5));
  EXPECT_EQ(obs[0].lhs, Rational(1));
  EXPECT_EQ(obs[0].rhs, q(3, 4));
  obs = certify_cm1_ratio(4, 5);
  EXPECT_EQ(obs[4].lhs, q(56, 125));
  EXPECT_EQ(obs[4].rhs, q(4, 9));
  EXPECT_TRUE(obs[4].holds);
  EXPECT_THROW(certify_cm1_ratio(1, 3), ParameterError);
}

TEST(BlockRatio, SweepHolds) {
  for (std::uint64_t n = 2; n <= 5; ++n) {
    const auto obs = certify_cm1_ratio(n, 200);
    ASSERT_EQ(obs.size(), 200u);
    for (std::uint64_t a = 1; a <= 200; ++a) {
      const auto& o = obs[a - 1];
      ASSERT_EQ(o.context, "a=" + std::to_string(a));
      ASSERT_TRUE(o.holds);
      ASSERT_EQ(o.lhs, Rational(sym(n, a), h(n, a) - 1));
      ASSERT_EQ(o.rhs, Rational(Int(n), Int(n + a)));
    }
  }
}

TEST(Truncation, Examples) {
  auto rep = certify_l8_truncations(3, 5, 3);
  ASSERT_EQ(rep.truncations.size(), 3u);
  EXPECT_EQ(rep.truncations[0].neg_degree, 10);
  EXPECT_EQ(rep.truncations[1].neg_degree, 8);
  EXPECT_EQ(rep.truncations[2].neg_degree, 3);
  EXPECT_TRUE(rep.all_hold);
  // The displayed closed form gives 6 at i0 = 0; the report flags it.
  ASSERT_FALSE(rep.notes.empty());
  EXPECT_NE(rep.notes[0].find("i0=0: closed form 6 vs block sum 10"), std::string::npos);

  rep = certify_l8_truncations(3, 5, 1);
  ASSERT_EQ(rep.truncations.size(), 1u);
  EXPECT_EQ(rep.truncations[0].neg_degree, 1);

  rep = certify_l8_truncations(2, 7, 4);
  EXPECT_EQ(rep.truncations[0].neg_degree, 10);
  EXPECT_TRUE(rep.all_hold);
}

TEST(Truncation, NotApplicableAtOrAboveP) {
  EXPECT_THROW(certify_l8_truncations(3, 5, 5), CaseNotApplicable);
  EXPECT_THROW(certify_l8_truncations(3, 5, 9), CaseNotApplicable);
}

TEST(Truncation, DegreesMatchBlockSums) {
  for (std::uint64_t n = 2; n <= 5; ++n)
    for (std::uint64_t p : {5, 7, 11, 13})
      for (std::uint64_t d = 1; d < p; ++d) {
        const auto rep = certify_l8_truncations(n, p, d);
        ASSERT_TRUE(rep.all_hold);
        Big neg = 0;
        for (std::uint64_t i0 = 0; i0 < d; ++i0) {
          // -deg of S^e(V_1) z^i is (e/n - i) |S^e|; e |S^e| is divisible by n.
          const std::uint64_t e = d - i0;
          neg += sym(n, e) * e / n - Big(i0) * sym(n, e);
          ASSERT_EQ(rep.truncations[i0].neg_degree, Int(neg));
        }
        ASSERT_EQ(rep.truncations.back().neg_degree, Int(d));
      }
}

TEST(Bounds, Examples) {
  EXPECT_EQ(bound_l3(5, 3, 13, 1), 24);
  EXPECT_EQ(bound_l3(3, 5, 81, 1), 120);
  EXPECT_EQ(bound_l3(3, 2, 7, 1), 12);
  EXPECT_EQ(bound_r7(5, 3, 13, 1), 20);
  EXPECT_EQ(bound_r7(3, 2, 7, 1), 9);
  EXPECT_EQ(bound_r7(3, 5, 81, 1), 60);
  EXPECT_EQ(bound_r6(3, 2, 7, 1), 12);
  EXPECT_EQ(bound_r6(3, 2, 15, 1), 48);
  EXPECT_EQ(bound_r6(4, 2, 7, 1), 15);
}

TEST(Bounds, AgreeWithProductFormulas) {
  for (std::uint64_t n = 2; n <= 5; ++n)
    for (std::uint64_t p : {2, 3, 5})
      for (std::uint64_t d = 1; d <= 300; ++d) {
        std::uint64_t val;
        const auto a = core_digits(d, p, &val);
        for (std::size_t k = 1; k + 1 < a.size(); ++k) {
          ASSERT_EQ(bound_l3(n, p, d, k), bound(Kind::L3, n, p, d, k));
          ASSERT_EQ(bound_r7(n, p, d, k), bound(Kind::R7, n, p, d, k));
          bool valid = p <= n;
          for (std::size_t t = k + 1; t + 1 < a.size(); ++t) valid = valid && a[t] == 1;
          if (valid)
            ASSERT_EQ(bound_r6(n, p, d, k), bound(Kind::R6, n, p, d, k));
          else
            ASSERT_THROW(bound_r6(n, p, d, k), CaseNotApplicable);
        }
      }
}

TEST(Bounds, KOutOfRange) {
  EXPECT_THROW(bound_l3(3, 2, 7, 0), ParameterError);
  EXPECT_THROW(bound_l3(3, 2, 7, 2), ParameterError);
  EXPECT_THROW(bound_r7(3, 2, 3, 1), ParameterError);
  EXPECT_THROW(bound_r6(3, 3, 19, 2), ParameterError);
  EXPECT_THROW(bound_r6(2, 3, 13, 1), CaseNotApplicable);
}

TEST(CertifyCase, Golden) {
  auto c = certify_case(3, 2, 7);
  EXPECT_EQ(c.verdict, StabilityVerdict::stable(Case::SmallP));
  EXPECT_TRUE(c.all_hold);
  for (int a = 1; a <= 7; ++a) EXPECT_NE(find(c, "r3.A", "a=" + std::to_string(a)), nullptr);
  EXPECT_NE(find(c, "r3.B"), nullptr);
  auto* k = find(c, "small_p.k_bound", "k=1");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(k->lhs, Rational(12));
  EXPECT_EQ(k->rhs, Rational(7));

  c = certify_case(5, 3, 13);
  EXPECT_EQ(c.verdict, StabilityVerdict::stable(Case::LowDegree));
  k = find(c, "low_degree.k_bound", "k=1");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(k->lhs, Rational(20));
  EXPECT_EQ(k->rel, Relation::Greater);
  EXPECT_EQ(k->rhs, Rational(13));

  c = certify_case(3, 5, 81);
  EXPECT_EQ(c.verdict, StabilityVerdict::stable(Case::LargeP));
  k = find(c, "large_p.h0_top");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(k->lhs, Rational(20));
  EXPECT_EQ(k->rhs, Rational(18));
  k = find(c, "large_p.k_bound", "k=1");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(k->lhs, Rational(120));
  EXPECT_EQ(k->rhs, Rational(81));

  c = certify_case(3, 3, 19);
  EXPECT_EQ(c.verdict, StabilityVerdict::stable(Case::TwoDigit));
  EXPECT_TRUE(c.all_hold);

  c = certify_case(3, 7, 449);
  EXPECT_FALSE(c.verdict.is_stable());
  EXPECT_FALSE(c.matched_case.has_value());
  EXPECT_FALSE(c.notes.empty());

  c = certify_case(2, 5, 9);
  EXPECT_EQ(c.verdict, StabilityVerdict::stable(Case::P2));
  EXPECT_TRUE(c.obligations.empty());
}

TEST(CertifyCase, ValuationScalesToCore) {
  const auto c = certify_case(3, 2, 28);  // 28 = 7 * 4
  EXPECT_EQ(c.expansion.valuation, 2u);
  EXPECT_EQ(c.verdict, StabilityVerdict::stable(Case::SmallP));
  auto* k = find(c, "small_p.k_bound", "k=1");
  ASSERT_NE(k, nullptr);
  EXPECT_EQ(k->rhs, Rational(7));
}

TEST(CertifyCase, CertificateInvariants) {
  for (std::uint64_t n = 2; n <= 5; ++n)
    for (std::uint64_t p : {2, 3, 5, 7})
      for (std::uint64_t d = 1; d <= 150; ++d) {
        const auto c = certify_case(n, p, d);
        bool all = true;
        for (const auto& o : c.obligations) {
          ASSERT_EQ(o.holds, recheck(o)) << o.name;
          all = all && o.holds;
        }
        ASSERT_EQ(c.all_hold, all);
        ASSERT_EQ(c.failed_count() == 0, all);
        ASSERT_EQ(c.matched_case, classify(n, p, d).stable_case);
        ASSERT_EQ(c.verdict.is_stable(), c.matched_case.has_value() && all);
        if (c.verdict.is_stable()) ASSERT_EQ(c.verdict.stable_case, c.matched_case);
        if (c.matched_case && !all) ASSERT_FALSE(c.notes.empty());
      }
}

TEST(MuMax, Examples) {
  auto b = mu_max_bounds(3, 4);
  EXPECT_EQ(b.lower, q(2, 17));
  EXPECT_EQ(b.upper, q(2, 3));
  b = mu_max_bounds(3, 7);
  EXPECT_EQ(b.lower, q(7, 119));
  EXPECT_EQ(b.upper, q(7, 15));
  for (std::uint64_t n = 2; n <= 6; ++n) {
    b = mu_max_bounds(n, 1);
    EXPECT_EQ(b.lower, q(1, n));
    EXPECT_EQ(b.upper, q(1, n));
  }
}

TEST(MuMax, Sandwich) {
  for (std::uint64_t n = 2; n <= 5; ++n)
    for (std::uint64_t d = 1; d <= 300; ++d) {
      const auto b = mu_max_bounds(n, d);
      ASSERT_LE(b.lower, b.upper);
      ASSERT_EQ(b.lower == b.upper, d == 1);
    }
}

TEST(MuMax, ProofCheckExamples) {
  auto obs = mu_max_proof_check(3, 2, 7);
  EXPECT_EQ(obs[0].lhs, Rational(4));
  EXPECT_EQ(obs[0].rhs, Rational(4));
  EXPECT_EQ(obs[1].lhs, Rational(15));
  EXPECT_EQ(obs[1].rhs, Rational(15));
  obs = mu_max_proof_check(3, 3, 19);
  EXPECT_EQ(obs[0].lhs, Rational(18));
  EXPECT_EQ(obs[0].rhs, Rational(10));
  EXPECT_EQ(obs[1].lhs, Rational(245));
  EXPECT_EQ(obs[1].rhs, Rational(66));
  obs = mu_max_proof_check(3, 5, 3);
  EXPECT_EQ(obs[0].lhs, Rational(3));
  EXPECT_EQ(obs[1].lhs, Rational(19));
  EXPECT_EQ(obs[1].rhs, Rational(6));
  for (const auto& o : obs) EXPECT_TRUE(o.holds);
}

TEST(Threshold, Examples) {
  ThresholdQuery qy{3, 2, 1, Rational(2)};
  auto r = restriction_threshold(qy);
  EXPECT_EQ(r.first_pass, 7u);
  EXPECT_EQ(r.stable_from, 9u);
  EXPECT_FALSE(threshold_passes(qy, 8));
  EXPECT_EQ(threshold_ratio(3, 8), q(15, 8));

  r = restriction_threshold({2, 2, 1, Rational(2)});
  EXPECT_EQ(r.stable_from, 2u);

  r = restriction_threshold({3, 3, 1, Rational(0)});
  EXPECT_EQ(r.stable_from, 17u);
  EXPECT_EQ(threshold_ratio(3, 17), q(55, 17));
}

TEST(Threshold, BoundaryRatioExcluded) {
  // d = 3, n = 3: ratio 6/3 = 2 equals the floor for r = 2, H^n = 1.
  ThresholdQuery qy{3, 2, 1, Rational(-100)};
  EXPECT_EQ(threshold_ratio(3, 3), Rational(2));
  EXPECT_FALSE(threshold_passes(qy, 3));
}

namespace {

// Scan-from-scratch version of the stable-degree rule.
std::uint64_t brute_stable_from(std::uint64_t n, std::uint64_t r, std::uint64_t hn,
                                std::int64_t dn, std::int64_t dd, std::uint64_t horizon) {
  auto ratio = [&](std::uint64_t d) {
    if (n == 2) return oracle::Frac{(Big(d + 2) * (d + 1)) / 2 - 1, Big(d)};
    return oracle::Frac{oracle::choose((d + 1) / 2 + n - 1, n - 1), Big(d)};
  };
  auto geq = [&](std::uint64_t a, std::uint64_t b) { return !oracle::greater(ratio(b), ratio(a)); };
  for (std::uint64_t d = 1;; ++d) {
    bool ok = true;
    for (std::uint64_t e = d; e <= d + horizon && ok; ++e)
      ok = oracle::threshold_pass(n, r, hn, dn, dd, e);
    const std::uint64_t e = d + horizon;
    if (ok && (e < 3 || geq(e, e - 2)) && (e - 1 < 3 || geq(e - 1, e - 3))) return d;
  }
}

}  // namespace

TEST(Threshold, MatchesBruteForceScan) {
  struct Row {
    std::uint64_t n, r, hn;
    std::int64_t dn, dd;
  };
  for (const Row& row : {Row{3, 2, 1, 2, 1}, Row{2, 2, 1, 2, 1}, Row{3, 3, 1, 0, 1},
                         Row{4, 2, 2, 7, 3}, Row{3, 4, 3, -5, 2}, Row{5, 3, 1, 40, 1},
                         Row{2, 5, 2, 11, 4}}) {
    ThresholdQuery qy{row.n, row.r, row.hn, Rational(Int(row.dn), Int(row.dd))};
    const auto res = restriction_threshold(qy);
    std::uint64_t first = 0;
    for (const auto& [d, pass] : res.evidence) {
      ASSERT_EQ(pass, oracle::threshold_pass(row.n, row.r, row.hn, row.dn, row.dd, d)) << d;
      ASSERT_EQ(pass, threshold_passes(qy, d));
      if (pass && !first) first = d;
    }
    EXPECT_EQ(res.first_pass, first);
    EXPECT_EQ(res.stable_from, brute_stable_from(row.n, row.r, row.hn, row.dn, row.dd, 10));
    EXPECT_EQ(res.evidence.size(), res.stable_from + qy.horizon);
  }
}

TEST(Threshold, StableUnderHorizonGrowth) {
  for (auto qy : {ThresholdQuery{3, 2, 1, Rational(2)}, ThresholdQuery{2, 2, 1, Rational(2)},
                  ThresholdQuery{3, 3, 1, Rational(0)}}) {
    const auto base = restriction_threshold(qy).stable_from;
    for (std::uint64_t h = 10; h <= 60; ++h) {
      qy.horizon = h;
      EXPECT_EQ(restriction_threshold(qy).stable_from, base) << h;
    }
  }
}

TEST(Threshold, Errors) {
  EXPECT_THROW(restriction_threshold({1, 2, 1, Rational(0)}), ParameterError);
  EXPECT_THROW(restriction_threshold({3, 1, 1, Rational(0)}), ParameterError);
  EXPECT_THROW(restriction_threshold({3, 2, 0, Rational(0)}), ParameterError);
  ThresholdQuery qy{3, 2, 1, Rational(0)};
  qy.horizon = 1;
  EXPECT_THROW(restriction_threshold(qy), ParameterError);
  qy = ThresholdQuery{3, 2, 1, Rational(1'000'000)};
  qy.scan_limit = 1000;
  try {
    restriction_threshold(qy);
    FAIL() << "expected scan limit";
  } catch (const ScanLimitExceeded& e) {
    EXPECT_EQ(e.limit(), 1000u);
  }
}

TEST(Curve, Examples) {
  auto s = curve_syzygy_stats(3, 7);
  EXPECT_EQ(s.rank, 4u);
  EXPECT_EQ(s.deg_dual, 7u);
  EXPECT_EQ(s.slope_dual, q(7, 4));
  s = curve_syzygy_stats(2, 5);
  EXPECT_EQ(s.rank, 3u);
  EXPECT_EQ(s.slope_dual, q(5, 3));
  s = curve_syzygy_stats(4, 9);
  EXPECT_EQ(s.rank, 5u);
  EXPECT_EQ(s.slope_dual, q(9, 5));
  EXPECT_LT(s.slope_dual, Rational(2));
}

TEST(Curve, HypothesisViolations) {
  EXPECT_THROW(curve_syzygy_stats(3, 6), HypothesisViolation);
  EXPECT_THROW(curve_syzygy_stats(1, 9), HypothesisViolation);
  for (std::uint64_t g = 2; g <= 20; ++g)
    for (std::uint64_t deg = 2 * g + 1; deg <= 2 * g + 30; ++deg)
      ASSERT_LT(curve_syzygy_stats(g, deg).slope_dual, Rational(2));
}
