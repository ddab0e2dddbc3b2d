#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "helly/errors.hpp"
#include "helly/report.hpp"
#include "helly/transversal_sweep.hpp"
#include "helly/transversal_verify.hpp"

using namespace helly;

namespace {

ConvexPolygon square(Rational x, Rational y, Rational s = 1) {
  return ConvexPolygon({{x, y}, {x + s, y}, {x + s, y + s}, {x, y + s}});
}

ConvexPolygon regular(int n, std::int64_t r, std::int64_t cx, std::int64_t cy) {
  std::vector<RationalPoint> v;
  for (int k = 0; k < n; ++k) {
    const double a = 2 * std::numbers::pi * k / n;
    v.push_back({Rational(cx) + Rational(std::llround(r * std::cos(a))),
                 Rational(cy) + Rational(std::llround(r * std::sin(a)))});
  }
  return ConvexPolygon(std::move(v));
}

bool contains(const std::vector<int>& sub, std::initializer_list<int> need) {
  return std::all_of(need.begin(), need.end(),
                     [&](int i) { return std::find(sub.begin(), sub.end(), i) != sub.end(); });
}

std::string text(const PlaneSweepReport& r) { return dump(to_json(r)); }

}  // namespace

TEST(PlaneStatement, TagsRoundTrip) {
  for (const char* tag : {"lemma-311", "lemma-312", "lemma-313", "thm-321"}) {
    EXPECT_EQ(to_string(parse_plane_statement(tag)), tag);
  }
  EXPECT_THROW(parse_plane_statement("lemma-314"), ContractViolation);
  EXPECT_EQ(grassmannian_betti(1, 2), (std::pair{0, 1}));
  EXPECT_EQ(grassmannian_betti(0, 1), (std::pair{0, 0}));
  EXPECT_FALSE(grassmannian_betti(2, 4).has_value());
}

TEST(SingleSet, ShapesGiveTheFullCircle) {
  const ConvexPolygon thin({{Rational(0), Rational(0)}, {Rational(1000), Rational(0)}, {Rational(500), Rational(1, 1000)}});
  for (const auto& p : {square(0, 0), regular(12, 1000, 0, 0), thin}) {
    const TransversalVerdict v = verify_single_set(PolygonFamily({p}));
    EXPECT_TRUE(v.hypotheses_hold);
    EXPECT_TRUE(v.conclusion_holds);
    EXPECT_TRUE(v.summary.full_circle);
    EXPECT_EQ(v.expected_betti, (std::pair{0, 1}));
  }
  EXPECT_THROW(verify_single_set(PolygonFamily({square(0, 0), square(3, 0)})), ContractViolation);
}

TEST(DisjointPair, OneArc) {
  for (const auto& f : {PolygonFamily({square(0, 0), square(10, 0)}), PolygonFamily({square(0, 0), square(0, 5)}),
                        PolygonFamily({square(0, 0), square(1, 0)})}) {
    const TransversalVerdict v = verify_disjoint_pair(f);
    EXPECT_TRUE(v.conclusion_holds);
    EXPECT_EQ(v.summary.component_count, 1);
    EXPECT_FALSE(v.violated());
  }
  EXPECT_THROW(verify_disjoint_pair(PolygonFamily({square(0, 0, 2), square(1, 1, 2)})), ContractViolation);
}

TEST(TripleWithDisjointPair, NeverTheFullCircle) {
  const auto centered = [](std::int64_t x, std::int64_t y) { return square(Rational(x) - Rational(1, 2), Rational(y) - Rational(1, 2)); };
  const TransversalVerdict none = verify_triple_with_disjoint_pair(PolygonFamily({centered(0, 0), centered(10, 0), centered(5, 8)}));
  EXPECT_TRUE(none.conclusion_holds);
  EXPECT_EQ(none.summary.component_count, 0);
  // A third set overlapping both leaves the pair's single arc.
  const TransversalVerdict covered = verify_triple_with_disjoint_pair(
      PolygonFamily({square(0, 0), square(2, 0), square(-1, -1, 5)}));
  EXPECT_TRUE(covered.conclusion_holds);
  EXPECT_EQ(covered.summary.component_count, 1);
  EXPECT_THROW(verify_triple_with_disjoint_pair(PolygonFamily({square(0, 0, 2), square(1, 0, 2), square(9, 9)})),
               ContractViolation);
}

TEST(Semipairwise, SquaresInARow) {
  std::vector<ConvexPolygon> row;
  for (int i = 0; i < 6; ++i) row.push_back(square(2 * i, 0));
  const TransversalVerdict v = verify_semipairwise(PolygonFamily(row));
  EXPECT_TRUE(v.hypotheses_hold);
  EXPECT_TRUE(v.conclusion_holds);
  // Semipairwise check, C(6,5) and C(6,4) subfamilies.
  EXPECT_EQ(v.hypotheses.size(), 1u + 6u + 15u);
  EXPECT_EQ(v.summary.component_count, 1);
}

TEST(Semipairwise, FailingSubfamiliesAreNamed) {
  const auto centered = [](std::int64_t x, std::int64_t y) { return square(Rational(x) - Rational(1, 2), Rational(y) - Rational(1, 2)); };
  // Members 0, 1, 2 admit no common transversal; every subfamily holding
  // all three must be reported.
  const PolygonFamily f({centered(0, 0), centered(10, 0), centered(5, 8), square(100, 100), square(200, 100),
                         square(300, 100)});
  const TransversalVerdict v = verify_semipairwise(f);
  EXPECT_FALSE(v.hypotheses_hold);
  EXPECT_FALSE(v.conclusion_holds);
  EXPECT_FALSE(v.violated());
  int flagged = 0;
  for (const auto& c : v.hypotheses) {
    if (c.subfamily.size() < 6 && contains(c.subfamily, {0, 1, 2})) {
      EXPECT_FALSE(c.passed);
      EXPECT_EQ(c.component_count, 0);
      ++flagged;
    }
  }
  // C(3,2) 5-subsets and C(3,1) 4-subsets contain {0, 1, 2}.
  EXPECT_EQ(flagged, 3 + 3);
}

TEST(Semipairwise, SizeAndClass) {
  std::vector<ConvexPolygon> five;
  for (int i = 0; i < 5; ++i) five.push_back(square(2 * i, 0));
  EXPECT_THROW(verify_semipairwise(PolygonFamily(five)), ContractViolation);
  // Three mutually overlapping squares break the semipairwise hypothesis.
  std::vector<ConvexPolygon> bad{square(0, 0, 2), square(1, 0, 2), square(Rational(1, 2), 1, 2)};
  for (int i = 0; i < 3; ++i) bad.push_back(square(10 + 2 * i, 0));
  const TransversalVerdict v = verify_semipairwise(PolygonFamily(bad));
  EXPECT_FALSE(v.hypotheses.front().passed);
  EXPECT_FALSE(v.hypotheses_hold);
}

TEST(Dispatch, MatchesDirectCalls) {
  const PolygonFamily f({square(0, 0), square(10, 0)});
  EXPECT_EQ(verify(PlaneStatement::DisjointPair, f).conclusion_holds, verify_disjoint_pair(f).conclusion_holds);
  EXPECT_THROW(verify(PlaneStatement::SingleSet, f), ContractViolation);
}

TEST(PlaneSweep, TagsAndDefaults) {
  for (const char* tag : {"lemma-311", "lemma-312", "lemma-313", "thm-321", "oracle"}) {
    EXPECT_EQ(to_string(parse_plane_sweep_kind(tag)), tag);
  }
  EXPECT_THROW(parse_plane_sweep_kind("sigma"), ContractViolation);
  EXPECT_EQ(default_plane_sweep(PlaneSweepKind::Semipairwise).m_values.front(), 6);
}

TEST(PlaneSweep, SerialAndParallelReportsAreIdentical) {
  for (PlaneSweepKind k : {PlaneSweepKind::SingleSet, PlaneSweepKind::TripleWithDisjointPair,
                           PlaneSweepKind::OracleAgreement}) {
    PlaneSweepConfig c = default_plane_sweep(k);
    c.trials = 30;
    c.seed = 5;
    c.resolution = 2000;
    EXPECT_EQ(text(plane_sweep(c, Execution::Serial)), text(plane_sweep(c, Execution::Parallel))) << to_string(k);
  }
}

TEST(PlaneSweep, SemipairwiseTargetAndReplay) {
  PlaneSweepConfig c = default_plane_sweep(PlaneSweepKind::Semipairwise);
  c.trials = 400;
  c.target_accepted = 5;
  c.seed = 3;
  const PlaneSweepReport r = plane_sweep(c);
  EXPECT_TRUE(r.target_reached);
  EXPECT_EQ(r.hypotheses_satisfied, 5);
  EXPECT_EQ(r.conclusion_violated, 0);
  const PlaneTrialOutcome last = run_plane_trial(c, r.total - 1);
  EXPECT_TRUE(last.hypotheses_hold);
  const TransversalVerdict v = verify_semipairwise(plane_trial_family(c, r.total - 1));
  EXPECT_EQ(v.hypotheses_hold, last.hypotheses_hold);
  EXPECT_EQ(v.summary.component_count, last.component_count);
}

TEST(PlaneSweep, CountsAreConsistent) {
  PlaneSweepConfig c = default_plane_sweep(PlaneSweepKind::DisjointPair);
  c.trials = 50;
  const PlaneSweepReport r = plane_sweep(c);
  EXPECT_EQ(r.total, 50);
  EXPECT_EQ(r.hypotheses_satisfied + r.generation_failures + r.hypotheses_failed_conclusion_failed +
                r.hypotheses_failed_conclusion_held,
            r.total);
  std::int64_t hist = 0;
  for (const auto& [k, n] : r.component_histogram) hist += n;
  EXPECT_EQ(hist, r.total - r.generation_failures);
  EXPECT_EQ(r.conclusion_violated, 0);
}

TEST(PlaneSweep, RejectsBadConfigurations) {
  PlaneSweepConfig c = default_plane_sweep(PlaneSweepKind::Semipairwise);
  c.m_values = {5};
  EXPECT_THROW(plane_sweep(c), ContractViolation);
  c = default_plane_sweep(PlaneSweepKind::SingleSet);
  c.trials = 0;
  EXPECT_THROW(plane_sweep(c), ContractViolation);
  c = default_plane_sweep(PlaneSweepKind::OracleAgreement);
  c.resolution = 4;
  EXPECT_THROW(plane_sweep(c), ContractViolation);
}
