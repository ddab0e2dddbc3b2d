#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helly/errors.hpp"
#include "helly/transversal.hpp"

using namespace helly;

namespace {

constexpr double kPi = std::numbers::pi;

ConvexPolygon square(Rational x, Rational y, Rational s = 1) {
  return ConvexPolygon({{x, y}, {x + s, y}, {x + s, y + s}, {x, y + s}});
}

// Unit square centered at (cx, cy).
ConvexPolygon centered(Rational cx, Rational cy) {
  return square(cx - Rational(1, 2), cy - Rational(1, 2));
}

__int128 eval(const Sinusoid& c, const Direction& d) {
  return static_cast<__int128>(c.a) * d.x + static_cast<__int128>(c.b) * d.y;
}

bool exactly_feasible(const TransversalProfile& p, const Direction& d) {
  return eval(p.upper.coef_at(d), d) > eval(p.lower.coef_at(d), d);
}

Direction direction_at(double theta) {
  return {std::llround(std::cos(theta) * 1e9), std::llround(std::sin(theta) * 1e9)};
}

// Starts of pieces whose coefficient differs from the previous piece
// (the forced split at angle 0 is not a real breakpoint).
std::vector<Direction> real_breaks(const PiecewiseSinusoid& f) {
  std::vector<Direction> out;
  const auto& ps = f.pieces();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!(ps[i].coef == ps[(i + ps.size() - 1) % ps.size()].coef)) out.push_back(ps[i].start);
  }
  return out;
}

PolygonFamily random_family(std::uint64_t seed, int m, PlacementBox box = {0, 0, 30, 30}) {
  PolygonFamilyRequest req;
  req.m = m;
  req.box = box;
  req.size = {2, 10};
  return random_polygon_family(req, seed);
}

}  // namespace

TEST(Direction, AngularOrder) {
  const std::vector<Direction> ordered{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = 0; j < ordered.size(); ++j) {
      EXPECT_EQ(angle_less(ordered[i], ordered[j]), i < j) << i << " " << j;
    }
  }
  EXPECT_TRUE(same_angle({2, 2}, {5, 5}));
  EXPECT_FALSE(same_angle({2, 2}, {-2, -2}));
  EXPECT_DOUBLE_EQ(Direction({0, -3}).angle(), 1.5 * kPi);
  EXPECT_DOUBLE_EQ(kAnglePi.angle(), kPi);
}

TEST(Support, SquareHasFourVertexPieces) {
  const PolygonFamily f({square(0, 0)});
  const PiecewiseSinusoid u = upper_support(f.scaled(0));
  const PiecewiseSinusoid l = lower_support(f.scaled(0));
  ASSERT_EQ(u.pieces().size(), 4u);
  // On [0, π/2) the maximizer of x cos + y sin is (1, 1).
  EXPECT_EQ(u.pieces()[0].coef, (Sinusoid{1, 1}));
  EXPECT_EQ(l.pieces()[0].coef, (Sinusoid{0, 0}));
  // At π both left vertices attain the max; the piece starting there wins.
  EXPECT_EQ(u.coef_at(kAnglePi), (Sinusoid{0, 0}));
  EXPECT_EQ(u.coef_at({-1, 1}), (Sinusoid{0, 1}));
}

// Property: exact support values match a direct max/min over the vertices.
TEST(Support, MatchesVertexProjection) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PolygonFamily f = random_family(seed, 1);
    const PiecewiseSinusoid u = upper_support(f.scaled(0));
    const PiecewiseSinusoid l = lower_support(f.scaled(0));
    const double scale = static_cast<double>(f.scale());
    for (int i = 0; i < 97; ++i) {
      const double t = 2 * kPi * (i + 0.37) / 97;
      const SupportInterval s = support_interval(f.member(0), t);
      EXPECT_NEAR(u.value(t) / scale, s.high, 1e-9);
      EXPECT_NEAR(l.value(t) / scale, s.low, 1e-9);
    }
  }
}

TEST(Envelope, PointwiseMinAndMax) {
  const PolygonFamily f = random_family(3, 3);
  std::vector<PiecewiseSinusoid> ups;
  for (std::size_t i = 0; i < f.size(); ++i) ups.push_back(upper_support(f.scaled(i)));
  const PiecewiseSinusoid lo = envelope(ups, true);
  const PiecewiseSinusoid hi = envelope(ups, false);
  for (int i = 0; i < 500; ++i) {
    const double t = 2 * kPi * (i + 0.5) / 500;
    double mn = INFINITY, mx = -INFINITY;
    for (const auto& g : ups) {
      mn = std::min(mn, g.value(t));
      mx = std::max(mx, g.value(t));
    }
    EXPECT_NEAR(lo.value(t), mn, 1e-6 * std::abs(mn) + 1e-6);
    EXPECT_NEAR(hi.value(t), mx, 1e-6 * std::abs(mx) + 1e-6);
  }
  EXPECT_THROW(envelope({}, true), ContractViolation);
}

TEST(Profile, SingleSquareIsFullCircle) {
  const ComponentSummary s = transversal_components(PolygonFamily({square(0, 0)}));
  EXPECT_TRUE(s.full_circle);
  EXPECT_EQ(s.component_count, 1);
  EXPECT_EQ(s.b0(), 0);
  EXPECT_EQ(s.b1(), 1);
  ASSERT_EQ(s.arcs.size(), 1u);
  EXPECT_DOUBLE_EQ(s.arcs[0].width, kPi);
  EXPECT_FALSE(s.degenerate());
}

TEST(Profile, DuplicatedMemberChangesNothing) {
  const TransversalProfile one = transversal_profile(PolygonFamily({square(0, 0)}));
  const TransversalProfile two = transversal_profile(PolygonFamily({square(0, 0), square(0, 0)}));
  ASSERT_EQ(one.upper.pieces().size(), two.upper.pieces().size());
  for (std::size_t i = 0; i < one.upper.pieces().size(); ++i) {
    EXPECT_EQ(one.upper.pieces()[i].coef, two.upper.pieces()[i].coef);
    EXPECT_TRUE(same_angle(one.upper.pieces()[i].start, two.upper.pieces()[i].start));
  }
  ASSERT_EQ(one.lower.pieces().size(), two.lower.pieces().size());
}

TEST(Profile, SquaresOnTheXAxis) {
  const PolygonFamily f({square(0, 0), square(10, 0)});
  const TransversalProfile p = transversal_profile(f);
  // Vertical-normal lines y = const meet both; vertical lines x = const can't.
  EXPECT_TRUE(exactly_feasible(p, kAngleHalfPi));
  EXPECT_FALSE(exactly_feasible(p, kAngleZero));
  EXPECT_LE(p.upper.value(0), p.lower.value(0));
  const ComponentSummary s = components(p);
  EXPECT_EQ(s.component_count, 1);
  EXPECT_FALSE(s.full_circle);
  const ComponentSummary o = sample_oracle(f, 10000);
  EXPECT_EQ(o.component_count, 1);
  EXPECT_FALSE(o.full_circle);
}

TEST(Profile, SquaresStackedVertically) {
  const PolygonFamily f({square(0, 0), square(0, 5)});
  const ComponentSummary s = transversal_components(f);
  EXPECT_EQ(s.component_count, 1);
  EXPECT_FALSE(s.full_circle);
  // The feasible arc contains angle 0 (vertical lines), so it crosses the seam.
  ASSERT_EQ(s.arcs.size(), 1u);
  EXPECT_GT(s.arcs[0].start_angle, s.arcs[0].end_angle);
  EXPECT_EQ(sample_oracle(f, 10000).component_count, 1);
}

TEST(Profile, TriangleOfSquaresHasNoTransversal) {
  const PolygonFamily f({centered(0, 0), centered(10, 0), centered(5, 8)});
  const ComponentSummary s = transversal_components(f);
  EXPECT_EQ(s.component_count, 0);
  EXPECT_FALSE(s.nonempty());
  EXPECT_FALSE(s.full_circle);
  EXPECT_DOUBLE_EQ(s.min_gap_width, kPi);
  const ComponentSummary o = sample_oracle(f, 10000);
  EXPECT_EQ(o.component_count, 0);
}

TEST(Degeneracy, CornerContactGivesZeroWidthArc) {
  // For normals in [0, π/2] the top of the first square and the bottom of
  // the second are the shared corner, so U = L there. Slope-one lines
  // through the corner region meet both interiors.
  const ComponentSummary s = transversal_components(PolygonFamily({square(0, 0), square(1, 1)}));
  ASSERT_EQ(s.degeneracies.size(), 1u);
  EXPECT_EQ(s.degeneracies[0].kind, DegeneracyKind::ZeroWidthArc);
  EXPECT_TRUE(same_angle(s.degeneracies[0].start, kAngleZero));
  EXPECT_TRUE(same_angle(s.degeneracies[0].end, kAngleHalfPi));
  EXPECT_EQ(s.component_count, 1);
  EXPECT_NEAR(s.arcs[0].width, kPi / 2, 1e-12);
}

TEST(Degeneracy, SharedEdgeSplitsAtOnePoint) {
  // Squares sharing the edge x = 1: near-vertical lines through that edge
  // meet both, the vertical line itself meets neither interior pair.
  const ComponentSummary s = transversal_components(PolygonFamily({square(0, 0), square(1, 0)}));
  ASSERT_EQ(s.degeneracies.size(), 1u);
  EXPECT_EQ(s.degeneracies[0].kind, DegeneracyKind::IsolatedGap);
  EXPECT_EQ(s.component_count, 1);
  EXPECT_FALSE(s.full_circle);
  EXPECT_DOUBLE_EQ(s.min_gap_width, 0);
  EXPECT_NEAR(s.arcs[0].width, kPi, 1e-12);
}

// Property: L(θ+π) = -U(θ) at coefficient level, and the real breakpoints
// of L are those of U rotated by π.
TEST(ProfileProperty, SeamIdentity) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PolygonFamily f = random_family(seed, 1 + static_cast<int>(seed % 5));
    const TransversalProfile p = transversal_profile(f);
    for (const auto& piece : p.upper.pieces()) {
      const Direction mid{piece.start.x + piece.end.x, piece.start.y + piece.end.y};
      EXPECT_EQ(p.lower.coef_at(mid.opposite()), piece.coef) << seed;
    }
    std::vector<Direction> ub = real_breaks(p.upper), lb = real_breaks(p.lower);
    ASSERT_EQ(ub.size(), lb.size()) << seed;
    for (auto& d : ub) d = d.opposite();
    std::sort(ub.begin(), ub.end(), angle_less);
    for (std::size_t i = 0; i < ub.size(); ++i) EXPECT_TRUE(same_angle(ub[i], lb[i])) << seed;
    // Breakpoints are sorted and cover both envelopes.
    EXPECT_TRUE(std::is_sorted(p.breakpoints.begin(), p.breakpoints.end(), angle_less));
  }
}

// Property: adding a member never enlarges the feasible direction set.
TEST(ProfileProperty, Monotonicity) {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    const PolygonFamily f = random_family(seed, 4, {0, 0, 20, 20});
    const std::vector<int> first{0, 1, 2};
    const TransversalProfile small = transversal_profile(f.subfamily(first));
    const TransversalProfile big = transversal_profile(f);
    for (int i = 0; i < 720; ++i) {
      const Direction d = direction_at(2 * kPi * (i + 0.5) / 720);
      if (exactly_feasible(big, d)) EXPECT_TRUE(exactly_feasible(small, d)) << seed << " " << i;
    }
  }
}

// Property: W = U - L is π-periodic, so feasibility at θ and θ+π agree.
TEST(ProfileProperty, FeasibilityIsPiPeriodic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TransversalProfile p = transversal_profile(random_family(seed, 3));
    for (int i = 0; i < 360; ++i) {
      const Direction d = direction_at(kPi * (i + 0.5) / 360);
      EXPECT_EQ(exactly_feasible(p, d), exactly_feasible(p, d.opposite()));
    }
  }
}

// Property: exact counts equal the dense oracle when every arc and gap is
// wide enough to be sampled.
TEST(ComponentsProperty, ExactMatchesOracleWhenGuarded) {
  int guarded = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const PolygonFamily f = random_family(seed, 1 + static_cast<int>(seed % 4));
    const ComponentSummary e = transversal_components(f);
    const ComponentSummary o = sample_oracle(f, 4000);
    const double guard = 4 * kPi / 4000;
    if (e.min_arc_width < guard || e.min_gap_width < guard) continue;
    ++guarded;
    EXPECT_EQ(e.component_count, o.component_count) << seed;
    EXPECT_EQ(e.full_circle, o.full_circle) << seed;
  }
  EXPECT_GT(guarded, 40);
}

TEST(ComponentsProperty, ArcsAreConsistent) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ComponentSummary s = transversal_components(random_family(seed, 1 + static_cast<int>(seed % 4)));
    EXPECT_EQ(static_cast<int>(s.arcs.size()), s.component_count);
    double total = 0;
    for (const auto& a : s.arcs) {
      EXPECT_GT(a.width, 0);
      total += a.width;
    }
    EXPECT_LE(total, kPi + 1e-12);
    if (s.full_circle) EXPECT_EQ(s.component_count, 1);
    if (!s.full_circle) EXPECT_EQ(s.b1(), 0);
  }
}

TEST(Oracle, SerialMatchesParallel) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PolygonFamily f = random_family(seed, 3);
    const ComponentSummary a = sample_oracle(f, 2048, Execution::Serial);
    const ComponentSummary b = sample_oracle(f, 2048, Execution::Parallel);
    EXPECT_EQ(a.component_count, b.component_count);
    EXPECT_EQ(a.full_circle, b.full_circle);
    ASSERT_EQ(a.arcs.size(), b.arcs.size());
    for (std::size_t i = 0; i < a.arcs.size(); ++i) EXPECT_EQ(a.arcs[i].start_angle, b.arcs[i].start_angle);
  }
}

TEST(Oracle, SingleSquareAndResolutionBound) {
  const PolygonFamily f({square(0, 0)});
  const ComponentSummary o = sample_oracle(f, 1024);
  EXPECT_TRUE(o.full_circle);
  EXPECT_TRUE(o.approximate);
  EXPECT_THROW(sample_oracle(f, 7), ContractViolation);
}
