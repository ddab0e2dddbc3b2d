#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "helly/parallel.hpp"
#include "helly/polygon.hpp"

namespace helly {

// An angle θ held exactly as a nonzero integer vector pointing at
// (cos θ, sin θ). Every angle the engine produces is perpendicular to a
// difference of (scaled) vertex coordinates, so integer directions suffice.
struct Direction {
  std::int64_t x = 1;
  std::int64_t y = 0;

  // θ in [0, 2π).
  double angle() const;
  Direction opposite() const { return {-x, -y}; }
};

// Strict angular order on [0, 2π); `same_angle` is the matching equivalence.
bool angle_less(const Direction& a, const Direction& b);
bool same_angle(const Direction& a, const Direction& b);

inline constexpr Direction kAngleZero{1, 0};
inline constexpr Direction kAngleHalfPi{0, 1};
inline constexpr Direction kAnglePi{-1, 0};
inline constexpr Direction kAngleThreeHalfPi{0, -1};

// value(θ) = a cos θ + b sin θ, in the family's scaled units.
struct Sinusoid {
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const Sinusoid&, const Sinusoid&) = default;
};

// One piece of a piecewise sinusoid on the arc [start, end).
struct SinusoidPiece {
  Direction start;
  Direction end;
  Sinusoid coef;
};

// Continuous piecewise sinusoid on the full circle of directions. Pieces are
// sorted, tile [0, 2π), the first starts at angle 0, and adjacent pieces
// have different coefficients.
class PiecewiseSinusoid {
 public:
  PiecewiseSinusoid() = default;
  // `pieces` must be sorted, start at angle 0 and have consecutive ends
  // matching starts; equal neighbours are merged.
  explicit PiecewiseSinusoid(std::vector<SinusoidPiece> pieces);

  const std::vector<SinusoidPiece>& pieces() const { return pieces_; }
  // Coefficient of the piece whose arc contains `d`.
  const Sinusoid& coef_at(const Direction& d) const;
  // Value in scaled units at an arbitrary angle (double precision).
  double value(double theta) const;

 private:
  std::vector<SinusoidPiece> pieces_;
};

// Support functions of one polygon: upper(θ) = max_v v·u_θ and
// lower(θ) = min_v v·u_θ, exact, in scaled units.
PiecewiseSinusoid upper_support(const std::vector<Point64>& polygon);
PiecewiseSinusoid lower_support(const std::vector<Point64>& polygon);

// Pointwise min (take_min) or max of the functions, exact.
PiecewiseSinusoid envelope(const std::vector<PiecewiseSinusoid>& functions, bool take_min);

// The line space region T_1(F): a line {x·u_θ = p} is transversal iff
// lower(θ) < p < upper(θ). Values are in the family's scaled units (divide
// by `scale` for the original coordinates).
struct TransversalProfile {
  PiecewiseSinusoid lower;  // max over members of their lower support
  PiecewiseSinusoid upper;  // min over members of their upper support
  std::vector<Direction> breakpoints;  // union of both envelopes' piece starts, sorted
  Rational scale;
};

TransversalProfile transversal_profile(const PolygonFamily& family);

enum class DegeneracyKind {
  IsolatedGap,       // U - L touches 0 at one direction inside a feasible arc
  IsolatedContact,   // U - L reaches 0 from below at one direction
  ZeroWidthArc,      // U - L is identically 0 on an arc
};

std::string to_string(DegeneracyKind k);

struct Degeneracy {
  DegeneracyKind kind = DegeneracyKind::IsolatedGap;
  Direction start;
  Direction end;  // equals start for point degeneracies
};

// A maximal open arc of feasible directions in the quotient circle [0, π)
// (θ and θ+π describe the same lines). Angles are in [0, π]; an arc with
// end_angle < start_angle crosses the seam at 0 ≡ π.
struct FeasibleArc {
  Direction start;
  Direction end;
  double start_angle = 0;
  double end_angle = 0;
  double width = 0;
};

struct ComponentSummary {
  std::vector<FeasibleArc> arcs;
  int component_count = 0;
  bool full_circle = false;
  std::vector<Degeneracy> degeneracies;
  // Narrowest feasible arc and narrowest infeasible gap (radians); +inf when
  // there is none.
  double min_arc_width = 0;
  double min_gap_width = 0;
  // Approximate results (sampling oracle) set this.
  bool approximate = false;
  // Bound on |reported angle - true angle| for arc endpoints.
  double angle_error = 0;

  bool nonempty() const { return component_count >= 1; }
  bool degenerate() const { return !degeneracies.empty(); }
  // Reduced Betti numbers of T_1(F); only meaningful when nonempty.
  int b0() const { return component_count > 0 ? component_count - 1 : 0; }
  int b1() const { return full_circle ? 1 : 0; }
};

// Exact: signs of U - L are decided piece by piece on integer data.
ComponentSummary components(const TransversalProfile& profile);
ComponentSummary transversal_components(const PolygonFamily& family);

// Independent brute-force check: feasibility at `resolution` equally spaced
// angles of [0, π) from double-precision support intervals, cyclic runs of
// feasible samples as components. resolution >= 8.
ComponentSummary sample_oracle(const PolygonFamily& family, int resolution,
                               Execution exec = Execution::Parallel);

}  // namespace helly
