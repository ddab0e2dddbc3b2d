#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "helly/random.hpp"
#include "helly/rational.hpp"

namespace helly {

struct Point64 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Point64&, const Point64&) = default;
};

using RationalPoint = std::array<Rational, 2>;

// Open interior of a bounded, strictly convex polygon given by its vertices
// in counterclockwise order.
class ConvexPolygon {
 public:
  // ValidationError unless there are >= 3 vertices, every turn is strictly
  // left, and the boundary winds exactly once.
  explicit ConvexPolygon(std::vector<RationalPoint> vertices);

  const std::vector<RationalPoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  // Double approximations of the vertices.
  const std::vector<std::array<double, 2>>& approx() const { return approx_; }

 private:
  std::vector<RationalPoint> vertices_;
  std::vector<std::array<double, 2>> approx_;
};

// Line {x : x·(cos θ, sin θ) = p} meets the open polygon iff low < p < high.
struct SupportInterval {
  double low = 0;
  double high = 0;
};

SupportInterval support_interval(const ConvexPolygon& polygon, double theta);

// Largest scaled coordinate magnitude the exact engine accepts.
inline constexpr std::int64_t kMaxScaledCoordinate = std::int64_t{1} << 60;

// Labeled polygons sharing one integer grid: every vertex equals
// scaled / scale with integer `scaled` coordinates. Subfamilies keep the
// parent's grid.
class PolygonFamily {
 public:
  // ContractViolation on an empty family; DegenerateInput if the common grid
  // needs coordinates beyond kMaxScaledCoordinate.
  explicit PolygonFamily(std::vector<ConvexPolygon> members,
                         std::vector<std::string> labels = {});

  std::size_t size() const { return members_.size(); }
  const ConvexPolygon& member(std::size_t i) const { return members_[i]; }
  const std::vector<ConvexPolygon>& members() const { return members_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Point64>& scaled(std::size_t i) const { return scaled_[i]; }
  const Rational& scale() const { return *scale_; }

  PolygonFamily subfamily(std::span<const int> indices) const;

 private:
  PolygonFamily() = default;

  std::vector<ConvexPolygon> members_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Point64>> scaled_;
  std::shared_ptr<const Rational> scale_;
};

// Polygon family file: { "members": [ { "label": str, "vertices": [[x,y],...] }, ... ] }
PolygonFamily parse_polygon_family(const std::string& text);
PolygonFamily load_polygon_family(const std::string& path);

// Exact test on open interiors; touching boundaries count as disjoint.
bool interiors_disjoint(const PolygonFamily& family, std::size_t i, std::size_t j);

enum class Disjointness { PairwiseDisjoint, SemipairwiseDisjoint, Neither };
std::string to_string(Disjointness d);

// Pairwise disjoint implies semipairwise disjoint; the stronger class is
// reported. Families with fewer than three members are semipairwise
// disjoint vacuously.
Disjointness disjointness_class(const PolygonFamily& family);

// ---------------------------------------------------------------------------
// Random instances.

struct PlacementBox {
  double x0 = 0, y0 = 0, x1 = 100, y1 = 100;
};

struct SizeRange {
  double min_radius = 1;
  double max_radius = 10;
};

enum class DisjointnessRequirement { Any, Semipairwise, Pairwise };

// Coordinates are rounded to multiples of this.
inline constexpr std::int64_t kGridDenominator = 1024;

// Convex hull of `points` random points on a random ellipse of radius in
// `size` around `center`, rounded to the 1/1024 grid. Resamples until the
// hull has >= 3 vertices.
ConvexPolygon random_convex_polygon(Rng& rng, std::array<double, 2> center, SizeRange size,
                                    int points);

struct PolygonFamilyRequest {
  int m = 1;
  PlacementBox box;
  SizeRange size;
  int min_points = 3;
  int max_points = 16;
  DisjointnessRequirement requirement = DisjointnessRequirement::Any;
  int max_attempts = 0;  // 0 = 2000 * m
};

// Adds polygons one at a time, rejecting candidates that would break the
// requested disjointness class. GenerationFailure once the attempt budget is
// spent. Deterministic per seed.
PolygonFamily random_polygon_family(const PolygonFamilyRequest& request, std::uint64_t seed);
PolygonFamily random_polygon_family(const PolygonFamilyRequest& request, Rng& rng);

// Open interiors of two CCW convex polygons with integer vertices on a common
// grid overlap (separating-axis test over both edge sets, exact).
bool scaled_interiors_overlap(std::span<const Point64> a, std::span<const Point64> b);

}  // namespace helly
