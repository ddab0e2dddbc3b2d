#include "helly/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <boost/integer/common_factor.hpp>

#include "helly/errors.hpp"

namespace helly {

namespace {

using Wide = __int128;

template <class T>
int half_of(const T& x, const T& y) {
  return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
}

// Edge-direction angles of a strictly convex CCW polygon increase around the
// boundary with exactly one wrap past angle 0.
template <class T>
bool winds_once(const std::vector<std::array<T, 2>>& dirs) {
  int descents = 0;
  const std::size_t n = dirs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = dirs[i];
    const auto& b = dirs[(i + 1) % n];
    const int ha = half_of(a[0], a[1]);
    const int hb = half_of(b[0], b[1]);
    const bool less = ha != hb ? ha < hb : (a[0] * b[1] - a[1] * b[0]) > 0;
    if (!less) ++descents;
  }
  return descents == 1;
}

Wide cross(const Point64& o, const Point64& a, const Point64& b) {
  return static_cast<Wide>(a.x - o.x) * (b.y - o.y) - static_cast<Wide>(a.y - o.y) * (b.x - o.x);
}

// Strictly convex hull, counterclockwise.
std::vector<Point64> convex_hull(std::vector<Point64> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point64& a, const Point64& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Point64> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

// Along some edge normal of either polygon the projections meet at most in
// a point.
bool separated_by_edges_of(std::span<const Point64> a, std::span<const Point64> b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point64& p = a[i];
    const Point64& q = a[(i + 1) % n];
    // Outward normal of edge p->q is (dy, -dx); a lies in {x·n <= p·n}.
    const Wide nx = q.y - p.y;
    const Wide ny = -(q.x - p.x);
    const Wide edge = nx * p.x + ny * p.y;
    Wide min_b = nx * b[0].x + ny * b[0].y;
    for (const auto& v : b) min_b = std::min(min_b, nx * v.x + ny * v.y);
    if (min_b >= edge) return true;
  }
  return false;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<RationalPoint> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) throw ValidationError("a polygon needs at least 3 vertices");
  std::vector<std::array<Rational, 2>> dirs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = vertices_[i];
    const auto& q = vertices_[(i + 1) % n];
    dirs[i] = {q[0] - p[0], q[1] - p[1]};
    if (dirs[i][0] == 0 && dirs[i][1] == 0) throw ValidationError("repeated polygon vertex");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = dirs[i];
    const auto& b = dirs[(i + 1) % n];
    if (a[0] * b[1] - a[1] * b[0] <= 0) {
      throw ValidationError("polygon is not strictly convex counterclockwise at vertex " +
                            std::to_string((i + 1) % n));
    }
  }
  if (!winds_once(dirs)) throw ValidationError("polygon boundary winds more than once");
  approx_.reserve(n);
  for (const auto& v : vertices_) {
    approx_.push_back({static_cast<double>(v[0]), static_cast<double>(v[1])});
  }
}

SupportInterval support_interval(const ConvexPolygon& polygon, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  SupportInterval r{INFINITY, -INFINITY};
  for (const auto& v : polygon.approx()) {
    const double p = v[0] * c + v[1] * s;
    r.low = std::min(r.low, p);
    r.high = std::max(r.high, p);
  }
  return r;
}

PolygonFamily::PolygonFamily(std::vector<ConvexPolygon> members, std::vector<std::string> labels)
    : members_(std::move(members)), labels_(std::move(labels)) {
  if (members_.empty()) throw ContractViolation("a polygon family needs at least one member");
  if (labels_.empty()) {
    for (std::size_t i = 0; i < members_.size(); ++i) labels_.push_back("P" + std::to_string(i + 1));
  }
  if (labels_.size() != members_.size()) throw ContractViolation("label count mismatch");

  BigInt lcm = 1;
  for (const auto& poly : members_) {
    for (const auto& v : poly.vertices()) {
      for (const auto& c : v) lcm = boost::integer::lcm(lcm, boost::multiprecision::denominator(c));
    }
  }
  BigInt g = 0;
  std::vector<std::vector<std::array<BigInt, 2>>> big(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (const auto& v : members_[i].vertices()) {
      std::array<BigInt, 2> p;
      for (int k = 0; k < 2; ++k) {
        const Rational r = v[static_cast<std::size_t>(k)] * lcm;
        p[static_cast<std::size_t>(k)] = boost::multiprecision::numerator(r);
        g = boost::integer::gcd(g, abs(p[static_cast<std::size_t>(k)]));
      }
      big[i].push_back(std::move(p));
    }
  }
  if (g == 0) g = 1;
  scale_ = std::make_shared<const Rational>(Rational(lcm, g));
  const BigInt bound = kMaxScaledCoordinate;
  scaled_.resize(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    for (const auto& p : big[i]) {
      const BigInt x = p[0] / g;
      const BigInt y = p[1] / g;
      if (abs(x) > bound || abs(y) > bound) {
        throw DegenerateInput("polygon coordinates need more than 60 bits on a common grid; "
                              "the exact transversal engine cannot certify this family");
      }
      scaled_[i].push_back({static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)});
    }
  }
}

PolygonFamily PolygonFamily::subfamily(std::span<const int> indices) const {
  if (indices.empty()) throw ContractViolation("empty polygon subfamily");
  PolygonFamily out;
  out.scale_ = scale_;
  for (int i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= members_.size()) {
      throw ContractViolation("polygon index " + std::to_string(i) + " out of range");
    }
    const auto k = static_cast<std::size_t>(i);
    out.members_.push_back(members_[k]);
    out.labels_.push_back(labels_[k]);
    out.scaled_.push_back(scaled_[k]);
  }
  return out;
}

PolygonFamily parse_polygon_family(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("polygon file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("members") || !doc["members"].is_array()) {
    throw MalformedInput("polygon file needs a \"members\" array");
  }
  if (doc["members"].empty()) throw ContractViolation("polygon file has no members");
  std::vector<ConvexPolygon> polys;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < doc["members"].size(); ++i) {
    const auto& m = doc["members"][i];
    if (!m.is_object() || !m.contains("vertices") || !m["vertices"].is_array()) {
      throw MalformedInput("polygon " + std::to_string(i) + " lacks a \"vertices\" array");
    }
    std::string label = "P" + std::to_string(i + 1);
    if (m.contains("label")) {
      if (!m["label"].is_string()) throw MalformedInput("polygon label must be a string");
      label = m["label"].get<std::string>();
    }
    std::vector<RationalPoint> verts;
    for (const auto& v : m["vertices"]) {
      if (!v.is_array() || v.size() != 2) {
        throw MalformedInput("polygon " + label + ": vertices must be [x, y] pairs");
      }
      verts.push_back({rational_from_json(v[0]), rational_from_json(v[1])});
    }
    try {
      polys.emplace_back(std::move(verts));
    } catch (const ValidationError& e) {
      throw ValidationError("polygon " + label + ": " + e.what());
    }
    labels.push_back(std::move(label));
  }
  return PolygonFamily(std::move(polys), std::move(labels));
}

PolygonFamily load_polygon_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open polygon file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_polygon_family(ss.str());
}

bool scaled_interiors_overlap(std::span<const Point64> a, std::span<const Point64> b) {
  return !separated_by_edges_of(a, b) && !separated_by_edges_of(b, a);
}

bool interiors_disjoint(const PolygonFamily& family, std::size_t i, std::size_t j) {
  return !scaled_interiors_overlap(family.scaled(i), family.scaled(j));
}

std::string to_string(Disjointness d) {
  switch (d) {
    case Disjointness::PairwiseDisjoint: return "pairwise_disjoint";
    case Disjointness::SemipairwiseDisjoint: return "semipairwise_disjoint";
    case Disjointness::Neither: return "neither";
  }
  return "?";
}

Disjointness disjointness_class(const PolygonFamily& family) {
  const std::size_t m = family.size();
  std::vector<std::vector<bool>> disjoint(m, std::vector<bool>(m, true));
  bool pairwise = true;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const bool d = interiors_disjoint(family, i, j);
      disjoint[i][j] = disjoint[j][i] = d;
      pairwise = pairwise && d;
    }
  }
  if (pairwise) return Disjointness::PairwiseDisjoint;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!disjoint[i][j] && !disjoint[i][k] && !disjoint[j][k]) return Disjointness::Neither;
      }
    }
  }
  return Disjointness::SemipairwiseDisjoint;
}

namespace {

// Hull vertices in 1/kGridDenominator units.
std::vector<Point64> random_hull(Rng& rng, std::array<double, 2> center, SizeRange size,
                                 int points) {
  if (points < 3) throw ContractViolation("a random polygon needs >= 3 sample points");
  for (;;) {
    const double radius = uniform_real(rng, size.min_radius, size.max_radius);
    const double aspect = uniform_real(rng, 0.3, 1.0);
    const double tilt = uniform_real(rng, 0.0, std::numbers::pi);
    const double ct = std::cos(tilt);
    const double st = std::sin(tilt);
    std::vector<Point64> pts;
    for (int i = 0; i < points; ++i) {
      const double a = uniform_real(rng, 0.0, 2 * std::numbers::pi);
      const double ex = radius * std::cos(a);
      const double ey = radius * aspect * std::sin(a);
      const double x = center[0] + ct * ex - st * ey;
      const double y = center[1] + st * ex + ct * ey;
      pts.push_back({std::llround(x * kGridDenominator), std::llround(y * kGridDenominator)});
    }
    auto hull = convex_hull(std::move(pts));
    if (hull.size() >= 3) return hull;
  }
}

ConvexPolygon polygon_from_grid(const std::vector<Point64>& hull) {
  std::vector<RationalPoint> verts;
  verts.reserve(hull.size());
  for (const auto& p : hull) {
    verts.push_back({Rational(p.x, kGridDenominator), Rational(p.y, kGridDenominator)});
  }
  return ConvexPolygon(std::move(verts));
}

}  // namespace

ConvexPolygon random_convex_polygon(Rng& rng, std::array<double, 2> center, SizeRange size,
                                    int points) {
  return polygon_from_grid(random_hull(rng, center, size, points));
}

PolygonFamily random_polygon_family(const PolygonFamilyRequest& req, Rng& rng) {
  if (req.m < 1) throw ContractViolation("polygon family size must be >= 1");
  if (req.min_points < 3 || req.max_points < req.min_points) {
    throw ContractViolation("point count range must satisfy 3 <= min <= max");
  }
  const int budget = req.max_attempts > 0 ? req.max_attempts : 2000 * req.m;
  std::vector<ConvexPolygon> polys;
  std::vector<std::vector<Point64>> grid;  // vertices in 1/1024 units
  int attempts = 0;
  while (static_cast<int>(polys.size()) < req.m) {
    if (attempts++ >= budget) {
      throw GenerationFailure("could not place " + std::to_string(req.m) +
                              " polygons with the requested disjointness after " +
                              std::to_string(budget) + " attempts (placed " +
                              std::to_string(polys.size()) + ")");
    }
    const std::array<double, 2> center{uniform_real(rng, req.box.x0, req.box.x1),
                                       uniform_real(rng, req.box.y0, req.box.y1)};
    const int pts = static_cast<int>(uniform_int(rng, req.min_points, req.max_points));
    std::vector<Point64> cand_grid = random_hull(rng, center, req.size, pts);
    bool ok = true;
    if (req.requirement != DisjointnessRequirement::Any) {
      std::vector<bool> overlaps(grid.size());
      for (std::size_t i = 0; i < grid.size() && ok; ++i) {
        overlaps[i] = scaled_interiors_overlap(grid[i], cand_grid);
        if (req.requirement == DisjointnessRequirement::Pairwise && overlaps[i]) ok = false;
      }
      if (ok && req.requirement == DisjointnessRequirement::Semipairwise) {
        // New triples {i, j, candidate} need a disjoint pair.
        for (std::size_t i = 0; i < grid.size() && ok; ++i) {
          if (!overlaps[i]) continue;
          for (std::size_t j = i + 1; j < grid.size() && ok; ++j) {
            if (overlaps[j] && scaled_interiors_overlap(grid[i], grid[j])) ok = false;
          }
        }
      }
    }
    if (!ok) continue;
    polys.push_back(polygon_from_grid(cand_grid));
    grid.push_back(std::move(cand_grid));
  }
  return PolygonFamily(std::move(polys));
}

PolygonFamily random_polygon_family(const PolygonFamilyRequest& request, std::uint64_t seed) {
  Rng rng(seed);
  return random_polygon_family(request, rng);
}

}  // namespace helly
