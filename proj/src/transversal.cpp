#include "helly/transversal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "helly/errors.hpp"

namespace helly {

namespace {

using Wide = __int128;

int half(const Direction& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

Wide cross(const Direction& a, const Direction& b) {
  return Wide{a.x} * b.y - Wide{a.y} * b.x;
}

Wide dot(const Direction& a, const Direction& b) { return Wide{a.x} * b.x + Wide{a.y} * b.y; }

Wide eval(const Sinusoid& c, const Direction& d) { return Wide{c.a} * d.x + Wide{c.b} * d.y; }

int sign(Wide v) { return (v > 0) - (v < 0); }

Sinusoid minus(const Sinusoid& p, const Sinusoid& q) { return {p.a - q.a, p.b - q.b}; }

// Positive combination of two directions less than π apart; lies strictly
// inside the cone they span.
Direction between(const Direction& s, const Direction& e) { return {s.x + e.x, s.y + e.y}; }

// Strictly inside the open cone from s to e (counterclockwise, less than π).
bool inside(const Direction& s, const Direction& z, const Direction& e) {
  return cross(s, z) > 0 && cross(z, e) > 0;
}

void sort_unique(std::vector<Direction>& ds) {
  std::sort(ds.begin(), ds.end(), angle_less);
  ds.erase(std::unique(ds.begin(), ds.end(), same_angle), ds.end());
}

// Elementary arcs over `starts` (sorted, unique, containing angle 0 and the
// quadrant directions). The last arc ends at 2π, represented by angle 0.
template <typename F>
void for_each_arc(const std::vector<Direction>& starts, F&& f) {
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const Direction& e = i + 1 < starts.size() ? starts[i + 1] : kAngleZero;
    f(starts[i], e);
  }
}

// Pieces given as (start, coefficient) in cyclic order of starts.
PiecewiseSinusoid from_starts(std::vector<std::pair<Direction, Sinusoid>> starts) {
  std::sort(starts.begin(), starts.end(),
            [](const auto& p, const auto& q) { return angle_less(p.first, q.first); });
  // Split the piece that wraps past 2π so that one starts exactly at 0.
  if (!same_angle(starts.front().first, kAngleZero)) {
    starts.insert(starts.begin(), {kAngleZero, starts.back().second});
  }
  std::vector<SinusoidPiece> pieces;
  pieces.reserve(starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const Direction& e = i + 1 < starts.size() ? starts[i + 1].first : kAngleZero;
    pieces.push_back({starts[i].first, e, starts[i].second});
  }
  return PiecewiseSinusoid(std::move(pieces));
}

PiecewiseSinusoid support(const std::vector<Point64>& v, bool upper) {
  const std::size_t n = v.size();
  if (n < 3) throw ContractViolation("support function needs a polygon with >= 3 vertices");
  // Outward normal of edge v_i -> v_{i+1} for counterclockwise order. Vertex
  // v_i maximizes x·u for u between the normals of its two edges; it
  // minimizes x·u between their negatives.
  std::vector<Direction> normal(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point64& p = v[i];
    const Point64& q = v[(i + 1) % n];
    normal[i] = {q.y - p.y, p.x - q.x};
    if (!upper) normal[i] = normal[i].opposite();
  }
  std::vector<std::pair<Direction, Sinusoid>> starts;
  starts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    starts.emplace_back(normal[(i + n - 1) % n], Sinusoid{v[i].x, v[i].y});
  }
  return from_starts(std::move(starts));
}

PiecewiseSinusoid envelope2(const PiecewiseSinusoid& f, const PiecewiseSinusoid& g,
                            bool take_min) {
  std::vector<Direction> starts{kAngleZero, kAngleHalfPi, kAnglePi, kAngleThreeHalfPi};
  for (const auto& p : f.pieces()) starts.push_back(p.start);
  for (const auto& p : g.pieces()) starts.push_back(p.start);
  sort_unique(starts);

  std::vector<std::pair<Direction, Sinusoid>> out;
  const auto pick = [&](const Sinusoid& cf, const Sinusoid& cg, const Direction& s,
                        const Direction& e) {
    const Wide df = eval(cf, between(s, e));
    const Wide dg = eval(cg, between(s, e));
    const bool f_wins = take_min ? df <= dg : df >= dg;
    out.emplace_back(s, f_wins ? cf : cg);
  };
  for_each_arc(starts, [&](const Direction& s, const Direction& e) {
    const Direction mid = between(s, e);
    const Sinusoid& cf = f.coef_at(mid);
    const Sinusoid& cg = g.coef_at(mid);
    const Sinusoid diff = minus(cf, cg);
    if (diff.a == 0 && diff.b == 0) {
      out.emplace_back(s, cf);
      return;
    }
    // diff vanishes exactly at the two directions perpendicular to (a, b).
    const Direction z1{-diff.b, diff.a};
    const Direction z2 = z1.opposite();
    const Direction* z = inside(s, z1, e) ? &z1 : inside(s, z2, e) ? &z2 : nullptr;
    if (z) {
      pick(cf, cg, s, *z);
      pick(cf, cg, *z, e);
    } else {
      pick(cf, cg, s, e);
    }
  });
  return from_starts(std::move(out));
}

// Maximal runs of equal positive(i) over the cyclic index range [0, n),
// n >= 1, reported as f(first, length, positive). A constant sequence is a
// single run starting at 0.
template <typename P, typename F>
void cyclic_runs(std::size_t n, P&& positive, F&& f) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (positive(i) != positive((i + n - 1) % n)) {
      start = i;
      break;
    }
  }
  std::size_t done = 0;
  while (done < n) {
    const std::size_t head = (start + done) % n;
    const bool pos = positive(head);
    std::size_t len = 1;
    while (done + len < n && positive((head + len) % n) == pos) ++len;
    f(head, len, pos);
    done += len;
  }
}

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;
// atan2 on exact integer directions, a few ulps of 2π.
constexpr double kAngleErrorBound = 8 * std::numeric_limits<double>::epsilon() * kPi;

// Half-open angle widths on the quotient circle [0, π).
double arc_width(double start, double end) {
  double w = end - start;
  if (w < 0) w += kPi;
  return w;
}

}  // namespace

double Direction::angle() const {
  double t = std::atan2(static_cast<double>(y), static_cast<double>(x));
  if (t < 0) t += 2 * kPi;
  return t;
}

bool angle_less(const Direction& a, const Direction& b) {
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

bool same_angle(const Direction& a, const Direction& b) {
  return cross(a, b) == 0 && dot(a, b) > 0;
}

PiecewiseSinusoid::PiecewiseSinusoid(std::vector<SinusoidPiece> pieces) {
  if (pieces.empty()) throw ContractViolation("piecewise sinusoid needs at least one piece");
  if (!same_angle(pieces.front().start, kAngleZero)) {
    throw ContractViolation("first piece must start at angle 0");
  }
  for (auto& p : pieces) {
    if (!pieces_.empty() && pieces_.back().coef == p.coef) {
      pieces_.back().end = p.end;
    } else {
      pieces_.push_back(p);
    }
  }
}

const Sinusoid& PiecewiseSinusoid::coef_at(const Direction& d) const {
  // Last piece whose start is not after d.
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), d,
                             [](const Direction& x, const SinusoidPiece& p) {
                               return angle_less(x, p.start);
                             });
  return std::prev(it)->coef;
}

double PiecewiseSinusoid::value(double theta) const {
  theta = std::fmod(theta, 2 * kPi);
  if (theta < 0) theta += 2 * kPi;
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), theta,
                             [](double t, const SinusoidPiece& p) { return t < p.start.angle(); });
  const Sinusoid& c = std::prev(it)->coef;
  return static_cast<double>(c.a) * std::cos(theta) + static_cast<double>(c.b) * std::sin(theta);
}

PiecewiseSinusoid upper_support(const std::vector<Point64>& polygon) {
  return support(polygon, true);
}

PiecewiseSinusoid lower_support(const std::vector<Point64>& polygon) {
  return support(polygon, false);
}

PiecewiseSinusoid envelope(const std::vector<PiecewiseSinusoid>& functions, bool take_min) {
  if (functions.empty()) throw ContractViolation("envelope of no functions");
  PiecewiseSinusoid acc = functions.front();
  for (std::size_t i = 1; i < functions.size(); ++i) acc = envelope2(acc, functions[i], take_min);
  return acc;
}

TransversalProfile transversal_profile(const PolygonFamily& family) {
  std::vector<PiecewiseSinusoid> uppers, lowers;
  uppers.reserve(family.size());
  lowers.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    uppers.push_back(upper_support(family.scaled(i)));
    lowers.push_back(lower_support(family.scaled(i)));
  }
  TransversalProfile p;
  p.upper = envelope(uppers, true);
  p.lower = envelope(lowers, false);
  for (const auto& piece : p.upper.pieces()) p.breakpoints.push_back(piece.start);
  for (const auto& piece : p.lower.pieces()) p.breakpoints.push_back(piece.start);
  sort_unique(p.breakpoints);
  p.scale = family.scale();
  return p;
}

std::string to_string(DegeneracyKind k) {
  switch (k) {
    case DegeneracyKind::IsolatedGap: return "isolated_gap";
    case DegeneracyKind::IsolatedContact: return "isolated_contact";
    case DegeneracyKind::ZeroWidthArc: return "zero_width_arc";
  }
  return "unknown";
}

namespace {

// A point or an open interval of the quotient circle on which U - L has a
// constant sign.
struct Cell {
  bool point = false;
  Direction start;
  Direction end;
  int sign = 0;
  bool identically_zero = false;
};

std::vector<Cell> sign_cells(const TransversalProfile& profile) {
  std::vector<Direction> starts{kAngleZero, kAngleHalfPi};
  for (const auto& b : profile.breakpoints) {
    if (half(b) == 0) starts.push_back(b);
  }
  sort_unique(starts);

  std::vector<Cell> cells;
  cells.reserve(3 * starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const Direction& s = starts[i];
    const Direction& e = i + 1 < starts.size() ? starts[i + 1] : kAnglePi;
    const Direction mid = between(s, e);
    const Sinusoid w = minus(profile.upper.coef_at(mid), profile.lower.coef_at(mid));
    cells.push_back({true, s, s, sign(eval(w, s)), false});
    if (w.a == 0 && w.b == 0) {
      cells.push_back({false, s, e, 0, true});
      continue;
    }
    const Direction z1{-w.b, w.a};
    const Direction z2 = z1.opposite();
    const Direction* z = inside(s, z1, e) ? &z1 : inside(s, z2, e) ? &z2 : nullptr;
    if (z) {
      cells.push_back({false, s, *z, sign(eval(w, between(s, *z))), false});
      cells.push_back({true, *z, *z, 0, false});
      cells.push_back({false, *z, e, sign(eval(w, between(*z, e))), false});
    } else {
      cells.push_back({false, s, e, sign(eval(w, mid)), false});
    }
  }
  return cells;
}

// Angle on the quotient circle; the end of the last arc is π itself.
double quotient_angle(const Direction& d) { return d.angle(); }

}  // namespace

ComponentSummary components(const TransversalProfile& profile) {
  const std::vector<Cell> cells = sign_cells(profile);
  const std::size_t n = cells.size();
  ComponentSummary out;
  out.angle_error = kAngleErrorBound;
  out.min_arc_width = kInf;
  out.min_gap_width = kInf;

  for (std::size_t i = 0; i < n; ++i) {
    const Cell& c = cells[i];
    if (c.identically_zero) {
      out.degeneracies.push_back({DegeneracyKind::ZeroWidthArc, c.start, c.end});
      continue;
    }
    if (!c.point || c.sign != 0) continue;
    const Cell& prev = cells[(i + n - 1) % n];
    const Cell& next = cells[(i + 1) % n];
    if (prev.sign > 0 && next.sign > 0) {
      out.degeneracies.push_back({DegeneracyKind::IsolatedGap, c.start, c.start});
    } else if (prev.sign < 0 && next.sign < 0) {
      out.degeneracies.push_back({DegeneracyKind::IsolatedContact, c.start, c.start});
    }
  }

  if (std::all_of(cells.begin(), cells.end(), [](const Cell& c) { return c.sign > 0; })) {
    out.full_circle = true;
    out.component_count = 1;
    out.arcs.push_back({kAngleZero, kAnglePi, 0.0, kPi, kPi});
    out.min_arc_width = kPi;
    return out;
  }
  if (std::none_of(cells.begin(), cells.end(), [](const Cell& c) { return c.sign > 0; })) {
    out.min_gap_width = kPi;
    return out;
  }

  cyclic_runs(
      n, [&](std::size_t i) { return cells[i].sign > 0; },
      [&](std::size_t head, std::size_t len, bool positive) {
        const Cell& first = cells[head];
        const Cell& last = cells[(head + len - 1) % n];
        const double a0 = quotient_angle(first.start);
        const double a1 = quotient_angle(last.end);
        if (positive) {
          FeasibleArc arc{first.start, last.end, a0, a1, arc_width(a0, a1)};
          out.min_arc_width = std::min(out.min_arc_width, arc.width);
          out.arcs.push_back(arc);
        } else {
          // A gap made of a single point has width 0.
          const double w = (len == 1 && first.point) ? 0.0 : arc_width(a0, a1);
          out.min_gap_width = std::min(out.min_gap_width, w);
        }
      });
  std::sort(out.arcs.begin(), out.arcs.end(),
            [](const FeasibleArc& a, const FeasibleArc& b) { return a.start_angle < b.start_angle; });
  out.component_count = static_cast<int>(out.arcs.size());
  return out;
}

ComponentSummary transversal_components(const PolygonFamily& family) {
  return components(transversal_profile(family));
}

ComponentSummary sample_oracle(const PolygonFamily& family, int resolution, Execution exec) {
  if (resolution < 8) throw ContractViolation("oracle resolution must be >= 8");
  const std::size_t n = static_cast<std::size_t>(resolution);
  std::vector<char> feasible(n, 0);
  const auto sample = [&](std::size_t i) {
    const double theta = kPi * static_cast<double>(i) / static_cast<double>(n);
    double low = -kInf, high = kInf;
    for (const auto& poly : family.members()) {
      const SupportInterval s = support_interval(poly, theta);
      low = std::max(low, s.low);
      high = std::min(high, s.high);
    }
    feasible[i] = high > low ? 1 : 0;
  };
  if (exec == Execution::Parallel) {
    const int threads = worker_threads();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
      sample(static_cast<std::size_t>(i));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) sample(i);
  }

  ComponentSummary out;
  out.approximate = true;
  out.angle_error = kPi / static_cast<double>(n);
  out.min_arc_width = kInf;
  out.min_gap_width = kInf;
  const double step = kPi / static_cast<double>(n);
  if (std::all_of(feasible.begin(), feasible.end(), [](char f) { return f != 0; })) {
    out.full_circle = true;
    out.component_count = 1;
    out.arcs.push_back({kAngleZero, kAnglePi, 0.0, kPi, kPi});
    out.min_arc_width = kPi;
    return out;
  }
  if (std::none_of(feasible.begin(), feasible.end(), [](char f) { return f != 0; })) {
    out.min_gap_width = kPi;
    return out;
  }
  const auto approx_direction = [](double t) {
    return Direction{static_cast<std::int64_t>(std::llround(std::cos(t) * 1e9)),
                     static_cast<std::int64_t>(std::llround(std::sin(t) * 1e9))};
  };
  cyclic_runs(
      n, [&](std::size_t i) { return feasible[i] != 0; },
      [&](std::size_t head, std::size_t len, bool positive) {
        const double width = static_cast<double>(len) * step;
        if (positive) {
          FeasibleArc arc;
          arc.start_angle = static_cast<double>(head) * step;
          arc.end_angle = std::fmod(arc.start_angle + width, kPi);
          arc.width = width;
          arc.start = approx_direction(arc.start_angle);
          arc.end = approx_direction(arc.end_angle);
          out.min_arc_width = std::min(out.min_arc_width, width);
          out.arcs.push_back(arc);
        } else {
          out.min_gap_width = std::min(out.min_gap_width, width);
        }
      });
  std::sort(out.arcs.begin(), out.arcs.end(),
            [](const FeasibleArc& a, const FeasibleArc& b) { return a.start_angle < b.start_angle; });
  out.component_count = static_cast<int>(out.arcs.size());
  return out;
}

}  // namespace helly
