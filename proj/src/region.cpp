#include "secrecy/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "secrecy/errors.hpp"

namespace secrecy {

namespace {

constexpr double kNegativeSlack = 1e-9;
constexpr double kCollinearTolerance = 1e-12;

double cross(RatePoint o, RatePoint a, RatePoint b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

double clamp_coordinate(double v) {
  if (!std::isfinite(v) || v < -kNegativeSlack) {
    throw ValidationError("rate point coordinate " + std::to_string(v) + " is negative or non-finite");
  }
  return v < 0.0 ? 0.0 : v;
}

double segment_distance(RatePoint p, RatePoint a, RatePoint b) {
  const double dx = b.r1 - a.r1;
  const double dy = b.r2 - a.r2;
  const double len2 = dx * dx + dy * dy;
  double t = 0.0;
  if (len2 > 0.0) t = std::clamp(((p.r1 - a.r1) * dx + (p.r2 - a.r2) * dy) / len2, 0.0, 1.0);
  return std::hypot(p.r1 - (a.r1 + t * dx), p.r2 - (a.r2 + t * dy));
}

}  // namespace

Region2D hull2d(std::span<const RatePoint> points) {
  if (points.empty()) throw UsageError("hull2d: empty point list");

  std::vector<RatePoint> pts;
  pts.reserve(points.size() + 3);
  double xmax = 0.0;
  double ymax = 0.0;
  for (const auto& p : points) {
    const RatePoint q{clamp_coordinate(p.r1), clamp_coordinate(p.r2)};
    xmax = std::max(xmax, q.r1);
    ymax = std::max(ymax, q.r2);
    pts.push_back(q);
  }
  pts.push_back({0.0, 0.0});
  pts.push_back({0.0, ymax});
  pts.push_back({xmax, 0.0});

  // Highest point per abscissa, in increasing r1.
  std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.r1 < b.r1 || (a.r1 == b.r1 && a.r2 > b.r2);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RatePoint& a, const RatePoint& b) { return a.r1 == b.r1; }),
            pts.end());

  std::vector<RatePoint> chain;
  chain.reserve(pts.size() + 1);
  for (const auto& p : pts) {
    while (chain.size() >= 2) {
      const RatePoint& o = chain[chain.size() - 2];
      const RatePoint& a = chain.back();
      const double scale = std::hypot(a.r1 - o.r1, a.r2 - o.r2) * std::hypot(p.r1 - a.r1, p.r2 - a.r2);
      if (cross(o, a, p) >= -kCollinearTolerance * std::max(scale, 1e-300)) {
        chain.pop_back();
      } else {
        break;
      }
    }
    chain.push_back(p);
  }
  if (chain.back().r2 > 0.0) chain.push_back({chain.back().r1, 0.0});
  return Region2D(std::move(chain));
}

Region2D Region2D::from_boundary(std::vector<RatePoint> boundary) {
  if (boundary.empty()) throw ValidationError("region boundary is empty");
  if (boundary.front().r1 != 0.0 || boundary.back().r2 != 0.0) {
    throw ValidationError("region boundary must start on the r2 axis and end on the r1 axis");
  }
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    const auto& p = boundary[i];
    if (!std::isfinite(p.r1) || !std::isfinite(p.r2) || p.r1 < 0.0 || p.r2 < 0.0) {
      throw ValidationError("region boundary has a negative or non-finite coordinate");
    }
    if (i > 0 && (p.r1 < boundary[i - 1].r1 || p.r2 > boundary[i - 1].r2)) {
      throw ValidationError("region boundary is not monotone");
    }
  }
  return Region2D(std::move(boundary));
}

Region2D hull_union(const Region2D& a, const Region2D& b) {
  std::vector<RatePoint> pts(a.hull());
  pts.insert(pts.end(), b.hull().begin(), b.hull().end());
  return hull2d(pts);
}

bool region_contains(const Region2D& region, RatePoint pt, double tol) {
  const RatePoint p{std::max(0.0, pt.r1 - tol), std::max(0.0, pt.r2 - tol)};
  const auto& h = region.hull();
  constexpr double eps = 1e-12;
  if (p.r1 > region.r1_max() + eps || p.r2 > region.r2_max() + eps) return false;
  for (std::size_t i = 0; i + 1 < h.size(); ++i) {
    const double len = std::hypot(h[i + 1].r1 - h[i].r1, h[i + 1].r2 - h[i].r2);
    if (cross(h[i], h[i + 1], p) > eps * std::max(len, 1.0)) return false;
  }
  return true;
}

bool region_subset(const Region2D& inner, const Region2D& outer, double tol) {
  return std::all_of(inner.hull().begin(), inner.hull().end(),
                     [&](const RatePoint& v) { return region_contains(outer, v, tol); });
}

double distance_to_region(const Region2D& region, RatePoint pt) {
  if (region_contains(region, pt, 0.0)) return 0.0;
  const auto& h = region.hull();
  const RatePoint origin{0.0, 0.0};
  double best = std::min(segment_distance(pt, origin, h.front()), segment_distance(pt, h.back(), origin));
  for (std::size_t i = 0; i + 1 < h.size(); ++i) best = std::min(best, segment_distance(pt, h[i], h[i + 1]));
  return best;
}

double directed_hausdorff(const Region2D& from, const Region2D& to) {
  double d = 0.0;
  for (const auto& v : from.hull()) d = std::max(d, distance_to_region(to, v));
  return d;
}

double hausdorff_distance(const Region2D& a, const Region2D& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double region_support(const Region2D& region, double w1, double w2) {
  double best = 0.0;
  for (const auto& v : region.hull()) best = std::max(best, w1 * v.r1 + w2 * v.r2);
  return best;
}

}  // namespace secrecy

namespace secrecy {

Region2D box_sum_region(double r1_max, double r2_max, double sum_max) {
  const double s = std::max(0.0, sum_max);
  const double a = std::clamp(r1_max, 0.0, s);
  const double b = std::clamp(r2_max, 0.0, s);
  const std::array<RatePoint, 2> corners{
      RatePoint{a, std::max(0.0, std::min(b, s - a))},
      RatePoint{std::max(0.0, std::min(a, s - b)), b},
  };
  return hull2d(corners);
}

}  // namespace secrecy
