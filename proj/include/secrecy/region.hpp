#pragma once

// Downward-closed convex rate regions in the (R1, R2) quadrant.

#include <span>
#include <vector>

namespace secrecy {

struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;

  friend bool operator==(const RatePoint&, const RatePoint&) = default;
};

/// A convex, downward-closed subset of the non-negative quadrant, stored as
/// its upper-right boundary: vertices sorted by increasing r1 with r2
/// non-increasing, running from (0, r2max) to (r1max, 0). Collinear
/// vertices are dropped. The region containing only the origin is {(0,0)}.
class Region2D {
 public:
  Region2D() : hull_{{0.0, 0.0}} {}

  const std::vector<RatePoint>& hull() const { return hull_; }
  double r1_max() const { return hull_.back().r1; }
  double r2_max() const { return hull_.front().r2; }
  bool is_origin() const { return hull_.size() == 1; }

  /// Adopts an already-computed boundary (e.g. read back from a file)
  /// without re-hulling. Checks ordering and the axis endpoints; throws
  /// ValidationError.
  static Region2D from_boundary(std::vector<RatePoint> boundary);

  friend bool operator==(const Region2D&, const Region2D&) = default;

 private:
  friend Region2D hull2d(std::span<const RatePoint> points);
  explicit Region2D(std::vector<RatePoint> hull) : hull_(std::move(hull)) {}

  std::vector<RatePoint> hull_;
};

/// Boundary of the downward closure of conv(points ∪ {(0,0)}). Throws
/// UsageError on an empty list and ValidationError on coordinates that are
/// negative beyond rounding noise (1e-9), which are otherwise clamped to 0.
Region2D hull2d(std::span<const RatePoint> points);

/// Convex hull of the union of two regions.
Region2D hull_union(const Region2D& a, const Region2D& b);

/// True iff some point q of the region satisfies q >= pt - tol componentwise.
bool region_contains(const Region2D& region, RatePoint pt, double tol);

/// Every vertex of `inner` is contained in `outer` with slack `tol`.
bool region_subset(const Region2D& inner, const Region2D& outer, double tol);

/// Euclidean distance from a point to the region (0 inside).
double distance_to_region(const Region2D& region, RatePoint pt);

/// max over a in `from` of the distance from a to `to`. Attained at a vertex
/// because both sets are convex polygons.
double directed_hausdorff(const Region2D& from, const Region2D& to);

double hausdorff_distance(const Region2D& a, const Region2D& b);

/// Support function max w1*r1 + w2*r2 over the region (w >= 0).
double region_support(const Region2D& region, double w1, double w2);

}  // namespace secrecy

namespace secrecy {

/// {R >= 0 : R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}. Negative
/// individual bounds clamp to 0; a negative sum bound leaves the origin.
Region2D box_sum_region(double r1_max, double r2_max, double sum_max);

}  // namespace secrecy
