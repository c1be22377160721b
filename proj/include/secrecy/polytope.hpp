#pragma once

// The eight-variable rate-splitting/binning constraint system and its
// projection onto the (R1, R2) plane by weighted-sum maximization.
//
// Variables, in order: the non-cooperative rates R10, R20, the cooperative
// rates R12, R21, and the matching randomization (binning) rates
// T10, T20, T12, T21 spent to saturate the eavesdropper.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "secrecy/region.hpp"
#include "secrecy/simplex.hpp"

namespace secrecy {

enum RateVar : std::size_t { kR10, kR20, kR12, kR21, kT10, kT20, kT12, kT21, kNumRateVars };

using RateVector = std::array<double, kNumRateVars>;

/// Information constants parameterizing the constraint system (bits).
///   a1 = I(X1;Y|X2,V1,U)   a2 = I(X2;Y|X1,V2,U)   a3 = I(X1,X2;Y|V1,V2,U)
///   a4 = I(V1;Y2|X2,U)     a5 = I(V2;Y1|X1,U)     a6 = I(X1,X2;Y) - I(X1,X2;Z)
///   b1 = I(X1;Z|X2,V1,U)   b2 = I(X2;Z|X1,V2,U)   b3 = I(X1,X2;Z|V1,V2,U)
///   b4 = I(X1,X2;Z)
struct MutualInfoBundle {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0, a4 = 0.0, a5 = 0.0, a6 = 0.0;
  double b1 = 0.0, b2 = 0.0, b3 = 0.0, b4 = 0.0;

  /// Throws ValidationError if a constant is non-finite, a1..a5 or b1..b4 is
  /// negative, or b1/b2 exceeds b3 by more than 1e-9.
  void validate() const;

  friend bool operator==(const MutualInfoBundle&, const MutualInfoBundle&) = default;
};

struct RateConstraint {
  RateVector coeffs{};
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

/// How the total binning rate is tied to I(X1,X2;Z).
enum class BinningConstraint {
  exact,    // T10 + T20 + T12 + T21 = b4
  at_most,  // T10 + T20 + T12 + T21 <= b4 (diagnostic relaxation only)
};

/// Linear system over the eight rate variables, all implicitly >= 0.
struct RatePolytope {
  std::vector<RateConstraint> constraints;

  LinearProgram to_linear_program() const;
};

RatePolytope build_polytope(const MutualInfoBundle& m,
                            BinningConstraint binning = BinningConstraint::exact);

struct WeightedOptimum {
  double value = 0.0;
  RatePoint point;
  RateVector rates{};
};

/// Maximizes w1 (R10 + R12) + w2 (R20 + R21). Returns nullopt when the
/// system is infeasible. Weights must be non-negative and not both zero.
std::optional<WeightedOptimum> max_weighted_rate(const RatePolytope& p, double w1, double w2);

inline constexpr int kDefaultAngles = 181;

/// Projects the polytope onto (R1, R2): maximizes along (cos t, sin t) for
/// `angles` values of t spaced uniformly on [0, pi/2], plus the two
/// lexicographic axis extremes, and hulls the optimizers. An infeasible
/// system yields the origin-only region. Requires angles >= 2.
///
/// Angles lying between two solved angles that share an optimizer are not
/// re-solved: the set of directions for which a vertex is optimal is an
/// interval, so the result equals the fully enumerated trace.
Region2D trace_region(const RatePolytope& p, int angles = kDefaultAngles);

/// Hausdorff distance between the regions traced with the exact and the
/// relaxed (<=) binning constraint; zero when the equality costs nothing.
double binning_relaxation_gap(const MutualInfoBundle& m, int angles = kDefaultAngles);

}  // namespace secrecy
