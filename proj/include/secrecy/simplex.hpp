#pragma once

// Dense two-phase simplex for the tiny LPs of rate-region projection:
//   maximize c.x  subject to  A_le x <= b_le,  A_eq x = b_eq,  x >= 0.
//
// Phase 1 runs once in the constructor. Each maximize() call starts phase 2
// from the previous optimal basis, so sweeping many objectives over one
// feasible set costs only a handful of pivots per direction. Bland's rule is
// used throughout, which rules out cycling on degenerate vertices.

#include <cstddef>
#include <span>
#include <vector>

namespace secrecy {

enum class Relation { less_equal, equal };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::less_equal;
  double rhs = 0.0;
};

struct LinearProgram {
  std::size_t num_vars = 0;
  std::vector<LinearConstraint> constraints;
};

class SimplexSolver {
 public:
  static constexpr double kPivotTolerance = 1e-10;
  static constexpr double kFeasibilityTolerance = 1e-9;

  explicit SimplexSolver(const LinearProgram& lp);

  bool feasible() const { return feasible_; }
  std::size_t num_vars() const { return num_vars_; }

  /// Maximizes objective.x over the feasible set and writes the optimal
  /// structural variables to `solution`. Throws UsageError when the program
  /// is infeasible and ConsistencyError when it is unbounded.
  double maximize(std::span<const double> objective, std::span<double> solution);

 private:
  double& at(std::size_t row, std::size_t col) { return tableau_[row * width_ + col]; }
  double at(std::size_t row, std::size_t col) const { return tableau_[row * width_ + col]; }
  double& rhs(std::size_t row) { return tableau_[row * width_ + width_ - 1]; }

  void pivot(std::size_t row, std::size_t col);
  // Runs Bland-rule simplex for the given column costs; returns false when
  // unbounded.
  bool optimize(std::span<const double> costs);

  std::size_t num_vars_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;   // structural + slack + artificial columns
  std::size_t width_ = 0;  // cols_ + rhs
  std::size_t first_artificial_ = 0;
  bool feasible_ = false;
  std::vector<double> tableau_;
  std::vector<std::size_t> basis_;
  std::vector<char> enterable_;
  std::vector<double> costs_;
  std::vector<double> reduced_;
};

}  // namespace secrecy
