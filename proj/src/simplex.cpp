#include "secrecy/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "secrecy/errors.hpp"

namespace secrecy {

namespace {
constexpr std::size_t kMaxPivots = 10000;
}

SimplexSolver::SimplexSolver(const LinearProgram& lp) : num_vars_(lp.num_vars), rows_(lp.constraints.size()) {
  std::size_t slacks = 0;
  std::size_t artificials = 0;
  for (const auto& c : lp.constraints) {
    if (c.coeffs.size() != num_vars_) throw UsageError("simplex: constraint width mismatch");
    if (!std::isfinite(c.rhs)) throw UsageError("simplex: non-finite right-hand side");
    if (c.relation == Relation::less_equal) ++slacks;
    if (c.relation == Relation::equal || c.rhs < 0.0) ++artificials;
  }
  first_artificial_ = num_vars_ + slacks;
  cols_ = first_artificial_ + artificials;
  width_ = cols_ + 1;
  tableau_.assign(rows_ * width_, 0.0);
  basis_.assign(rows_, 0);
  enterable_.assign(cols_, 1);

  std::size_t slack = num_vars_;
  std::size_t artificial = first_artificial_;
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto& c = lp.constraints[i];
    const double sign = c.rhs < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < num_vars_; ++j) at(i, j) = sign * c.coeffs[j];
    rhs(i) = sign * c.rhs;
    if (c.relation == Relation::less_equal) {
      at(i, slack) = sign;
      if (sign > 0.0) basis_[i] = slack;
      ++slack;
    }
    if (c.relation == Relation::equal || sign < 0.0) {
      at(i, artificial) = 1.0;
      basis_[i] = artificial;
      ++artificial;
    }
  }

  if (artificials == 0) {
    feasible_ = true;
    return;
  }

  std::vector<double> phase1(cols_, 0.0);
  for (std::size_t j = first_artificial_; j < cols_; ++j) phase1[j] = -1.0;
  optimize(phase1);  // bounded below by zero, cannot be unbounded

  double infeasibility = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] >= first_artificial_) infeasibility += rhs(i);
  }
  if (infeasibility > kFeasibilityTolerance) {
    feasible_ = false;
    return;
  }
  feasible_ = true;

  // Drive zero-valued artificials out of the basis; rows where that is
  // impossible are redundant and stay pinned at zero.
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] < first_artificial_) continue;
    for (std::size_t j = 0; j < first_artificial_; ++j) {
      if (std::abs(at(i, j)) > kPivotTolerance) {
        pivot(i, j);
        break;
      }
    }
  }
  for (std::size_t j = first_artificial_; j < cols_; ++j) enterable_[j] = 0;
}

void SimplexSolver::pivot(std::size_t row, std::size_t col) {
  const double inv = 1.0 / at(row, col);
  double* prow = &tableau_[row * width_];
  for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
  prow[col] = 1.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i == row) continue;
    double* r = &tableau_[i * width_];
    const double factor = r[col];
    if (factor == 0.0) continue;
    for (std::size_t j = 0; j < width_; ++j) r[j] -= factor * prow[j];
    r[col] = 0.0;
    if (std::abs(r[width_ - 1]) < 1e-14) r[width_ - 1] = 0.0;
  }
  basis_[row] = col;
}

bool SimplexSolver::optimize(std::span<const double> costs) {
  reduced_.resize(cols_);
  for (std::size_t iter = 0; iter < kMaxPivots; ++iter) {
    // Reduced costs d_j = c_j - c_B . column_j
    std::copy(costs.begin(), costs.end(), reduced_.begin());
    for (std::size_t i = 0; i < rows_; ++i) {
      const double cb = costs[basis_[i]];
      if (cb == 0.0) continue;
      const double* r = &tableau_[i * width_];
      for (std::size_t j = 0; j < cols_; ++j) reduced_[j] -= cb * r[j];
    }
    std::size_t entering = cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (enterable_[j] && reduced_[j] > kPivotTolerance) {
        entering = j;
        break;
      }
    }
    if (entering == cols_) return true;

    std::size_t leaving = rows_;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows_; ++i) {
      const double a = at(i, entering);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(0.0, at(i, width_ - 1)) / a;
      if (ratio < best_ratio - 1e-14 ||
          (ratio <= best_ratio + 1e-14 && leaving < rows_ && basis_[i] < basis_[leaving])) {
        best_ratio = std::min(ratio, best_ratio);
        leaving = i;
      }
    }
    if (leaving == rows_) return false;
    pivot(leaving, entering);
  }
  throw ConsistencyError("simplex: pivot limit exceeded");
}

double SimplexSolver::maximize(std::span<const double> objective, std::span<double> solution) {
  if (!feasible_) throw UsageError("simplex: program is infeasible");
  if (objective.size() != num_vars_ || solution.size() != num_vars_) {
    throw UsageError("simplex: objective/solution width mismatch");
  }
  costs_.assign(cols_, 0.0);
  std::copy(objective.begin(), objective.end(), costs_.begin());
  if (!optimize(costs_)) throw ConsistencyError("simplex: objective is unbounded");

  std::fill(solution.begin(), solution.end(), 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (basis_[i] < num_vars_) solution[basis_[i]] = std::max(0.0, at(i, width_ - 1));
  }
  double value = 0.0;
  for (std::size_t j = 0; j < num_vars_; ++j) value += objective[j] * solution[j];
  return value;
}

}  // namespace secrecy
