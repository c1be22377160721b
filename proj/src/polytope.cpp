#include "secrecy/polytope.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "secrecy/errors.hpp"

namespace secrecy {

namespace {

RateConstraint row(std::initializer_list<RateVar> vars, double rhs,
                   Relation rel = Relation::less_equal) {
  RateConstraint c;
  for (auto v : vars) c.coeffs[v] = 1.0;
  c.relation = rel;
  c.rhs = rhs;
  return c;
}

// Lexicographic tie-break weight for the axis extremes.
constexpr double kTieBreak = 1e-7;

class Tracer {
 public:
  explicit Tracer(const RatePolytope& p) : solver_(p.to_linear_program()) {}

  bool feasible() const { return solver_.feasible(); }

  RatePoint solve(double w1, double w2) {
    const RateVector objective{w1, w2, w1, w2, 0.0, 0.0, 0.0, 0.0};
    RateVector x{};
    solver_.maximize(objective, x);
    return {x[kR10] + x[kR12], x[kR20] + x[kR21]};
  }

 private:
  SimplexSolver solver_;
};

RatePoint direction_solve(Tracer& tracer, int k, int angles) {
  if (k == 0) return tracer.solve(1.0, 0.0);
  if (k == angles - 1) return tracer.solve(0.0, 1.0);
  const double theta = 0.5 * std::numbers::pi * k / (angles - 1);
  return tracer.solve(std::cos(theta), std::sin(theta));
}

bool same_point(RatePoint a, RatePoint b) {
  return std::abs(a.r1 - b.r1) <= 1e-12 && std::abs(a.r2 - b.r2) <= 1e-12;
}

void bisect(Tracer& tracer, int lo, RatePoint plo, int hi, RatePoint phi, int angles,
            std::vector<RatePoint>& out) {
  if (hi - lo <= 1 || same_point(plo, phi)) return;
  const int mid = lo + (hi - lo) / 2;
  const RatePoint pmid = direction_solve(tracer, mid, angles);
  out.push_back(pmid);
  bisect(tracer, lo, plo, mid, pmid, angles, out);
  bisect(tracer, mid, pmid, hi, phi, angles, out);
}

}  // namespace

void MutualInfoBundle::validate() const {
  const std::array<double, 10> all{a1, a2, a3, a4, a5, a6, b1, b2, b3, b4};
  for (double v : all) {
    if (!std::isfinite(v)) throw ValidationError("bundle: non-finite information constant");
  }
  const std::array<double, 9> nonneg{a1, a2, a3, a4, a5, b1, b2, b3, b4};
  for (double v : nonneg) {
    if (v < 0.0) throw ValidationError("bundle: negative information constant " + std::to_string(v));
  }
  if (b1 > b3 + 1e-9 || b2 > b3 + 1e-9) {
    throw ValidationError("bundle: single-user eavesdropper term exceeds the joint term");
  }
}

LinearProgram RatePolytope::to_linear_program() const {
  LinearProgram lp;
  lp.num_vars = kNumRateVars;
  lp.constraints.reserve(constraints.size());
  for (const auto& c : constraints) {
    lp.constraints.push_back({std::vector<double>(c.coeffs.begin(), c.coeffs.end()), c.relation, c.rhs});
  }
  return lp;
}

RatePolytope build_polytope(const MutualInfoBundle& m, BinningConstraint binning) {
  m.validate();
  RatePolytope p;
  p.constraints = {
      row({kR10, kT10}, m.a1),
      row({kR20, kT20}, m.a2),
      row({kR10, kR20, kT10, kT20}, m.a3),
      row({kR12, kT12}, m.a4),
      row({kR21, kT21}, m.a5),
      row({kR10, kR20, kR12, kR21}, m.a6),
      row({kT10}, m.b1),
      row({kT20}, m.b2),
      row({kT10, kT20}, m.b3),
      row({kT10, kT20, kT12, kT21}, m.b4,
          binning == BinningConstraint::exact ? Relation::equal : Relation::less_equal),
  };
  return p;
}

std::optional<WeightedOptimum> max_weighted_rate(const RatePolytope& p, double w1, double w2) {
  if (!(w1 >= 0.0) || !(w2 >= 0.0) || (w1 == 0.0 && w2 == 0.0)) {
    throw UsageError("max_weighted_rate: weights must be non-negative and not both zero");
  }
  SimplexSolver solver(p.to_linear_program());
  if (!solver.feasible()) return std::nullopt;
  const RateVector objective{w1, w2, w1, w2, 0.0, 0.0, 0.0, 0.0};
  WeightedOptimum opt;
  opt.value = solver.maximize(objective, opt.rates);
  opt.point = {opt.rates[kR10] + opt.rates[kR12], opt.rates[kR20] + opt.rates[kR21]};
  return opt;
}

Region2D trace_region(const RatePolytope& p, int angles) {
  if (angles < 2) throw UsageError("trace_region: angles must be at least 2");
  Tracer tracer(p);
  const RatePoint origin{0.0, 0.0};
  if (!tracer.feasible()) return hull2d({&origin, 1});

  std::vector<RatePoint> pts;
  pts.push_back(tracer.solve(1.0, kTieBreak));
  pts.push_back(tracer.solve(kTieBreak, 1.0));
  const RatePoint first = direction_solve(tracer, 0, angles);
  const RatePoint last = direction_solve(tracer, angles - 1, angles);
  pts.push_back(first);
  pts.push_back(last);
  bisect(tracer, 0, first, angles - 1, last, angles, pts);
  return hull2d(pts);
}

double binning_relaxation_gap(const MutualInfoBundle& m, int angles) {
  return hausdorff_distance(trace_region(build_polytope(m, BinningConstraint::exact), angles),
                            trace_region(build_polytope(m, BinningConstraint::at_most), angles));
}

}  // namespace secrecy
