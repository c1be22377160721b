#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "secrecy/errors.hpp"
#include "secrecy/polytope.hpp"
#include "secrecy/simplex.hpp"
#include "support/oracles.hpp"

using namespace secrecy;

namespace {

MutualInfoBundle example_bundle() { return {1, 1, 1, 1, 1, 1.5, 0.2, 0.2, 0.3, 0.4}; }

// Plain uniform sweep over the angle grid, no bisection.
Region2D uniform_trace(const RatePolytope& p, int angles) {
  std::vector<RatePoint> pts;
  for (int k = 0; k < angles; ++k) {
    const double th = std::numbers::pi / 2 * k / (angles - 1);
    if (auto o = max_weighted_rate(p, std::cos(th), std::sin(th))) pts.push_back(o->point);
  }
  if (auto o = max_weighted_rate(p, 1.0, 1e-7)) pts.push_back(o->point);
  if (auto o = max_weighted_rate(p, 1e-7, 1.0)) pts.push_back(o->point);
  if (pts.empty()) return Region2D{};
  return hull2d(pts);
}

bool same_region(const Region2D& a, const Region2D& b, double tol) { return hausdorff_distance(a, b) <= tol; }

}  // namespace

TEST_CASE("simplex on small programs") {
  // max x + y s.t. x + 2y <= 4, 3x + y <= 6
  LinearProgram lp{2, {{{1, 2}, Relation::less_equal, 4}, {{3, 1}, Relation::less_equal, 6}}};
  SimplexSolver s(lp);
  REQUIRE(s.feasible());
  std::vector<double> obj{1, 1}, x(2);
  CHECK(s.maximize(obj, x) == doctest::Approx(2.8));
  CHECK(x[0] == doctest::Approx(1.6));
  // warm start in another direction
  obj = {1, 0};
  CHECK(s.maximize(obj, x) == doctest::Approx(2.0));

  LinearProgram bad{1, {{{1}, Relation::equal, -1}}};
  SimplexSolver b(bad);
  CHECK_FALSE(b.feasible());

  LinearProgram open{2, {{{1, -1}, Relation::less_equal, 1}}};
  SimplexSolver o(open);
  std::vector<double> o_obj{1, 1}, ox(2);
  CHECK_THROWS_AS(o.maximize(o_obj, ox), ConsistencyError);
}

TEST_CASE("build_polytope rows") {
  const auto p = build_polytope(example_bundle());
  CHECK(p.constraints.size() == 10);
  int equalities = 0;
  for (const auto& c : p.constraints) {
    if (c.relation == Relation::equal) {
      ++equalities;
      CHECK(c.rhs == doctest::Approx(0.4));
      CHECK(c.coeffs[kT10] == 1.0);
      CHECK(c.coeffs[kT21] == 1.0);
      CHECK(c.coeffs[kR10] == 0.0);
    }
    CHECK(std::isfinite(c.rhs));
  }
  CHECK(equalities == 1);
  MutualInfoBundle bad = example_bundle();
  bad.b1 = 0.5;  // above b3
  CHECK_THROWS_AS(build_polytope(bad), ValidationError);
  bad = example_bundle();
  bad.a2 = -0.1;
  CHECK_THROWS_AS(build_polytope(bad), ValidationError);
}

TEST_CASE("max_weighted_rate examples") {
  const auto zero = build_polytope(MutualInfoBundle{});
  auto o = max_weighted_rate(zero, 1, 1);
  REQUIRE(o);
  CHECK(o->value == doctest::Approx(0.0));
  CHECK(o->point.r1 == doctest::Approx(0.0));

  MutualInfoBundle infeasible = example_bundle();
  infeasible.b4 = infeasible.b3 + infeasible.a4 + infeasible.a5 + 0.1;
  infeasible.a6 = 5;
  CHECK_FALSE(max_weighted_rate(build_polytope(infeasible), 1, 1));

  const auto p = build_polytope(example_bundle());
  o = max_weighted_rate(p, 1, 1);
  REQUIRE(o);
  CHECK(o->value == doctest::Approx(1.5).epsilon(1e-9));
  CHECK(*oracle::grid_weighted_rate(example_bundle(), 1, 1, 0.01) == doctest::Approx(1.5).epsilon(1e-9));
  CHECK_THROWS_AS(max_weighted_rate(p, 0, 0), UsageError);
  CHECK_THROWS_AS(max_weighted_rate(p, -1, 1), UsageError);
}

TEST_CASE("LP agrees with vertex enumeration and the grid oracle") {
  std::mt19937_64 rng(2024);
  const double dirs[][2] = {{1, 0}, {0, 1}, {1, 1}, {0.3, 1}, {1, 0.25}, {0.8, 0.6}};
  for (int t = 0; t < 25; ++t) {
    const auto m = oracle::random_bundle(rng, 1.5);
    const auto p = build_polytope(m);
    const auto verts = oracle::polytope_vertices(m);
    for (const auto& w : dirs) {
      const auto lp = max_weighted_rate(p, w[0], w[1]);
      const auto exact = oracle::vertex_weighted_rate(verts, w[0], w[1]);
      const auto grid = oracle::grid_weighted_rate(m, w[0], w[1], 0.001);
      REQUIRE(lp.has_value() == exact.has_value());
      REQUIRE(lp.has_value() == grid.has_value());
      if (!lp) continue;
      CHECK(std::fabs(lp->value - *exact) < 1e-9);
      CHECK(std::fabs(lp->value - *grid) < 0.0015);
      CHECK(lp->point.r1 == doctest::Approx(lp->rates[kR10] + lp->rates[kR12]));
    }
  }
}

TEST_CASE("trace_region examples") {
  CHECK(trace_region(build_polytope(MutualInfoBundle{})).is_origin());
  MutualInfoBundle infeasible{1, 1, 1, 0.1, 0.1, 1, 0.1, 0.1, 0.1, 1.0};
  CHECK(trace_region(build_polytope(infeasible)).is_origin());

  const Region2D r = trace_region(build_polytope(example_bundle()));
  CHECK(region_support(r, 1, 1) == doctest::Approx(1.5).epsilon(1e-9));
  // R12 lifts R1 past a1, so the sum face is the whole boundary
  CHECK(r.r1_max() == doctest::Approx(1.5));
  CHECK(r.r2_max() == doctest::Approx(1.5));
  CHECK(r.hull().size() == 2);
  MutualInfoBundle capped = example_bundle();
  capped.a3 = 1.5;
  capped.a4 = capped.a5 = 0.25;
  const Region2D pent = trace_region(build_polytope(capped));
  CHECK(pent.hull().size() == 4);
  CHECK(pent.r1_max() == doctest::Approx(1.25));
  CHECK(region_support(pent, 1, 1) == doctest::Approx(1.5));
  const auto verts = oracle::polytope_vertices(capped);
  CHECK(region_support(pent, 1, 1) == doctest::Approx(*oracle::vertex_weighted_rate(verts, 1, 1)));
  CHECK(pent.r1_max() == doctest::Approx(*oracle::vertex_weighted_rate(verts, 1, 0)));
  CHECK_THROWS_AS(trace_region(build_polytope(example_bundle()), 1), UsageError);
}

TEST_CASE("trace_region matches a plain uniform sweep and is stable in the angle count") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 40; ++t) {
    const auto p = build_polytope(oracle::random_bundle(rng, 1.5));
    const Region2D r181 = trace_region(p, 181);
    CHECK(same_region(r181, uniform_trace(p, 181), 1e-9));
    const Region2D r361 = trace_region(p, 361);
    CHECK(same_region(r181, r361, 1e-9));
    CHECK(region_subset(r181, r361, 1e-9));
    CHECK(region_subset(trace_region(p, 10), r181, 1e-9));
    CHECK(region_contains(r181, {0, 0}, 0));
    const auto& h = r181.hull();
    for (std::size_t i = 1; i < h.size(); ++i) {
      // only the first edge may be flat and only the last vertical
      CHECK(h[i].r1 >= h[i - 1].r1);
      CHECK(h[i].r2 <= h[i - 1].r2);
      if (i + 1 < h.size()) CHECK(h[i].r1 > h[i - 1].r1);
      if (i > 1) CHECK(h[i].r2 < h[i - 1].r2);
    }
  }
}

TEST_CASE("region monotone in the bundle constants") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> bump(0.0, 0.4);
  for (int t = 0; t < 60; ++t) {
    const auto m = oracle::random_bundle(rng, 1.5);
    const Region2D base = trace_region(build_polytope(m));
    MutualInfoBundle up = m;
    double* field[] = {&up.a1, &up.a2, &up.a3, &up.a4, &up.a5, &up.a6};
    *field[t % 6] += bump(rng);
    CHECK(region_subset(base, trace_region(build_polytope(up)), 1e-9));
    MutualInfoBundle more_b4 = m;
    more_b4.b4 += bump(rng);
    CHECK(region_subset(trace_region(build_polytope(more_b4)), base, 1e-9));
  }
}

TEST_CASE("binning relaxation diagnostic") {
  // Equality and inequality agree when b4 is easily absorbed.
  CHECK(binning_relaxation_gap(example_bundle()) == doctest::Approx(0.0).epsilon(1e-12));
  MutualInfoBundle infeasible{1, 1, 1, 0.1, 0.1, 1, 0.1, 0.1, 0.1, 1.0};
  CHECK(binning_relaxation_gap(infeasible) > 0.1);
  CHECK(trace_region(build_polytope(infeasible, BinningConstraint::at_most)).r1_max() > 0.0);
}

TEST_CASE("hull2d examples") {
  const std::vector<RatePoint> diag{{1, 0}, {0, 1}, {0.5, 0.5}};
  const Region2D h = hull2d(diag);
  REQUIRE(h.hull().size() == 2);
  CHECK(h.hull()[0] == RatePoint{0, 1});
  CHECK(h.hull()[1] == RatePoint{1, 0});

  const std::vector<RatePoint> one{{1, 1}};
  const auto box = hull2d(one).hull();
  REQUIRE(box.size() == 3);
  CHECK(box[0] == RatePoint{0, 1});
  CHECK(box[1] == RatePoint{1, 1});
  CHECK(box[2] == RatePoint{1, 0});

  CHECK_THROWS_AS(hull2d(std::vector<RatePoint>{}), UsageError);
  CHECK_THROWS_AS(hull2d(std::vector<RatePoint>{{-1, 0}}), ValidationError);
}

TEST_CASE("hull2d matches the brute-force hull and is idempotent") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int t = 0; t < 20; ++t) {
    std::vector<RatePoint> pts(100);
    for (auto& p : pts) p = {u(rng), u(rng)};
    const Region2D h = hull2d(pts);
    CHECK(h.hull() == oracle::brute_hull(pts));
    CHECK(hull2d(h.hull()) == h);
  }
}

TEST_CASE("region_contains") {
  const Region2D box = hull2d(std::vector<RatePoint>{{1, 1}});
  CHECK(region_contains(box, {0, 0}, 0));
  CHECK(region_contains(box, {0.5, 0.999}, 0));
  CHECK_FALSE(region_contains(box, {1.1, 0.5}, 1e-6));
  CHECK(region_contains(box, {1.05, 0.5}, 0.1));
  CHECK_FALSE(region_contains(Region2D{}, {0.1, 0}, 1e-6));
  CHECK(region_contains(Region2D{}, {0, 0}, 0));
  const Region2D tri = hull2d(std::vector<RatePoint>{{1, 0}, {0, 1}});
  CHECK(region_contains(tri, {0.5, 0.5}, 1e-12));
  CHECK_FALSE(region_contains(tri, {0.6, 0.6}, 1e-3));
  CHECK(distance_to_region(tri, {1, 1}) == doctest::Approx(std::sqrt(0.5)));
}
