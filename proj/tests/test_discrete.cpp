#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "secrecy/discrete.hpp"
#include "secrecy/errors.hpp"
#include "support/oracles.hpp"

using namespace secrecy;

namespace {

// Deterministic channel from a map (x1, x2) -> (y1, y2, y, z).
template <class F>
DiscreteMacGf deterministic_channel(std::size_t y1, std::size_t y2, std::size_t y, std::size_t z, F f) {
  DiscreteMacGf ch{2, 2, y1, y2, y, z, {}};
  ch.transition.assign(4 * ch.outputs_per_input(), 0.0);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      const auto [o1, o2, oy, oz] = f(a, b);
      ch.transition[(((((a * 2 + b) * y1 + o1) * y2 + o2) * y + oy) * z) + oz] = 1.0;
    }
  return ch;
}

void check_bundle_close(const MutualInfoBundle& a, const MutualInfoBundle& b, double tol) {
  CHECK(std::fabs(a.a1 - b.a1) <= tol);
  CHECK(std::fabs(a.a2 - b.a2) <= tol);
  CHECK(std::fabs(a.a3 - b.a3) <= tol);
  CHECK(std::fabs(a.a4 - b.a4) <= tol);
  CHECK(std::fabs(a.a5 - b.a5) <= tol);
  CHECK(std::fabs(a.a6 - b.a6) <= tol);
  CHECK(std::fabs(a.b1 - b.b1) <= tol);
  CHECK(std::fabs(a.b2 - b.b2) <= tol);
  CHECK(std::fabs(a.b3 - b.b3) <= tol);
  CHECK(std::fabs(a.b4 - b.b4) <= tol);
}

std::vector<std::size_t> shuffled(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("joint_law factorization") {
  std::mt19937_64 rng(4);
  const auto ch = oracle::random_channel_dm(rng, 2, 2, 2, 2, 2, 2);
  const auto law = oracle::random_law(rng, 2, 2, 2, 2, 2);
  const JointPmf j = joint_law(ch, law);
  CHECK(j.axis_names() == kJointAxes);
  // p(x1,x2) by direct summation over u, v1, v2
  const auto m = j.marginal_table({"X1", "X2"});
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      double direct = 0.0;
      for (std::size_t u = 0; u < 2; ++u) {
        double p1 = 0.0, p2 = 0.0;
        for (std::size_t v = 0; v < 2; ++v) {
          p1 += law.pv1x1_given_u[(u * 2 + v) * 2 + a];
          p2 += law.pv2x2_given_u[(u * 2 + v) * 2 + b];
        }
        direct += law.pu[u] * p1 * p2;
      }
      CHECK(m[a * 2 + b] == doctest::Approx(direct).epsilon(1e-12));
    }

  // point mass through a noiseless channel
  const auto noiseless = deterministic_channel(2, 2, 4, 1, [](std::size_t a, std::size_t b) {
    return std::array<std::size_t, 4>{b, a, a * 2 + b, 0};
  });
  InputLaw point{1, 1, 1, 2, 2, {1.0}, {0.0, 1.0}, {1.0, 0.0}};
  const JointPmf pm = joint_law(noiseless, point);
  CHECK(std::count_if(pm.probabilities().begin(), pm.probabilities().end(), [](double p) { return p > 0; }) == 1);

  InputLaw wrong = point;
  wrong.x1 = 3;
  CHECK_THROWS_AS(joint_law(noiseless, wrong), ValidationError);
}

TEST_CASE("bundle_dm matches direct summation") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const auto ch = oracle::random_channel_dm(rng, 2, 2 + t % 2, 2, 2, 2, 1 + t % 3);
    const auto law = oracle::random_law(rng, 2, 2, 1 + t % 2, ch.x1, ch.x2);
    const auto b = bundle_dm(ch, law);
    check_bundle_close(b, oracle::bundle_by_summation(ch, law), 1e-9);
    for (double v : {b.a1, b.a2, b.a3, b.a4, b.a5, b.b1, b.b2, b.b3, b.b4}) CHECK(v >= -1e-10);
  }
}

TEST_CASE("degenerate channels") {
  std::mt19937_64 rng(10);
  const auto law = oracle::random_law(rng, 2, 2, 2, 2, 2);

  const auto no_z = oracle::random_channel_dm(rng, 2, 2, 2, 2, 3, 1);
  const auto b = bundle_dm(no_z, law);
  CHECK(b.b1 == 0.0);
  CHECK(b.b4 == 0.0);
  CHECK(b.a6 == doctest::Approx(mutual_information(joint_law(no_z, law), {"X1", "X2"}, {"Y"})).epsilon(1e-12));

  const auto no_feedback = oracle::random_channel_dm(rng, 2, 2, 1, 1, 3, 2);
  CHECK(bundle_dm(no_feedback, law).a4 == 0.0);
  CHECK(bundle_dm(no_feedback, law).a5 == 0.0);

  const auto copy = deterministic_channel(2, 2, 2, 2, [](std::size_t a, std::size_t b) {
    return std::array<std::size_t, 4>{b, a, a ^ b, a ^ b};
  });
  CHECK(std::fabs(bundle_dm(copy, law).a6) < 1e-12);

  const auto deaf = oracle::random_channel_dm(rng, 2, 2, 2, 2, 1, 2);
  CHECK(region_partial_dm(deaf, LawSampler{SamplerMode::random, 30, 3}, AuxSizes{}).is_origin());

  CHECK(region_full_dm(no_feedback, LawSampler{SamplerMode::random, 30, 3}, 2).is_origin());
}

TEST_CASE("Z copy of Y with perfect links gives nothing under full DF") {
  const auto ch = deterministic_channel(2, 2, 4, 4, [](std::size_t a, std::size_t b) {
    return std::array<std::size_t, 4>{b, a, a * 2 + b, a * 2 + b};
  });
  CHECK(region_full_dm(ch, LawSampler{SamplerMode::random, 50, 2}, 2).is_origin());
  CHECK(region_full_dm(ch, LawSampler{SamplerMode::grid, 50, 2}, 2).is_origin());
}

TEST_CASE("noiseless binary MAC reaches (1,1)") {
  const auto ch = deterministic_channel(1, 1, 4, 1, [](std::size_t a, std::size_t b) {
    return std::array<std::size_t, 4>{0, 0, a * 2 + b, 0};
  });
  const Region2D r = region_partial_dm(ch, LawSampler{SamplerMode::grid, 50, 1}, AuxSizes{});
  CHECK(region_contains(r, {1.0, 1.0}, 1e-9));
  CHECK(region_support(r, 1, 1) <= 2.0 + 1e-9);
}

TEST_CASE("no eavesdropper output reproduces the no-secrecy region") {
  std::mt19937_64 rng(12);
  const auto ch = oracle::random_channel_dm(rng, 2, 2, 2, 2, 3, 1);
  const auto laws = sample_laws(LawSampler{SamplerMode::random, 40, 5}, AuxSizes{}, 2, 2);
  std::vector<RatePoint> pts;
  for (const auto& law : laws) {
    MutualInfoBundle m = oracle::bundle_by_summation(ch, law);
    // drop every eavesdropper term; a6 is then I(X1,X2;Y)
    m.a6 += m.b4;
    m.b1 = m.b2 = m.b3 = m.b4 = 0.0;
    const auto h = trace_region(build_polytope(m)).hull();
    pts.insert(pts.end(), h.begin(), h.end());
  }
  CHECK(hausdorff_distance(partial_region_from_laws(ch, laws), hull2d(pts)) <= 1e-9);
}

TEST_CASE("bundle_dm is invariant under relabeling") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    const auto ch = oracle::random_channel_dm(rng, 3, 2, 2, 2, 2, 2);
    const auto law = oracle::random_law(rng, 2, 3, 2, 3, 2);
    const auto pu = shuffled(rng, law.u), pv1 = shuffled(rng, law.v1), pv2 = shuffled(rng, law.v2);
    const auto px1 = shuffled(rng, law.x1), px2 = shuffled(rng, law.x2);

    InputLaw rl = law;
    for (std::size_t u = 0; u < law.u; ++u) {
      rl.pu[pu[u]] = law.pu[u];
      for (std::size_t v = 0; v < law.v1; ++v)
        for (std::size_t x = 0; x < law.x1; ++x)
          rl.pv1x1_given_u[(pu[u] * law.v1 + pv1[v]) * law.x1 + px1[x]] =
              law.pv1x1_given_u[(u * law.v1 + v) * law.x1 + x];
      for (std::size_t v = 0; v < law.v2; ++v)
        for (std::size_t x = 0; x < law.x2; ++x)
          rl.pv2x2_given_u[(pu[u] * law.v2 + pv2[v]) * law.x2 + px2[x]] =
              law.pv2x2_given_u[(u * law.v2 + v) * law.x2 + x];
    }
    DiscreteMacGf rc = ch;
    const std::size_t out = ch.outputs_per_input();
    for (std::size_t a = 0; a < ch.x1; ++a)
      for (std::size_t b = 0; b < ch.x2; ++b)
        std::copy_n(ch.transition.begin() + (a * ch.x2 + b) * out, out,
                    rc.transition.begin() + (px1[a] * ch.x2 + px2[b]) * out);
    check_bundle_close(bundle_dm(ch, law), bundle_dm(rc, rl), 1e-9);
  }
}

TEST_CASE("sampling is deterministic and prefix stable") {
  std::mt19937_64 rng(14);
  const auto ch = oracle::random_channel_dm(rng, 2, 2, 2, 2, 2, 2);
  const LawSampler s{SamplerMode::random, 40, 1234};
  const Region2D a = region_partial_dm(ch, s, AuxSizes{}, kDefaultAngles, 1);
  CHECK(a == region_partial_dm(ch, s, AuxSizes{}, kDefaultAngles, 3));
  const Region2D more = region_partial_dm(ch, LawSampler{SamplerMode::random, 80, 1234}, AuxSizes{});
  CHECK(region_subset(a, more, 1e-12));
  CHECK(sample_laws(s, AuxSizes{}, 2, 2).size() == 40);
  const auto grid = sample_laws(LawSampler{SamplerMode::grid, 25, 0}, AuxSizes{}, 2, 2);
  CHECK(grid.size() == 25);
  for (const auto& law : grid) CHECK_NOTHROW(law.validate());
  CHECK_THROWS_AS(sample_laws(LawSampler{SamplerMode::random, 0, 1}, AuxSizes{}, 2, 2), UsageError);
}

TEST_CASE("full DF sits inside partial DF with matched laws") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 5; ++t) {
    const auto ch = oracle::random_channel_dm(rng, 2, 2, 2, 2, 2, 2);
    const auto laws = sample_laws(LawSampler{SamplerMode::random, 60, static_cast<std::uint64_t>(t)},
                                  AuxSizes{2, 1, 1}, 2, 2);
    std::vector<InputLaw> lifted;
    for (const auto& l : laws) lifted.push_back(lift_full_law(l));
    CHECK(region_subset(full_region_from_laws(ch, laws), partial_region_from_laws(ch, lifted), 0.01));
  }
}

TEST_CASE("desk-scale guard") {
  std::mt19937_64 rng(16);
  const auto big = oracle::random_channel_dm(rng, 5, 2, 1, 1, 2, 1);
  CHECK_THROWS_AS(region_partial_dm(big, LawSampler{}, AuxSizes{}), UsageError);
  const auto ok = oracle::random_channel_dm(rng, 2, 2, 1, 1, 2, 1);
  CHECK_THROWS_AS(region_partial_dm(ok, LawSampler{}, AuxSizes{5, 2, 2}), UsageError);
  CHECK_THROWS_AS(region_full_dm(ok, LawSampler{}, 5), UsageError);
}
