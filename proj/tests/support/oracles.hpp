#pragma once

// Independent reference computations used only by the tests.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "secrecy/discrete.hpp"
#include "secrecy/gaussian.hpp"
#include "secrecy/polytope.hpp"
#include "secrecy/region.hpp"

namespace oracle {

// 0.5 log2(1+x) in extended precision.
double cap_ref(double x);

double entropy_ref(const std::vector<double>& p);

// Weighted-rate maximum with R10, R20 on a grid of the given step and the
// remaining six variables eliminated exactly. nullopt when infeasible.
std::optional<double> grid_weighted_rate(const secrecy::MutualInfoBundle& m, double w1, double w2,
                                         double step);

// All vertices of the 8-variable polytope by brute-force active-set enumeration.
std::vector<secrecy::RateVector> polytope_vertices(const secrecy::MutualInfoBundle& m);
std::optional<double> vertex_weighted_rate(const std::vector<secrecy::RateVector>& vertices, double w1,
                                           double w2);

// O(n^3) hull: vertices of the upper-right boundary of the downward closure.
std::vector<secrecy::RatePoint> brute_hull(const std::vector<secrecy::RatePoint>& points);

// Ten constants by direct summation over the full joint, without core-info.
secrecy::MutualInfoBundle bundle_by_summation(const secrecy::DiscreteMacGf& ch, const secrecy::InputLaw& law);

// Monte Carlo estimates (bits) from log-density ratios of sampled Gaussian inputs.
// The MAC wiretap differences are not clamped at zero.
struct MacWiretapEstimate {
  double r1 = 0.0, r2 = 0.0, sum = 0.0;
};
MacWiretapEstimate mc_mac_wiretap(const secrecy::GaussianChannel& ch, std::size_t n, std::uint64_t seed);
double mc_relay_eavesdropper(const secrecy::GaussianChannel& ch, double rho, std::size_t n, std::uint64_t seed);
double mc_miso(const secrecy::GaussianChannel& ch, double rho, std::size_t n, std::uint64_t seed);

// Random instances.
secrecy::MutualInfoBundle random_bundle(std::mt19937_64& rng, double max_bits);
secrecy::GaussianChannel random_channel(std::mt19937_64& rng);
secrecy::PowerSplit random_split(std::mt19937_64& rng, const secrecy::GaussianChannel& ch, bool cooperative_only);
std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n);
secrecy::DiscreteMacGf random_channel_dm(std::mt19937_64& rng, std::size_t x1, std::size_t x2, std::size_t y1,
                                         std::size_t y2, std::size_t y, std::size_t z);
secrecy::InputLaw random_law(std::mt19937_64& rng, std::size_t u, std::size_t v1, std::size_t v2, std::size_t x1,
                             std::size_t x2);

}  // namespace oracle
