#pragma once

// Gaussian two-user MAC with generalized feedback and an eavesdropper:
//   Y1 = sqrt(h21) X2 + N21      Y  = sqrt(h1) X1 + sqrt(h2) X2 + N1
//   Y2 = sqrt(h12) X1 + N12      Z  = sqrt(g1) X1 + sqrt(g2) X2 + N2
// with unit-variance real noise and average powers p1, p2. Inputs are
// jointly Gaussian, built from a common part U (powers pu1, pu2), the
// cooperative parts sent to the partner (p12, p21) and private parts
// (p10, p20).

#include <vector>

#include "secrecy/polytope.hpp"
#include "secrecy/region.hpp"

namespace secrecy {

struct GaussianChannel {
  double h1 = 0.0, h2 = 0.0;    // main channel
  double g1 = 0.0, g2 = 0.0;    // eavesdropper channel
  double h12 = 0.0, h21 = 0.0;  // user 1 -> user 2, user 2 -> user 1
  double p1 = 0.0, p2 = 0.0;    // power budgets

  /// Throws ValidationError on negative or non-finite fields.
  void validate() const;
};

struct PowerSplit {
  double pu1 = 0.0, p12 = 0.0, p10 = 0.0;
  double pu2 = 0.0, p21 = 0.0, p20 = 0.0;
};

/// Checks non-negativity and that each user's parts add up to its budget
/// within 1e-9. Throws ValidationError.
void validate_split(const GaussianChannel& ch, const PowerSplit& s);

struct TTerms {
  double t1 = 0.0, t2 = 0.0, t3 = 0.0;
};

struct SweepSpec {
  int steps_per_fraction = 21;
  int angles = kDefaultAngles;

  void validate() const;
};

enum class DfMode { partial, full };

/// h1 p1 + h2 p2 + 2 sqrt(h1 h2 pu1 pu2): received SNR at the receiver.
double main_snr(const GaussianChannel& ch, const PowerSplit& s);
/// Same with the eavesdropper gains.
double eavesdropper_snr(const GaussianChannel& ch, const PowerSplit& s);

/// Information constants of the partial decode-and-forward scheme.
MutualInfoBundle bundle_partial(const GaussianChannel& ch, const PowerSplit& s);

/// As bundle_partial with every eavesdropper term removed (no secrecy).
MutualInfoBundle bundle_regular(const GaussianChannel& ch, const PowerSplit& s);

/// Per-user fractions (f_u, f_c) on the grid {0, 1/(n-1), ..., 1} with
/// f_u + f_c <= 1; pu = f_u P, p12 = f_c P, p10 = (1 - f_u - f_c) P. The
/// result is the product over both users, user 1 slowest.
std::vector<PowerSplit> partial_splits(const GaussianChannel& ch, int steps_per_fraction);

/// The p10 = p20 = 0 slice: pu = f P and p12 = (1 - f) P per user.
std::vector<PowerSplit> full_splits(const GaussianChannel& ch, int steps_per_fraction);

/// Full decode-and-forward region for one split (p10 = p20 = 0 required).
Region2D full_split_region(const GaussianChannel& ch, const PowerSplit& s);

/// `threads` = 0 uses every hardware thread. Output never depends on it.
Region2D region_partial(const GaussianChannel& ch, const SweepSpec& spec, unsigned threads = 0);
Region2D region_full(const GaussianChannel& ch, const SweepSpec& spec, unsigned threads = 0);
Region2D regular_region(const GaussianChannel& ch, const SweepSpec& spec, unsigned threads = 0);

/// Closed-form secrecy sum rates, clamped below at 0.
double sum_rate_partial(const GaussianChannel& ch, const PowerSplit& s);
double sum_rate_full(const GaussianChannel& ch, const PowerSplit& s);

struct SumRateOptimum {
  double value = 0.0;
  PowerSplit split;
};

/// Grid maximum of the sum rate over partial_splits / full_splits. The first
/// grid split attaining the maximum is returned.
SumRateOptimum max_sum_rate(const GaussianChannel& ch, DfMode mode, const SweepSpec& spec);

/// T1, T2, T3 with R_partial = 0.5 min{log2 T1, log2 T2 + log2 T3}.
TTerms t_terms(const GaussianChannel& ch, const PowerSplit& s);

}  // namespace secrecy
