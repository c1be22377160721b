#pragma once

// Closed-form Gaussian instances of three special cases: the multiple-access
// wiretap channel (no feedback), the relay-eavesdropper channel (user 2
// only relays, decode-and-forward) and the virtual MISO wiretap channel
// (perfect feedback).

#include "secrecy/gaussian.hpp"
#include "secrecy/region.hpp"

namespace secrecy {

/// Jointly Gaussian inputs with powers p1, p2 and correlation rho in [0,1].
struct CorrelatedGaussianInput {
  double p1 = 0.0, p2 = 0.0, rho = 0.0;

  void validate() const;
};

/// Unclamped bounds for independent Gaussian inputs at powers (p1, p2):
///   r1_max  = I(X1;Y|X2) - I(X1;Z)     = C(h1 p1) - C(g1 p1 / (1 + g2 p2))
///   r2_max  = I(X2;Y|X1) - I(X2;Z)     = C(h2 p2) - C(g2 p2 / (1 + g1 p1))
///   sum_max = I(X1,X2;Y) - I(X1,X2;Z) = C(h1 p1 + h2 p2) - C(g1 p1 + g2 p2)
struct MacWiretapBounds {
  double r1_max = 0.0, r2_max = 0.0, sum_max = 0.0;
};
MacWiretapBounds mac_wiretap_bounds(const GaussianChannel& ch, double p1, double p2);

/// Union over per-user power backoff (fractions k/(steps-1) of each budget)
/// of the regions given by mac_wiretap_bounds. Feedback gains are ignored.
Region2D mac_wiretap_region(const GaussianChannel& ch, const SweepSpec& spec);

/// The three information terms of the relay-eavesdropper bound.
struct RelayTerms {
  double relay_link = 0.0;    // I(X1;Y2|X2) = C(h12 p1 (1 - rho^2))
  double main = 0.0;          // I(X1,X2;Y)
  double eavesdropper = 0.0;  // I(X1,X2;Z)
};
RelayTerms relay_terms(const GaussianChannel& ch, const CorrelatedGaussianInput& in);

/// [min{I(X1;Y2|X2), I(X1,X2;Y)} - I(X1,X2;Z)]^+
double relay_eavesdropper_rate(const GaussianChannel& ch, const CorrelatedGaussianInput& in);

/// [I(X1,X2;Y) - I(X1,X2;Z)]^+ for correlated inputs.
double miso_sum_rate(const GaussianChannel& ch, const CorrelatedGaussianInput& in);

}  // namespace secrecy
