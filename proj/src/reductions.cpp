#include "secrecy/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "secrecy/errors.hpp"
#include "secrecy/info.hpp"

namespace secrecy {

namespace {

double correlated_snr(double a1, double a2, const CorrelatedGaussianInput& in) {
  return a1 * in.p1 + a2 * in.p2 + 2.0 * in.rho * std::sqrt(a1 * a2 * in.p1 * in.p2);
}

}  // namespace

void CorrelatedGaussianInput::validate() const {
  if (!std::isfinite(p1) || !std::isfinite(p2) || p1 < 0.0 || p2 < 0.0) {
    throw ValidationError("input powers must be non-negative");
  }
  if (!(rho >= 0.0 && rho <= 1.0)) throw ValidationError("rho must lie in [0, 1]");
}

MacWiretapBounds mac_wiretap_bounds(const GaussianChannel& ch, double p1, double p2) {
  MacWiretapBounds b;
  b.r1_max = cap(ch.h1 * p1) - cap(ch.g1 * p1 / (1.0 + ch.g2 * p2));
  b.r2_max = cap(ch.h2 * p2) - cap(ch.g2 * p2 / (1.0 + ch.g1 * p1));
  b.sum_max = cap(ch.h1 * p1 + ch.h2 * p2) - cap(ch.g1 * p1 + ch.g2 * p2);
  return b;
}

Region2D mac_wiretap_region(const GaussianChannel& ch, const SweepSpec& spec) {
  ch.validate();
  spec.validate();
  const int n = spec.steps_per_fraction;
  std::vector<RatePoint> pts{{0.0, 0.0}};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const MacWiretapBounds b = mac_wiretap_bounds(ch, ch.p1 * i / (n - 1), ch.p2 * k / (n - 1));
      const Region2D r = box_sum_region(b.r1_max, b.r2_max, b.sum_max);
      pts.insert(pts.end(), r.hull().begin(), r.hull().end());
    }
  }
  return hull2d(pts);
}

RelayTerms relay_terms(const GaussianChannel& ch, const CorrelatedGaussianInput& in) {
  ch.validate();
  in.validate();
  RelayTerms t;
  t.relay_link = cap(ch.h12 * in.p1 * (1.0 - in.rho * in.rho));
  t.main = cap(correlated_snr(ch.h1, ch.h2, in));
  t.eavesdropper = cap(correlated_snr(ch.g1, ch.g2, in));
  return t;
}

double relay_eavesdropper_rate(const GaussianChannel& ch, const CorrelatedGaussianInput& in) {
  const RelayTerms t = relay_terms(ch, in);
  return std::max(0.0, std::min(t.relay_link, t.main) - t.eavesdropper);
}

double miso_sum_rate(const GaussianChannel& ch, const CorrelatedGaussianInput& in) {
  const RelayTerms t = relay_terms(ch, in);
  return std::max(0.0, t.main - t.eavesdropper);
}

}  // namespace secrecy
