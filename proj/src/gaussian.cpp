#include "secrecy/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "secrecy/errors.hpp"
#include "secrecy/info.hpp"
#include "secrecy/sweep.hpp"

namespace secrecy {

namespace {

constexpr double kBudgetTolerance = 1e-9;

void require_nonneg(double v, const char* name) {
  if (!std::isfinite(v) || v < 0.0) {
    throw ValidationError(std::string(name) + " must be a non-negative finite number");
  }
}

double coherent_snr(double a1, double a2, const GaussianChannel& ch, const PowerSplit& s) {
  return a1 * ch.p1 + a2 * ch.p2 + 2.0 * std::sqrt(a1 * a2 * s.pu1 * s.pu2);
}

// Grid value k/(n-1) of a budget.
double fraction(double budget, int k, int n) { return budget * k / (n - 1); }

}  // namespace

void GaussianChannel::validate() const {
  require_nonneg(h1, "h1");
  require_nonneg(h2, "h2");
  require_nonneg(g1, "g1");
  require_nonneg(g2, "g2");
  require_nonneg(h12, "h12");
  require_nonneg(h21, "h21");
  require_nonneg(p1, "p1");
  require_nonneg(p2, "p2");
}

void validate_split(const GaussianChannel& ch, const PowerSplit& s) {
  require_nonneg(s.pu1, "pu1");
  require_nonneg(s.p12, "p12");
  require_nonneg(s.p10, "p10");
  require_nonneg(s.pu2, "pu2");
  require_nonneg(s.p21, "p21");
  require_nonneg(s.p20, "p20");
  if (std::abs(s.pu1 + s.p12 + s.p10 - ch.p1) > kBudgetTolerance) {
    throw ValidationError("power split for user 1 does not add up to p1");
  }
  if (std::abs(s.pu2 + s.p21 + s.p20 - ch.p2) > kBudgetTolerance) {
    throw ValidationError("power split for user 2 does not add up to p2");
  }
}

void SweepSpec::validate() const {
  if (steps_per_fraction < 2) throw ValidationError("steps must be at least 2");
  if (angles < 2) throw ValidationError("angles must be at least 2");
}

double main_snr(const GaussianChannel& ch, const PowerSplit& s) { return coherent_snr(ch.h1, ch.h2, ch, s); }

double eavesdropper_snr(const GaussianChannel& ch, const PowerSplit& s) {
  return coherent_snr(ch.g1, ch.g2, ch, s);
}

MutualInfoBundle bundle_partial(const GaussianChannel& ch, const PowerSplit& s) {
  ch.validate();
  validate_split(ch, s);
  MutualInfoBundle m;
  m.a1 = cap(ch.h1 * s.p10);
  m.a2 = cap(ch.h2 * s.p20);
  m.a3 = cap(ch.h1 * s.p10 + ch.h2 * s.p20);
  m.a4 = cap(ch.h12 * s.p12 / (1.0 + ch.h12 * s.p10));
  m.a5 = cap(ch.h21 * s.p21 / (1.0 + ch.h21 * s.p20));
  m.b1 = cap(ch.g1 * s.p10);
  m.b2 = cap(ch.g2 * s.p20);
  m.b3 = cap(ch.g1 * s.p10 + ch.g2 * s.p20);
  m.b4 = cap(eavesdropper_snr(ch, s));
  m.a6 = cap(main_snr(ch, s)) - m.b4;
  return m;
}

MutualInfoBundle bundle_regular(const GaussianChannel& ch, const PowerSplit& s) {
  MutualInfoBundle m = bundle_partial(ch, s);
  m.b1 = m.b2 = m.b3 = m.b4 = 0.0;
  m.a6 = cap(main_snr(ch, s));
  return m;
}

std::vector<PowerSplit> partial_splits(const GaussianChannel& ch, int n) {
  if (n < 2) throw ValidationError("steps must be at least 2");
  struct Part {
    double pu, pc, p0;
  };
  auto per_user = [n](double budget) {
    std::vector<Part> parts;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; i + j < n; ++j) {
        parts.push_back({fraction(budget, i, n), fraction(budget, j, n), fraction(budget, n - 1 - i - j, n)});
      }
    }
    return parts;
  };
  const auto u1 = per_user(ch.p1);
  const auto u2 = per_user(ch.p2);
  std::vector<PowerSplit> out;
  out.reserve(u1.size() * u2.size());
  for (const auto& a : u1) {
    for (const auto& b : u2) out.push_back({a.pu, a.pc, a.p0, b.pu, b.pc, b.p0});
  }
  return out;
}

std::vector<PowerSplit> full_splits(const GaussianChannel& ch, int n) {
  if (n < 2) throw ValidationError("steps must be at least 2");
  std::vector<PowerSplit> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      out.push_back({fraction(ch.p1, i, n), fraction(ch.p1, n - 1 - i, n), 0.0,
                     fraction(ch.p2, k, n), fraction(ch.p2, n - 1 - k, n), 0.0});
    }
  }
  return out;
}

Region2D full_split_region(const GaussianChannel& ch, const PowerSplit& s) {
  ch.validate();
  validate_split(ch, s);
  if (s.p10 > 0.0 || s.p20 > 0.0) {
    throw UsageError("full decode-and-forward uses no private power (p10 = p20 = 0)");
  }
  const double link1 = cap(ch.h12 * s.p12);
  const double link2 = cap(ch.h21 * s.p21);
  const double sum = std::min(link1 + link2, cap(main_snr(ch, s))) - cap(eavesdropper_snr(ch, s));
  return box_sum_region(link1, link2, sum);
}

Region2D region_partial(const GaussianChannel& ch, const SweepSpec& spec, unsigned threads) {
  ch.validate();
  spec.validate();
  const auto splits = partial_splits(ch, spec.steps_per_fraction);
  return union_hull(
      splits.size(),
      [&](std::size_t i) { return trace_region(build_polytope(bundle_partial(ch, splits[i])), spec.angles); },
      threads);
}

Region2D regular_region(const GaussianChannel& ch, const SweepSpec& spec, unsigned threads) {
  ch.validate();
  spec.validate();
  const auto splits = partial_splits(ch, spec.steps_per_fraction);
  return union_hull(
      splits.size(),
      [&](std::size_t i) { return trace_region(build_polytope(bundle_regular(ch, splits[i])), spec.angles); },
      threads);
}

Region2D region_full(const GaussianChannel& ch, const SweepSpec& spec, unsigned threads) {
  ch.validate();
  spec.validate();
  const auto splits = full_splits(ch, spec.steps_per_fraction);
  return union_hull(
      splits.size(), [&](std::size_t i) { return full_split_region(ch, splits[i]); }, threads);
}

double sum_rate_partial(const GaussianChannel& ch, const PowerSplit& s) {
  ch.validate();
  validate_split(ch, s);
  const double cooperative = cap(ch.h12 * s.p12 / (1.0 + ch.h12 * s.p10)) +
                             cap(ch.h21 * s.p21 / (1.0 + ch.h21 * s.p20)) +
                             cap(ch.h1 * s.p10 + ch.h2 * s.p20);
  return std::max(0.0, std::min(cap(main_snr(ch, s)), cooperative) - cap(eavesdropper_snr(ch, s)));
}

double sum_rate_full(const GaussianChannel& ch, const PowerSplit& s) {
  ch.validate();
  validate_split(ch, s);
  if (s.p10 > 0.0 || s.p20 > 0.0) {
    throw UsageError("full decode-and-forward uses no private power (p10 = p20 = 0)");
  }
  const double cooperative = cap(ch.h12 * s.p12) + cap(ch.h21 * s.p21);
  return std::max(0.0, std::min(cap(main_snr(ch, s)), cooperative) - cap(eavesdropper_snr(ch, s)));
}

SumRateOptimum max_sum_rate(const GaussianChannel& ch, DfMode mode, const SweepSpec& spec) {
  ch.validate();
  spec.validate();
  const auto splits = mode == DfMode::partial ? partial_splits(ch, spec.steps_per_fraction)
                                              : full_splits(ch, spec.steps_per_fraction);
  SumRateOptimum best{-1.0, {}};
  for (const auto& s : splits) {
    const double v = mode == DfMode::partial ? sum_rate_partial(ch, s) : sum_rate_full(ch, s);
    if (v > best.value) best = {v, s};
  }
  return best;
}

TTerms t_terms(const GaussianChannel& ch, const PowerSplit& s) {
  ch.validate();
  validate_split(ch, s);
  const double eve = 1.0 + eavesdropper_snr(ch, s);
  TTerms t;
  t.t1 = (1.0 + main_snr(ch, s)) / eve;
  t.t2 = (1.0 + ch.h12 * (s.p10 + s.p12)) * (1.0 + ch.h21 * (s.p20 + s.p21)) / eve;
  t.t3 = (1.0 + ch.h1 * s.p10 + ch.h2 * s.p20) / ((1.0 + s.p10 * ch.h12) * (1.0 + s.p20 * ch.h21));
  return t;
}

}  // namespace secrecy
