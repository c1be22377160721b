#include "secrecy/info.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "secrecy/errors.hpp"

namespace secrecy {

namespace {

double plogp_sum(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h;
}

void check_probabilities(std::span<const double> probs, const char* what) {
  if (probs.empty()) throw ValidationError(std::string(what) + ": empty alphabet");
  double total = 0.0;
  for (double p : probs) {
    if (!(p >= 0.0) || !std::isfinite(p)) {
      throw ValidationError(std::string(what) + ": negative or non-finite probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kPmfTolerance) {
    throw ValidationError(std::string(what) + ": probabilities sum to " +
                          std::to_string(total) + ", expected 1");
  }
}

// Turns a raw entropy combination into an information value, absorbing
// rounding noise around zero.
double clamp_information(double value) {
  if (value >= 0.0) return value;
  if (value > -kNegativeInfoSlack) return 0.0;
  throw ConsistencyError("information quantity evaluated to " + std::to_string(value));
}

AxisSet merge(const AxisSet& a, const AxisSet& b) {
  AxisSet out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

void require_disjoint(const AxisSet& a, const AxisSet& b) {
  for (const auto& x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      throw UsageError("axis '" + x + "' appears in more than one axis set");
    }
  }
}

}  // namespace

double cap(double snr) {
  if (!(snr >= 0.0)) throw std::domain_error("cap: snr must be non-negative");
  return 0.5 * std::log2(1.0 + snr);
}

Pmf::Pmf(std::vector<double> probabilities) : probs_(std::move(probabilities)) {
  check_probabilities(probs_, "pmf");
}

Pmf Pmf::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("pmf: negative or non-finite weight");
    total += w;
  }
  if (!(total > 0.0)) throw ValidationError("pmf: weights sum to zero");
  for (double& w : weights) w /= total;
  return Pmf(std::move(weights));
}

double entropy(const Pmf& p) { return plogp_sum(p.probabilities()); }

JointPmf::JointPmf(std::vector<std::string> axis_names, std::vector<std::size_t> alphabet_sizes,
                   std::vector<double> probabilities)
    : names_(std::move(axis_names)),
      sizes_(std::move(alphabet_sizes)),
      probs_(std::move(probabilities)) {
  if (names_.size() != sizes_.size()) throw ValidationError("joint pmf: axis/size count mismatch");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (sizes_[i] == 0) throw ValidationError("joint pmf: axis '" + names_[i] + "' is empty");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) throw ValidationError("joint pmf: duplicate axis '" + names_[i] + "'");
    }
  }
  const std::size_t cells =
      std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{1}, std::multiplies<>());
  if (probs_.size() != cells) throw ValidationError("joint pmf: table size does not match alphabets");
  check_probabilities(probs_, "joint pmf");

  strides_.assign(sizes_.size(), 1);
  for (std::size_t i = sizes_.size(); i-- > 1;) strides_[i - 1] = strides_[i] * sizes_[i];
}

std::size_t JointPmf::axis_index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  throw UsageError("joint pmf has no axis '" + std::string(name) + "'");
}

std::vector<std::size_t> JointPmf::resolve(const AxisSet& axes) const {
  std::vector<std::size_t> idx;
  idx.reserve(axes.size());
  for (const auto& a : axes) {
    const std::size_t i = axis_index(a);
    if (std::find(idx.begin(), idx.end(), i) != idx.end()) {
      throw UsageError("axis '" + a + "' listed twice");
    }
    idx.push_back(i);
  }
  return idx;
}

std::vector<double> JointPmf::marginal_table(const AxisSet& axes) const {
  const auto idx = resolve(axes);
  std::vector<std::size_t> out_strides(idx.size(), 1);
  std::size_t out_cells = 1;
  for (std::size_t k = idx.size(); k-- > 0;) {
    out_strides[k] = out_cells;
    out_cells *= sizes_[idx[k]];
  }
  std::vector<double> out(out_cells, 0.0);
  for (std::size_t flat = 0; flat < probs_.size(); ++flat) {
    const double p = probs_[flat];
    if (p == 0.0) continue;
    std::size_t target = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const std::size_t digit = (flat / strides_[idx[k]]) % sizes_[idx[k]];
      target += digit * out_strides[k];
    }
    out[target] += p;
  }
  return out;
}

Pmf JointPmf::marginal(const AxisSet& axes) const {
  // Summation can drift by a few ulps; renormalize the exact-sum result.
  return Pmf::normalized(marginal_table(axes));
}

double JointPmf::entropy(const AxisSet& axes) const {
  if (axes.empty()) return 0.0;
  return plogp_sum(marginal_table(axes));
}

double mutual_information(const JointPmf& joint, const AxisSet& a, const AxisSet& b) {
  if (a.empty() || b.empty()) throw UsageError("mutual_information: empty axis set");
  require_disjoint(a, b);
  return clamp_information(joint.entropy(a) + joint.entropy(b) - joint.entropy(merge(a, b)));
}

double conditional_mi(const JointPmf& joint, const AxisSet& a, const AxisSet& b, const AxisSet& c) {
  if (a.empty() || b.empty()) throw UsageError("conditional_mi: empty axis set");
  require_disjoint(a, b);
  require_disjoint(a, c);
  require_disjoint(b, c);
  if (c.empty()) return mutual_information(joint, a, b);
  const AxisSet ac = merge(a, c);
  const AxisSet bc = merge(b, c);
  const AxisSet abc = merge(a, bc);
  return clamp_information(joint.entropy(ac) + joint.entropy(bc) - joint.entropy(abc) -
                           joint.entropy(c));
}

}  // namespace secrecy
