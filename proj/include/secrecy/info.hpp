#pragma once

// Finite-alphabet information measures (in bits) and the Gaussian capacity
// function C(x) = 0.5 log2(1 + x).

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace secrecy {

/// Normalization tolerance for pmf validation.
inline constexpr double kPmfTolerance = 1e-12;

/// Negative information values above this are treated as rounding noise.
inline constexpr double kNegativeInfoSlack = 1e-10;

/// Capacity of a real AWGN channel at the given SNR, in bits per use.
/// Throws std::domain_error for negative (or NaN) snr.
double cap(double snr);

/// Probability vector over a finite alphabet.
class Pmf {
 public:
  /// Validates non-negativity and normalization; never renormalizes.
  explicit Pmf(std::vector<double> probabilities);

  /// Explicit renormalization of non-negative weights with a positive sum.
  static Pmf normalized(std::vector<double> weights);

  std::span<const double> probabilities() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }

 private:
  std::vector<double> probs_;
};

/// Shannon entropy in bits, with 0 log 0 = 0.
double entropy(const Pmf& p);

using AxisSet = std::vector<std::string>;

/// Dense joint pmf over a tuple of named finite alphabets, stored row-major
/// with the first axis slowest.
class JointPmf {
 public:
  JointPmf(std::vector<std::string> axis_names,
           std::vector<std::size_t> alphabet_sizes,
           std::vector<double> probabilities);

  const std::vector<std::string>& axis_names() const { return names_; }
  const std::vector<std::size_t>& alphabet_sizes() const { return sizes_; }
  std::span<const double> probabilities() const { return probs_; }
  std::size_t rank() const { return names_.size(); }

  /// Position of a named axis; throws UsageError if absent.
  std::size_t axis_index(std::string_view name) const;

  /// Marginal over the listed axes, row-major in the order given.
  std::vector<double> marginal_table(const AxisSet& axes) const;

  Pmf marginal(const AxisSet& axes) const;

  /// Joint entropy of the listed axes. The empty set has entropy 0.
  double entropy(const AxisSet& axes) const;

 private:
  std::vector<std::size_t> resolve(const AxisSet& axes) const;

  std::vector<std::string> names_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::vector<double> probs_;
};

/// I(A;B) = H(A) + H(B) - H(A,B). Axis sets must be disjoint and non-empty.
double mutual_information(const JointPmf& joint, const AxisSet& a, const AxisSet& b);

/// I(A;B|C) = H(A,C) + H(B,C) - H(A,B,C) - H(C). C may be empty.
double conditional_mi(const JointPmf& joint, const AxisSet& a, const AxisSet& b,
                      const AxisSet& c);

}  // namespace secrecy
