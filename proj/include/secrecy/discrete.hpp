#pragma once

// Discrete memoryless MAC with generalized feedback and an eavesdropper,
// evaluated on explicit finite alphabets by sampling input laws of the form
// p(u) p(v1,x1|u) p(v2,x2|u).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "secrecy/info.hpp"
#include "secrecy/polytope.hpp"
#include "secrecy/region.hpp"

namespace secrecy {

/// Largest alphabet accepted by the region evaluators.
inline constexpr std::size_t kMaxAlphabet = 4;

/// Axis names of the full joint law, in storage order.
inline const AxisSet kJointAxes{"U", "V1", "V2", "X1", "X2", "Y1", "Y2", "Y", "Z"};

struct DiscreteMacGf {
  std::size_t x1 = 1, x2 = 1, y1 = 1, y2 = 1, y = 1, z = 1;
  /// p(y1,y2,y,z | x1,x2), row-major over (x1, x2, y1, y2, y, z).
  std::vector<double> transition;

  std::size_t outputs_per_input() const { return y1 * y2 * y * z; }
  /// Throws ValidationError unless sizes are positive and every (x1,x2)
  /// slice is a pmf within 1e-12.
  void validate() const;
};

struct InputLaw {
  std::size_t u = 1, v1 = 1, v2 = 1, x1 = 1, x2 = 1;
  std::vector<double> pu;             // [u]
  std::vector<double> pv1x1_given_u;  // [u][v1][x1]
  std::vector<double> pv2x2_given_u;  // [u][v2][x2]

  void validate() const;
};

struct AuxSizes {
  std::size_t u = 2, v1 = 2, v2 = 2;
};

enum class SamplerMode { grid, random };

/// grid: U uniform and every conditional slice uniform over a non-empty
/// subset of its (v, x) cells, enumerated in mixed-radix order (evenly
/// strided down to `samples` laws when there are more), preceded by the
/// all-uniform law. random: each pmf drawn from a flat Dirichlet, sample i
/// seeded from (seed, i) only.
struct LawSampler {
  SamplerMode mode = SamplerMode::random;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

JointPmf joint_law(const DiscreteMacGf& ch, const InputLaw& law);

MutualInfoBundle bundle_dm(const DiscreteMacGf& ch, const InputLaw& law);

/// Bounds of the full decode-and-forward region for one law; V1, V2 are
/// ignored (marginalized out).
struct FullDfBounds {
  double r1_max = 0.0;   // I(X1;Y2|X2,U)
  double r2_max = 0.0;   // I(X2;Y1|X1,U)
  double sum_max = 0.0;  // min{r1_max + r2_max, I(X1,X2;Y)} - I(X1,X2;Z)
};
FullDfBounds full_df_bounds(const DiscreteMacGf& ch, const InputLaw& law);

/// Embeds a law with trivial V into one with V1 = X1 and V2 = X2.
InputLaw lift_full_law(const InputLaw& law);

std::vector<InputLaw> sample_laws(const LawSampler& sampler, const AuxSizes& aux, std::size_t x1,
                                  std::size_t x2);

Region2D partial_region_from_laws(const DiscreteMacGf& ch, const std::vector<InputLaw>& laws,
                                  int angles = kDefaultAngles, unsigned threads = 0);
Region2D full_region_from_laws(const DiscreteMacGf& ch, const std::vector<InputLaw>& laws,
                               unsigned threads = 0);

/// Throws UsageError when any alphabet exceeds kMaxAlphabet.
Region2D region_partial_dm(const DiscreteMacGf& ch, const LawSampler& sampler, const AuxSizes& aux,
                           int angles = kDefaultAngles, unsigned threads = 0);
Region2D region_full_dm(const DiscreteMacGf& ch, const LawSampler& sampler, std::size_t u_size,
                        unsigned threads = 0);

}  // namespace secrecy
