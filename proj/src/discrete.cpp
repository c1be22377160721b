#include "secrecy/discrete.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "secrecy/errors.hpp"
#include "secrecy/sweep.hpp"

namespace secrecy {

namespace {

void check_slices(const std::vector<double>& table, std::size_t slice, std::size_t count, const char* what) {
  if (table.size() != slice * count) throw ValidationError(std::string(what) + ": wrong table size");
  for (std::size_t s = 0; s < count; ++s) {
    double total = 0.0;
    for (std::size_t k = 0; k < slice; ++k) {
      const double p = table[s * slice + k];
      if (!(p >= 0.0) || !std::isfinite(p)) throw ValidationError(std::string(what) + ": negative probability");
      total += p;
    }
    if (std::abs(total - 1.0) > kPmfTolerance) {
      throw ValidationError(std::string(what) + ": slice " + std::to_string(s) + " sums to " +
                            std::to_string(total));
    }
  }
}

void check_alphabet(std::size_t n, const char* name) {
  if (n == 0) throw ValidationError(std::string("alphabet ") + name + " is empty");
  if (n > kMaxAlphabet) {
    throw UsageError(std::string("alphabet ") + name + " has size " + std::to_string(n) +
                     "; at most " + std::to_string(kMaxAlphabet) + " is supported");
  }
}

void check_desk_scale(const DiscreteMacGf& ch, const AuxSizes& aux) {
  check_alphabet(ch.x1, "X1");
  check_alphabet(ch.x2, "X2");
  check_alphabet(ch.y1, "Y1");
  check_alphabet(ch.y2, "Y2");
  check_alphabet(ch.y, "Y");
  check_alphabet(ch.z, "Z");
  check_alphabet(aux.u, "U");
  check_alphabet(aux.v1, "V1");
  check_alphabet(aux.v2, "V2");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Flat Dirichlet via normalized unit exponentials; bit-exact across
// standard libraries because only the raw engine output is used.
void dirichlet(std::mt19937_64& rng, double* out, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    out[i] = -std::log1p(-u);
    total += out[i];
  }
  if (!(total > 0.0)) {
    for (std::size_t i = 0; i < n; ++i) out[i] = 1.0 / static_cast<double>(n);
    return;
  }
  for (std::size_t i = 0; i < n; ++i) out[i] /= total;
}

InputLaw empty_law(const AuxSizes& aux, std::size_t x1, std::size_t x2) {
  InputLaw law;
  law.u = aux.u;
  law.v1 = aux.v1;
  law.v2 = aux.v2;
  law.x1 = x1;
  law.x2 = x2;
  law.pu.assign(aux.u, 1.0 / static_cast<double>(aux.u));
  law.pv1x1_given_u.assign(aux.u * aux.v1 * x1, 0.0);
  law.pv2x2_given_u.assign(aux.u * aux.v2 * x2, 0.0);
  return law;
}

void fill_uniform_subset(double* slice, std::size_t cells, std::uint64_t mask) {
  const double share = 1.0 / static_cast<double>(std::popcount(mask));
  for (std::size_t k = 0; k < cells; ++k) slice[k] = (mask >> k) & 1U ? share : 0.0;
}

std::vector<InputLaw> grid_laws(const LawSampler& sampler, const AuxSizes& aux, std::size_t x1, std::size_t x2) {
  const std::size_t cells1 = aux.v1 * x1;
  const std::size_t cells2 = aux.v2 * x2;
  const long double radix1 = std::ldexp(1.0L, static_cast<int>(cells1)) - 1.0L;
  const long double radix2 = std::ldexp(1.0L, static_cast<int>(cells2)) - 1.0L;
  long double total = 1.0L;
  for (std::size_t u = 0; u < aux.u; ++u) total *= radix1 * radix2;

  std::vector<InputLaw> laws;
  InputLaw uniform = empty_law(aux, x1, x2);
  for (std::size_t u = 0; u < aux.u; ++u) {
    fill_uniform_subset(&uniform.pv1x1_given_u[u * cells1], cells1, (std::uint64_t{1} << cells1) - 1);
    fill_uniform_subset(&uniform.pv2x2_given_u[u * cells2], cells2, (std::uint64_t{1} << cells2) - 1);
  }
  laws.push_back(uniform);

  // the uniform law counts towards `samples`
  const std::size_t rest = sampler.samples - 1;
  const std::size_t count =
      total <= static_cast<long double>(rest) ? static_cast<std::size_t>(total) : rest;
  for (std::size_t j = 0; j < count; ++j) {
    long double index = std::floor(static_cast<long double>(j) * total / static_cast<long double>(count));
    InputLaw law = empty_law(aux, x1, x2);
    for (std::size_t u = 0; u < aux.u; ++u) {
      const long double d1 = std::fmod(index, radix1);
      index = std::floor(index / radix1);
      const long double d2 = std::fmod(index, radix2);
      index = std::floor(index / radix2);
      fill_uniform_subset(&law.pv1x1_given_u[u * cells1], cells1, static_cast<std::uint64_t>(d1) + 1);
      fill_uniform_subset(&law.pv2x2_given_u[u * cells2], cells2, static_cast<std::uint64_t>(d2) + 1);
    }
    laws.push_back(std::move(law));
  }
  return laws;
}

std::vector<InputLaw> random_laws(const LawSampler& sampler, const AuxSizes& aux, std::size_t x1, std::size_t x2) {
  const std::size_t cells1 = aux.v1 * x1;
  const std::size_t cells2 = aux.v2 * x2;
  std::vector<InputLaw> laws;
  laws.reserve(sampler.samples);
  for (std::size_t i = 0; i < sampler.samples; ++i) {
    std::mt19937_64 rng(splitmix64(sampler.seed ^ splitmix64(i)));
    InputLaw law = empty_law(aux, x1, x2);
    dirichlet(rng, law.pu.data(), aux.u);
    for (std::size_t u = 0; u < aux.u; ++u) {
      dirichlet(rng, &law.pv1x1_given_u[u * cells1], cells1);
      dirichlet(rng, &law.pv2x2_given_u[u * cells2], cells2);
    }
    laws.push_back(std::move(law));
  }
  return laws;
}

}  // namespace

void DiscreteMacGf::validate() const {
  for (std::size_t n : {x1, x2, y1, y2, y, z}) {
    if (n == 0) throw ValidationError("channel alphabets must be non-empty");
  }
  check_slices(transition, outputs_per_input(), x1 * x2, "channel transition");
}

void InputLaw::validate() const {
  for (std::size_t n : {u, v1, v2, x1, x2}) {
    if (n == 0) throw ValidationError("input law alphabets must be non-empty");
  }
  check_slices(pu, u, 1, "p(u)");
  check_slices(pv1x1_given_u, v1 * x1, u, "p(v1,x1|u)");
  check_slices(pv2x2_given_u, v2 * x2, u, "p(v2,x2|u)");
}

JointPmf joint_law(const DiscreteMacGf& ch, const InputLaw& law) {
  ch.validate();
  law.validate();
  if (law.x1 != ch.x1 || law.x2 != ch.x2) throw ValidationError("input law and channel disagree on |X1| or |X2|");

  const std::size_t out = ch.outputs_per_input();
  std::vector<double> probs;
  probs.reserve(law.u * law.v1 * law.v2 * ch.x1 * ch.x2 * out);
  for (std::size_t u = 0; u < law.u; ++u) {
    for (std::size_t v1 = 0; v1 < law.v1; ++v1) {
      for (std::size_t v2 = 0; v2 < law.v2; ++v2) {
        for (std::size_t x1 = 0; x1 < ch.x1; ++x1) {
          for (std::size_t x2 = 0; x2 < ch.x2; ++x2) {
            const double input = law.pu[u] * law.pv1x1_given_u[(u * law.v1 + v1) * ch.x1 + x1] *
                                 law.pv2x2_given_u[(u * law.v2 + v2) * ch.x2 + x2];
            const double* row = &ch.transition[(x1 * ch.x2 + x2) * out];
            for (std::size_t k = 0; k < out; ++k) probs.push_back(input * row[k]);
          }
        }
      }
    }
  }
  return JointPmf(kJointAxes, {law.u, law.v1, law.v2, ch.x1, ch.x2, ch.y1, ch.y2, ch.y, ch.z}, std::move(probs));
}

MutualInfoBundle bundle_dm(const DiscreteMacGf& ch, const InputLaw& law) {
  const JointPmf j = joint_law(ch, law);
  MutualInfoBundle m;
  m.a1 = conditional_mi(j, {"X1"}, {"Y"}, {"X2", "V1", "U"});
  m.a2 = conditional_mi(j, {"X2"}, {"Y"}, {"X1", "V2", "U"});
  m.a3 = conditional_mi(j, {"X1", "X2"}, {"Y"}, {"V1", "V2", "U"});
  m.a4 = conditional_mi(j, {"V1"}, {"Y2"}, {"X2", "U"});
  m.a5 = conditional_mi(j, {"V2"}, {"Y1"}, {"X1", "U"});
  m.b1 = conditional_mi(j, {"X1"}, {"Z"}, {"X2", "V1", "U"});
  m.b2 = conditional_mi(j, {"X2"}, {"Z"}, {"X1", "V2", "U"});
  m.b3 = conditional_mi(j, {"X1", "X2"}, {"Z"}, {"V1", "V2", "U"});
  m.b4 = mutual_information(j, {"X1", "X2"}, {"Z"});
  m.a6 = mutual_information(j, {"X1", "X2"}, {"Y"}) - m.b4;
  return m;
}

FullDfBounds full_df_bounds(const DiscreteMacGf& ch, const InputLaw& law) {
  const JointPmf j = joint_law(ch, law);
  FullDfBounds b;
  b.r1_max = conditional_mi(j, {"X1"}, {"Y2"}, {"X2", "U"});
  b.r2_max = conditional_mi(j, {"X2"}, {"Y1"}, {"X1", "U"});
  b.sum_max = std::min(b.r1_max + b.r2_max, mutual_information(j, {"X1", "X2"}, {"Y"})) -
              mutual_information(j, {"X1", "X2"}, {"Z"});
  return b;
}

InputLaw lift_full_law(const InputLaw& law) {
  law.validate();
  InputLaw lifted = law;
  lifted.v1 = law.x1;
  lifted.v2 = law.x2;
  lifted.pv1x1_given_u.assign(law.u * law.x1 * law.x1, 0.0);
  lifted.pv2x2_given_u.assign(law.u * law.x2 * law.x2, 0.0);
  for (std::size_t u = 0; u < law.u; ++u) {
    for (std::size_t x = 0; x < law.x1; ++x) {
      double px = 0.0;
      for (std::size_t v = 0; v < law.v1; ++v) px += law.pv1x1_given_u[(u * law.v1 + v) * law.x1 + x];
      lifted.pv1x1_given_u[(u * law.x1 + x) * law.x1 + x] = px;
    }
    for (std::size_t x = 0; x < law.x2; ++x) {
      double px = 0.0;
      for (std::size_t v = 0; v < law.v2; ++v) px += law.pv2x2_given_u[(u * law.v2 + v) * law.x2 + x];
      lifted.pv2x2_given_u[(u * law.x2 + x) * law.x2 + x] = px;
    }
  }
  return lifted;
}

std::vector<InputLaw> sample_laws(const LawSampler& sampler, const AuxSizes& aux, std::size_t x1, std::size_t x2) {
  if (sampler.samples < 1) throw UsageError("sampler needs at least one sample");
  return sampler.mode == SamplerMode::grid ? grid_laws(sampler, aux, x1, x2)
                                           : random_laws(sampler, aux, x1, x2);
}

Region2D partial_region_from_laws(const DiscreteMacGf& ch, const std::vector<InputLaw>& laws, int angles,
                                  unsigned threads) {
  ch.validate();
  return union_hull(
      laws.size(), [&](std::size_t i) { return trace_region(build_polytope(bundle_dm(ch, laws[i])), angles); },
      threads);
}

Region2D full_region_from_laws(const DiscreteMacGf& ch, const std::vector<InputLaw>& laws, unsigned threads) {
  ch.validate();
  return union_hull(
      laws.size(),
      [&](std::size_t i) {
        const FullDfBounds b = full_df_bounds(ch, laws[i]);
        return box_sum_region(b.r1_max, b.r2_max, b.sum_max);
      },
      threads);
}

Region2D region_partial_dm(const DiscreteMacGf& ch, const LawSampler& sampler, const AuxSizes& aux, int angles,
                           unsigned threads) {
  check_desk_scale(ch, aux);
  return partial_region_from_laws(ch, sample_laws(sampler, aux, ch.x1, ch.x2), angles, threads);
}

Region2D region_full_dm(const DiscreteMacGf& ch, const LawSampler& sampler, std::size_t u_size, unsigned threads) {
  const AuxSizes aux{u_size, 1, 1};
  check_desk_scale(ch, aux);
  return full_region_from_laws(ch, sample_laws(sampler, aux, ch.x1, ch.x2), threads);
}

}  // namespace secrecy
