#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "secrecy/discrete.hpp"
#include "secrecy/errors.hpp"
#include "secrecy/gaussian.hpp"
#include "secrecy/io.hpp"
#include "secrecy/reductions.hpp"

namespace secrecy::cli {

namespace {

constexpr const char* kToolName = "secrecy-regions " SECRECY_REGIONS_VERSION;

struct Options {
  std::string mode;
  std::string channel;
  std::string out;
  std::string format = "csv";
  std::string sampler = "random";
  std::optional<int> steps;
  std::optional<int> angles;
  std::size_t samples = 200;
  std::uint64_t seed = 1;
  std::optional<double> rho;
};

unsigned threads_from_env() {
  const char* raw = std::getenv("SECRECY_REGIONS_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 0) throw ConfigError("SECRECY_REGIONS_THREADS must be a non-negative integer");
  return static_cast<unsigned>(v);
}

OutputFormat output_format(const Options& o) { return o.format == "json" ? OutputFormat::json : OutputFormat::csv; }

std::string extension(OutputFormat f) { return f == OutputFormat::json ? ".json" : ".csv"; }

void emit(const std::string& text, const Options& o, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

void require_mode(const Options& o, std::initializer_list<const char*> allowed, const char* command) {
  for (const char* m : allowed) {
    if (o.mode == m) return;
  }
  throw ConfigError(std::string("field 'mode': '") + o.mode + "' is not valid for '" + command + "'");
}

void require_channel(const Options& o) {
  if (o.channel.empty()) throw ConfigError("field 'channel': a channel file is required");
}

SweepSpec resolve_sweep(const Options& o, const GaussianConfig* cfg) {
  SweepSpec spec;
  if (cfg && cfg->steps) spec.steps_per_fraction = *cfg->steps;
  if (cfg && cfg->angles) spec.angles = *cfg->angles;
  if (o.steps) spec.steps_per_fraction = *o.steps;
  if (o.angles) spec.angles = *o.angles;
  if (spec.steps_per_fraction < 2) throw ConfigError("field 'steps' must be at least 2");
  if (spec.angles < 2) throw ConfigError("field 'angles' must be at least 2");
  return spec;
}

Metadata gaussian_metadata(const char* command, const std::string& mode, const char* evaluator,
                           const GaussianChannel& ch, const SweepSpec& spec) {
  return {{"tool", kToolName},
          {"command", command},
          {"mode", mode},
          {"evaluator", evaluator},
          {"channel", describe_channel(ch)},
          {"steps", std::to_string(spec.steps_per_fraction)},
          {"angles", std::to_string(spec.angles)},
          {"seed", "none"}};
}

const char* region_evaluator(const std::string& mode) {
  if (mode == "partial") return "partial decode-and-forward secrecy region";
  if (mode == "full") return "full decode-and-forward secrecy region";
  if (mode == "regular") return "regular region with generalized feedback, no secrecy constraint";
  return "multiple-access wiretap region, no feedback";
}

Region2D gaussian_region(const std::string& mode, const GaussianChannel& ch, const SweepSpec& spec, unsigned threads) {
  if (mode == "partial") return region_partial(ch, spec, threads);
  if (mode == "full") return region_full(ch, spec, threads);
  if (mode == "regular") return regular_region(ch, spec, threads);
  return mac_wiretap_region(ch, spec);
}

int cmd_region(const Options& o, std::ostream& out) {
  require_mode(o, {"partial", "full", "regular", "mac-wt"}, "region");
  require_channel(o);
  const GaussianConfig cfg = parse_gaussian_config(read_text_file(o.channel));
  if (cfg.rho) throw ConfigError("field 'rho' is only used by 'reduce'");
  const SweepSpec spec = resolve_sweep(o, &cfg);
  const Region2D region = gaussian_region(o.mode, cfg.channel, spec, threads_from_env());
  const RegionDocument doc{gaussian_metadata("region", o.mode, region_evaluator(o.mode), cfg.channel, spec), region};
  emit(serialize(doc, output_format(o)), o, out);
  return kExitOk;
}

int cmd_sum_rate(const Options& o, std::ostream& out) {
  require_mode(o, {"partial", "full"}, "sum-rate");
  require_channel(o);
  const GaussianConfig cfg = parse_gaussian_config(read_text_file(o.channel));
  const SweepSpec spec = resolve_sweep(o, &cfg);
  const DfMode mode = o.mode == "partial" ? DfMode::partial : DfMode::full;
  const SumRateOptimum best = max_sum_rate(cfg.channel, mode, spec);
  TableDocument doc;
  doc.metadata = gaussian_metadata("sum-rate", o.mode,
                                   mode == DfMode::partial ? "maximal partial decode-and-forward secrecy sum rate"
                                                           : "maximal full decode-and-forward secrecy sum rate",
                                   cfg.channel, spec);
  doc.columns = {"sum_rate", "pu1", "p12", "p10", "pu2", "p21", "p20"};
  const PowerSplit& s = best.split;
  doc.rows = {{best.value, s.pu1, s.p12, s.p10, s.pu2, s.p21, s.p20}};
  emit(serialize(doc, output_format(o)), o, out);
  return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  if (!o.mode.empty() && o.mode != "mac-wt") {
    throw ConfigError("field 'mode': 'reduce' accepts only 'mac-wt' (or no mode for the scalar reductions)");
  }
  require_channel(o);
  const GaussianConfig cfg = parse_gaussian_config(read_text_file(o.channel));
  const SweepSpec spec = resolve_sweep(o, &cfg);
  if (o.mode == "mac-wt") {
    const RegionDocument doc{
        gaussian_metadata("reduce", o.mode, region_evaluator(o.mode), cfg.channel, spec),
        mac_wiretap_region(cfg.channel, spec)};
    emit(serialize(doc, output_format(o)), o, out);
    return kExitOk;
  }
  const double rho = o.rho.value_or(cfg.rho.value_or(0.0));
  if (!(rho >= 0.0 && rho <= 1.0)) throw ConfigError("field 'rho' must lie in [0, 1]");
  const CorrelatedGaussianInput in{cfg.channel.p1, cfg.channel.p2, rho};
  TableDocument doc;
  doc.metadata = {{"tool", kToolName},
                  {"command", "reduce"},
                  {"mode", "scalar"},
                  {"evaluator", "relay-eavesdropper decode-and-forward rate and virtual MISO wiretap sum rate"},
                  {"channel", describe_channel(cfg.channel)},
                  {"rho", format_number(rho)},
                  {"seed", "none"}};
  doc.columns = {"rho", "relay_eavesdropper_rate", "miso_sum_rate"};
  doc.rows = {{rho, relay_eavesdropper_rate(cfg.channel, in), miso_sum_rate(cfg.channel, in)}};
  emit(serialize(doc, output_format(o)), o, out);
  return kExitOk;
}

int cmd_dm_region(const Options& o, std::ostream& out) {
  require_mode(o, {"partial", "full"}, "dm-region");
  require_channel(o);
  const DiscreteConfig cfg = parse_discrete_config(read_text_file(o.channel));
  if (o.steps) throw ConfigError("field 'steps' does not apply to 'dm-region'");
  const int angles = o.angles.value_or(kDefaultAngles);
  if (angles < 2) throw ConfigError("field 'angles' must be at least 2");
  if (o.samples < 1) throw ConfigError("field 'samples' must be at least 1");
  LawSampler sampler{o.sampler == "grid" ? SamplerMode::grid : SamplerMode::random, o.samples, o.seed};
  const AuxSizes aux = cfg.aux.value_or(AuxSizes{});
  const unsigned threads = threads_from_env();
  const Region2D region = o.mode == "partial" ? region_partial_dm(cfg.channel, sampler, aux, angles, threads)
                                              : region_full_dm(cfg.channel, sampler, aux.u, threads);
  const std::string aux_text = o.mode == "partial" ? "|U|=" + std::to_string(aux.u) + " |V1|=" +
                                                         std::to_string(aux.v1) + " |V2|=" + std::to_string(aux.v2)
                                                   : "|U|=" + std::to_string(aux.u);
  RegionDocument doc{{{"tool", kToolName},
                      {"command", "dm-region"},
                      {"mode", o.mode},
                      {"evaluator", o.mode == "partial" ? "discrete partial decode-and-forward secrecy region"
                                                        : "discrete full decode-and-forward secrecy region"},
                      {"channel", describe_channel(cfg.channel)},
                      {"auxiliary", aux_text},
                      {"sampler", o.sampler},
                      {"samples", std::to_string(o.samples)},
                      {"angles", std::to_string(angles)},
                      {"seed", std::to_string(o.seed)}},
                     region};
  emit(serialize(doc, output_format(o)), o, out);
  return kExitOk;
}

struct FigureCurve {
  const char* mode;
  const char* label;  // file name part
};

struct FigureRun {
  const char* prefix;
  std::vector<double> cooperation;
  std::vector<FigureCurve> curves;
};

int cmd_figure(const FigureRun& fig, const Options& o, std::ostream& out) {
  if (!o.mode.empty()) throw ConfigError(std::string("field 'mode' does not apply to '") + fig.prefix + "'");
  if (!o.channel.empty()) throw ConfigError(std::string("field 'channel' does not apply to '") + fig.prefix + "'");
  const SweepSpec spec = resolve_sweep(o, nullptr);
  const OutputFormat format = output_format(o);
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);
  const unsigned threads = threads_from_env();
  for (double coop : fig.cooperation) {
    GaussianChannel ch{0.6, 0.6, 0.2, 0.1, coop, coop, 1.0, 1.0};
    for (const FigureCurve& curve : fig.curves) {
      const RegionDocument doc{gaussian_metadata(fig.prefix, curve.mode, region_evaluator(curve.mode), ch, spec),
                               gaussian_region(curve.mode, ch, spec, threads)};
      char coop_text[16];
      std::snprintf(coop_text, sizeof coop_text, "%.2f", coop);
      const auto path = dir / (std::string(fig.prefix) + "_" + curve.label + "_coop" + coop_text + extension(format));
      write_text_file(path.string(), serialize(doc, format));
      out << path.string() << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Secrecy rate regions of the two-user multiple-access channel with generalized feedback"};
  app.name("secrecy-regions");
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_channel) {
    sub->add_option("--steps", o.steps, "grid points per power-fraction axis");
    sub->add_option("--angles", o.angles, "weight directions per traced polytope");
    sub->add_option("--out", o.out, "output file (directory for fig3/fig4)");
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    if (with_channel) sub->add_option("--channel", o.channel, "channel JSON file");
  };

  auto* region = app.add_subcommand("region", "Gaussian rate region");
  add_common(region, true);
  region->add_option("--mode", o.mode, "partial, full, regular or mac-wt");

  auto* sum_rate = app.add_subcommand("sum-rate", "maximal Gaussian secrecy sum rate over the power grid");
  add_common(sum_rate, true);
  sum_rate->add_option("--mode", o.mode, "partial or full");

  auto* dm = app.add_subcommand("dm-region", "discrete memoryless secrecy region from sampled input laws");
  dm->add_option("--channel", o.channel, "discrete channel JSON file");
  dm->add_option("--mode", o.mode, "partial or full");
  dm->add_option("--samples", o.samples, "number of input laws");
  dm->add_option("--seed", o.seed, "sampler seed");
  dm->add_option("--sampler", o.sampler, "random or grid")->check(CLI::IsMember({"random", "grid"}));
  dm->add_option("--steps", o.steps, "not used; rejected");
  dm->add_option("--angles", o.angles, "weight directions per traced polytope");
  dm->add_option("--out", o.out, "output file");
  dm->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* reduce = app.add_subcommand("reduce", "special cases: mac-wt region, or relay-eavesdropper and MISO rates");
  add_common(reduce, true);
  reduce->add_option("--mode", o.mode, "mac-wt, or omit for the scalar reductions");
  reduce->add_option("--rho", o.rho, "input correlation in [0, 1]");

  auto* fig3 = app.add_subcommand("fig3", "regular and secrecy regions for three cooperation levels");
  add_common(fig3, false);
  auto* fig4 = app.add_subcommand("fig4", "partial and full decode-and-forward regions for three cooperation levels");
  add_common(fig4, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (o.mode.empty() && (region->parsed() || sum_rate->parsed() || dm->parsed())) o.mode = "partial";
    if (region->parsed()) return cmd_region(o, out);
    if (sum_rate->parsed()) return cmd_sum_rate(o, out);
    if (dm->parsed()) return cmd_dm_region(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (fig3->parsed()) return cmd_figure({"fig3", {0.0, 0.6, 1.0}, {{"regular", "regular"}, {"partial", "secrecy"}}}, o, out);
    return cmd_figure({"fig4", {0.2, 0.55, 1.0}, {{"partial", "partial"}, {"full", "full"}}}, o, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UsageError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ValidationError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace secrecy::cli
