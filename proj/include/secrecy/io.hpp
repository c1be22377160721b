#pragma once

// Configuration parsing and the CSV / JSON output documents.
//
// CSV: "# key: value" metadata lines, a column header, then rows with 12
// significant digits. JSON: {"metadata": {...}, "hull": [[r1, r2], ...]}
// for regions, {"metadata": {...}, "columns": [...], "rows": [[...]]} for
// scalar tables. Parsing a written document and writing it again
// reproduces it byte for byte.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secrecy/discrete.hpp"
#include "secrecy/gaussian.hpp"
#include "secrecy/region.hpp"

namespace secrecy {

enum class OutputFormat { csv, json };

using Metadata = std::vector<std::pair<std::string, std::string>>;

struct GaussianConfig {
  GaussianChannel channel;
  std::optional<int> steps;
  std::optional<int> angles;
  std::optional<double> rho;
};

struct DiscreteConfig {
  DiscreteMacGf channel;
  std::optional<AuxSizes> aux;
};

/// Throws ConfigError naming the missing or malformed field.
GaussianConfig parse_gaussian_config(const std::string& text);
DiscreteConfig parse_discrete_config(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// "%.12g", with negative zero printed as 0.
std::string format_number(double v);

/// "h1=0.6 h2=0.6 ..." echo of a channel.
std::string describe_channel(const GaussianChannel& ch);
std::string describe_channel(const DiscreteMacGf& ch);

struct RegionDocument {
  Metadata metadata;
  Region2D region;
};

struct TableDocument {
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string serialize(const RegionDocument& doc, OutputFormat format);
std::string serialize(const TableDocument& doc, OutputFormat format);

RegionDocument parse_region_document(const std::string& text, OutputFormat format);
TableDocument parse_table_document(const std::string& text, OutputFormat format);

}  // namespace secrecy
