#include "secrecy/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "secrecy/errors.hpp"

namespace secrecy {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::string> kGaussianFields{"h1", "h2", "g1", "g2", "h12", "h21", "p1", "p2"};

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
}

double number_field(const ordered_json& doc, const std::string& key) {
  if (!doc.contains(key)) throw ConfigError("missing field '" + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number()) throw ConfigError("field '" + key + "' must be a number");
  return v.get<double>();
}

int int_field(const ordered_json& doc, const std::string& key) {
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw ConfigError("field '" + key + "' must be an integer");
  return v.get<int>();
}

std::size_t size_field(const ordered_json& obj, const std::string& parent, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError("missing field '" + parent + "." + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) {
    throw ConfigError("field '" + parent + "." + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

double round12(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

ordered_json metadata_json(const Metadata& md) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : md) obj[k] = v;
  return obj;
}

Metadata metadata_from_json(const ordered_json& doc) {
  Metadata md;
  if (!doc.contains("metadata")) return md;
  for (const auto& [k, v] : doc.at("metadata").items()) {
    if (!v.is_string()) throw ConfigError("metadata field '" + k + "' must be a string");
    md.emplace_back(k, v.get<std::string>());
  }
  return md;
}

void write_metadata_csv(std::ostringstream& os, const Metadata& md) {
  for (const auto& [k, v] : md) os << "# " << k << ": " << v << '\n';
}

struct CsvBody {
  Metadata metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) out.push_back(cell);
  return out;
}

double parse_cell(const std::string& cell) {
  char* end = nullptr;
  const double v = std::strtod(cell.c_str(), &end);
  if (cell.empty() || end != cell.c_str() + cell.size()) throw ConfigError("bad numeric cell '" + cell + "'");
  return v;
}

CsvBody parse_csv(const std::string& text) {
  CsvBody body;
  std::istringstream is(text);
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      const auto sep = line.find(": ", 2);
      if (sep == std::string::npos) throw ConfigError("metadata line without ': ' separator");
      body.metadata.emplace_back(line.substr(2, sep - 2), line.substr(sep + 2));
      continue;
    }
    if (!have_header) {
      body.columns = split_commas(line);
      have_header = true;
      continue;
    }
    std::vector<double> row;
    for (const auto& cell : split_commas(line)) row.push_back(parse_cell(cell));
    if (row.size() != body.columns.size()) throw ConfigError("CSV row width does not match header");
    body.rows.push_back(std::move(row));
  }
  if (!have_header) throw ConfigError("CSV document has no column header");
  return body;
}

}  // namespace

GaussianConfig parse_gaussian_config(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ConfigError("channel document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    const bool known = key == "steps" || key == "angles" || key == "rho" ||
                       std::find(kGaussianFields.begin(), kGaussianFields.end(), key) != kGaussianFields.end();
    if (!known) throw ConfigError("unknown field '" + key + "'");
  }
  GaussianConfig cfg;
  GaussianChannel& ch = cfg.channel;
  double* slots[] = {&ch.h1, &ch.h2, &ch.g1, &ch.g2, &ch.h12, &ch.h21, &ch.p1, &ch.p2};
  for (std::size_t i = 0; i < kGaussianFields.size(); ++i) {
    *slots[i] = number_field(doc, kGaussianFields[i]);
    if (*slots[i] < 0.0) throw ConfigError("field '" + kGaussianFields[i] + "' must be non-negative");
  }
  if (doc.contains("steps")) cfg.steps = int_field(doc, "steps");
  if (doc.contains("angles")) cfg.angles = int_field(doc, "angles");
  if (doc.contains("rho")) cfg.rho = number_field(doc, "rho");
  return cfg;
}

DiscreteConfig parse_discrete_config(const std::string& text) {
  const ordered_json doc = parse_json(text);
  if (!doc.is_object()) throw ConfigError("channel document must be a JSON object");
  if (!doc.contains("sizes") || !doc.at("sizes").is_object()) throw ConfigError("missing object 'sizes'");
  const auto& sizes = doc.at("sizes");
  DiscreteConfig cfg;
  DiscreteMacGf& ch = cfg.channel;
  ch.x1 = size_field(sizes, "sizes", "x1");
  ch.x2 = size_field(sizes, "sizes", "x2");
  ch.y1 = size_field(sizes, "sizes", "y1");
  ch.y2 = size_field(sizes, "sizes", "y2");
  ch.y = size_field(sizes, "sizes", "y");
  ch.z = size_field(sizes, "sizes", "z");

  if (!doc.contains("transition") || !doc.at("transition").is_array()) {
    throw ConfigError("missing array 'transition'");
  }
  for (const auto& v : doc.at("transition")) {
    if (!v.is_number()) throw ConfigError("field 'transition' must contain only numbers");
    ch.transition.push_back(v.get<double>());
  }
  if (ch.transition.size() != ch.x1 * ch.x2 * ch.outputs_per_input()) {
    throw ConfigError("field 'transition' has " + std::to_string(ch.transition.size()) +
                      " entries, expected " + std::to_string(ch.x1 * ch.x2 * ch.outputs_per_input()));
  }
  try {
    ch.validate();
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("field 'transition': ") + e.what());
  }

  if (doc.contains("aux")) {
    const auto& aux = doc.at("aux");
    if (!aux.is_object()) throw ConfigError("field 'aux' must be an object");
    cfg.aux = AuxSizes{size_field(aux, "aux", "u"), size_field(aux, "aux", "v1"), size_field(aux, "aux", "v2")};
  }
  return cfg;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string describe_channel(const GaussianChannel& ch) {
  return "h1=" + format_number(ch.h1) + " h2=" + format_number(ch.h2) + " g1=" + format_number(ch.g1) +
         " g2=" + format_number(ch.g2) + " h12=" + format_number(ch.h12) + " h21=" + format_number(ch.h21) +
         " p1=" + format_number(ch.p1) + " p2=" + format_number(ch.p2);
}

std::string describe_channel(const DiscreteMacGf& ch) {
  return "|X1|=" + std::to_string(ch.x1) + " |X2|=" + std::to_string(ch.x2) + " |Y1|=" + std::to_string(ch.y1) +
         " |Y2|=" + std::to_string(ch.y2) + " |Y|=" + std::to_string(ch.y) + " |Z|=" + std::to_string(ch.z);
}

std::string serialize(const RegionDocument& doc, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json out;
    out["metadata"] = metadata_json(doc.metadata);
    ordered_json hull = ordered_json::array();
    for (const auto& p : doc.region.hull()) hull.push_back({round12(p.r1), round12(p.r2)});
    out["hull"] = std::move(hull);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  write_metadata_csv(os, doc.metadata);
  os << "r1,r2\n";
  for (const auto& p : doc.region.hull()) os << format_number(p.r1) << ',' << format_number(p.r2) << '\n';
  return os.str();
}

std::string serialize(const TableDocument& doc, OutputFormat format) {
  if (format == OutputFormat::json) {
    ordered_json out;
    out["metadata"] = metadata_json(doc.metadata);
    out["columns"] = doc.columns;
    ordered_json rows = ordered_json::array();
    for (const auto& r : doc.rows) {
      ordered_json row = ordered_json::array();
      for (double v : r) row.push_back(round12(v));
      rows.push_back(std::move(row));
    }
    out["rows"] = std::move(rows);
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  write_metadata_csv(os, doc.metadata);
  for (std::size_t i = 0; i < doc.columns.size(); ++i) os << (i ? "," : "") << doc.columns[i];
  os << '\n';
  for (const auto& r : doc.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_number(r[i]);
    os << '\n';
  }
  return os.str();
}

RegionDocument parse_region_document(const std::string& text, OutputFormat format) {
  std::vector<RatePoint> boundary;
  Metadata md;
  if (format == OutputFormat::json) {
    const ordered_json doc = parse_json(text);
    md = metadata_from_json(doc);
    if (!doc.contains("hull") || !doc.at("hull").is_array()) throw ConfigError("missing array 'hull'");
    for (const auto& v : doc.at("hull")) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ConfigError("field 'hull' must hold [r1, r2] pairs");
      }
      boundary.push_back({v[0].get<double>(), v[1].get<double>()});
    }
  } else {
    CsvBody body = parse_csv(text);
    if (body.columns != std::vector<std::string>{"r1", "r2"}) throw ConfigError("region CSV header must be r1,r2");
    for (const auto& r : body.rows) boundary.push_back({r[0], r[1]});
    md = std::move(body.metadata);
  }
  try {
    return {std::move(md), Region2D::from_boundary(std::move(boundary))};
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("field 'hull': ") + e.what());
  }
}

TableDocument parse_table_document(const std::string& text, OutputFormat format) {
  TableDocument doc;
  if (format == OutputFormat::json) {
    const ordered_json j = parse_json(text);
    doc.metadata = metadata_from_json(j);
    if (!j.contains("columns") || !j.contains("rows")) throw ConfigError("table needs 'columns' and 'rows'");
    doc.columns = j.at("columns").get<std::vector<std::string>>();
    doc.rows = j.at("rows").get<std::vector<std::vector<double>>>();
    return doc;
  }
  CsvBody body = parse_csv(text);
  doc.metadata = std::move(body.metadata);
  doc.columns = std::move(body.columns);
  doc.rows = std::move(body.rows);
  return doc;
}

}  // namespace secrecy
