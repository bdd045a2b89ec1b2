// Copyright 2026 The qec-energy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "qec/harness.hpp"
#include "qec/registry.hpp"

namespace qec {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

template <typename T>
T parse_number(const std::string& s, std::size_t line, const char* column) {
  T value{};
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) {
    throw SchemaError(fmt::format("csv line {}: column {} has invalid value '{}'", line, column, s));
  }
  return value;
}

void check_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") != std::string::npos) {
    throw std::invalid_argument("csv field contains a reserved character: " + s);
  }
}

std::vector<double> doubles(const json& j, const char* key) {
  std::vector<double> out;
  if (!j.contains(key)) return out;
  if (!j.at(key).is_array()) throw std::invalid_argument(std::string("config: ") + key + " must be an array");
  for (const auto& x : j.at(key)) {
    if (!x.is_number()) throw std::invalid_argument(std::string("config: ") + key + " must hold numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : records) {
    check_field(r.code_id);
    check_field(r.encoder_variant);
    out += fmt::format("{},{},{},{},{},{},{},{},{}\n", r.code_id, r.encoder_variant, format_double(r.epsilon),
                       format_double(r.energy), format_double(r.p_x), r.shots, format_double(r.error_rate),
                       format_double(r.std_error), r.master_seed);
  }
  return out;
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
  const std::string text = to_csv(records);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw IoError("write to '" + path + "' failed");
}

std::vector<SweepRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("csv is empty; expected header: " + std::string(kCsvHeader));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kCsvHeader) throw SchemaError("csv header mismatch; expected: " + std::string(kCsvHeader));
  std::vector<SweepRecord> out;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 9) throw SchemaError(fmt::format("csv line {}: expected 9 fields, found {}", lineno, f.size()));
    SweepRecord r;
    r.code_id = f[0];
    r.encoder_variant = f[1];
    r.epsilon = parse_number<double>(f[2], lineno, "epsilon");
    r.energy = parse_number<double>(f[3], lineno, "energy");
    r.p_x = parse_number<double>(f[4], lineno, "p_x");
    r.shots = parse_number<std::uint64_t>(f[5], lineno, "shots");
    r.error_rate = parse_number<double>(f[6], lineno, "error_rate");
    r.std_error = parse_number<double>(f[7], lineno, "std_error");
    r.master_seed = parse_number<std::uint64_t>(f[8], lineno, "master_seed");
    if (r.code_id.empty()) throw SchemaError(fmt::format("csv line {}: empty code_id", lineno));
    if (!(r.error_rate >= 0 && r.error_rate <= 1)) {
      throw SchemaError(fmt::format("csv line {}: error_rate outside [0, 1]", lineno));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SweepRecord> read_csv(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for reading");
  return parse_csv(f);
}

json config_to_json(const SweepConfig& c) {
  json j;
  j["name"] = c.name;
  j["code_ids"] = c.code_ids;
  if (c.uses_energy_grid()) {
    j["energy_grid"] = c.energy_grid;
  } else {
    j["epsilon_grid"] = c.epsilon_grid;
  }
  j["p_x_grid"] = c.p_x_grid;
  j["shots"] = c.shots;
  j["master_seed"] = c.master_seed;
  j["workers"] = c.workers;
  return j;
}

SweepConfig config_from_json(const json& root) {
  const json& j = root.contains("config") ? root.at("config") : root;
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  static const std::vector<std::string> known = {"name",     "code_ids", "epsilon_grid", "energy_grid",
                                                 "p_x_grid", "shots",    "master_seed",  "workers"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  SweepConfig c;
  try {
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    if (j.contains("code_ids")) c.code_ids = j.at("code_ids").get<std::vector<std::string>>();
    c.epsilon_grid = doubles(j, "epsilon_grid");
    c.energy_grid = doubles(j, "energy_grid");
    c.p_x_grid = doubles(j, "p_x_grid");
    if (j.contains("shots")) c.shots = j.at("shots").get<std::uint64_t>();
    if (j.contains("master_seed")) c.master_seed = j.at("master_seed").get<std::uint64_t>();
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  return c;
}

json manifest_json(const SweepConfig& config, const std::string& csv_name) {
  json m;
  m["format"] = "qec-energy-manifest";
  m["version"] = 1;
  m["registry_version"] = 1;
  m["config"] = config_to_json(config);
  if (!csv_name.empty()) m["csv"] = csv_name;
  m["seeding"] =
      "cell = splitmix64 chain over (master_seed ^ fnv1a64(code_id), grid_index, p_x_index); "
      "shot = splitmix64(cell ^ splitmix64(shot_index)); one mt19937_64 per shot";
  json reg = json::object();
  for (const auto& id : config.code_ids) {
    const CodeEntry e = lookup_code(id);
    json r;
    r["encoder_variant"] = e.encoder_variant;
    r["energy_coefficient"] = to_string(e.energy_coefficient);
    if (e.kind == TargetKind::Pipeline) {
      json counts = json::object();
      for (const auto& [g, k] : tally(e.circuit).gates) counts[std::string(gate_label(g))] = k;
      r["gate_counts"] = counts;
      r["fault_tolerant"] = e.fault_tolerant;
    } else {
      r["gate"] = std::string(gate_label(e.gate));
    }
    reg[id] = r;
  }
  m["registry"] = reg;
  json cells = json::array();
  for (const auto& c : sweep_cells(config)) {
    cells.push_back({{"code_id", c.code_id},
                     {"grid_index", c.grid_index},
                     {"p_x_index", c.p_x_index},
                     {"epsilon", c.epsilon},
                     {"energy", c.energy},
                     {"p_x", c.p_x},
                     {"seed", c.seed}});
  }
  m["cells"] = cells;
  return m;
}

void emit_manifest(const SweepConfig& config, const std::string& path, const std::string& csv_name) {
  const std::string text = manifest_json(config, csv_name).dump(2) + "\n";
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  if (!f.flush()) throw IoError("write to '" + path + "' failed");
}

}  // namespace qec
