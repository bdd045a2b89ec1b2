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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qec/executor.hpp"

namespace qec {

inline constexpr const char* kCsvHeader =
    "code_id,encoder_variant,epsilon,energy,p_x,shots,error_rate,std_error,master_seed";

// Energy grid values are control energies in units of hbar*omega0, the same
// unit as the CSV energy column. A code with coefficient c (units of
// pi^2/eps^2) reaches energy E at eps = pi * sqrt(c / E).
struct SweepConfig {
  std::string name = "custom";
  std::vector<std::string> code_ids;
  std::vector<double> epsilon_grid;
  std::vector<double> energy_grid;
  std::vector<double> p_x_grid;
  std::uint64_t shots = 20000;
  std::uint64_t master_seed = 1;
  // 0 means one worker per hardware thread.
  int workers = 0;

  void validate() const;
  bool uses_energy_grid() const { return !energy_grid.empty(); }
  std::size_t grid_size() const { return uses_energy_grid() ? energy_grid.size() : epsilon_grid.size(); }
};

struct SweepRecord {
  std::string code_id;
  std::string encoder_variant;
  double epsilon = 0;
  double energy = 0;
  double p_x = 0;
  std::uint64_t shots = 0;
  double error_rate = 0;
  double std_error = 0;
  std::uint64_t master_seed = 0;

  bool operator==(const SweepRecord&) const = default;
};

struct ErrorEstimate {
  double error_rate;
  double std_error;
};

ErrorEstimate error_metric(const std::vector<ShotOutcome>& outcomes, int ideal);
ErrorEstimate error_from_counts(std::uint64_t mismatches, std::uint64_t shots);

double epsilon_for_energy(const Rational& coefficient, double energy);
double energy_for_epsilon(const Rational& coefficient, double epsilon);

struct CellInfo {
  std::string code_id;
  std::size_t grid_index;
  std::size_t p_x_index;
  double epsilon;
  double energy;
  double p_x;
  std::uint64_t seed;
};

// Cells in output order: code, then grid point, then p_x.
std::vector<CellInfo> sweep_cells(const SweepConfig& config);

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

std::vector<SweepRecord> run_sweep(const SweepConfig& config, const ProgressFn& progress = {});

std::string format_double(double x);
std::string to_csv(const std::vector<SweepRecord>& records);
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);
// Throws SchemaError on a malformed header or row.
std::vector<SweepRecord> parse_csv(std::istream& in);
std::vector<SweepRecord> read_csv(const std::string& path);

nlohmann::json config_to_json(const SweepConfig& config);
// Accepts either a bare config object or a manifest with a "config" member.
SweepConfig config_from_json(const nlohmann::json& j);
nlohmann::json manifest_json(const SweepConfig& config, const std::string& csv_name = "");
void emit_manifest(const SweepConfig& config, const std::string& path, const std::string& csv_name = "");

std::vector<std::string> preset_names();
SweepConfig preset(const std::string& name);
std::vector<double> log_grid(double lo, double hi, std::size_t points);

}  // namespace qec
