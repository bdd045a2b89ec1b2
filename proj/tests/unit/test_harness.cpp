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


#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qec/analytics.hpp"
#include "qec/executor.hpp"
#include "qec/harness.hpp"
#include "qec/registry.hpp"

namespace qec {
namespace {

namespace fs = std::filesystem;

SweepConfig small_config() {
  SweepConfig c;
  c.name = "small";
  c.code_ids = {"bare", "rep3:waterfall", "perfect5:b", "rep3:direct:ft(v=1)", "gate:CY"};
  c.energy_grid = {30.0, 3000.0};
  c.p_x_grid = {0.0, 0.05};
  c.shots = 2500;
  c.master_seed = 77;
  return c;
}

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qec_harness_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(HarnessTest, ConfigValidation) {
  SweepConfig ok = small_config();
  EXPECT_NO_THROW(ok.validate());
  auto bad = [&](auto mutate) {
    SweepConfig c = small_config();
    mutate(c);
    EXPECT_THROW(c.validate(), std::invalid_argument);
  };
  bad([](SweepConfig& c) { c.code_ids.clear(); });
  bad([](SweepConfig& c) { c.energy_grid.clear(); });
  bad([](SweepConfig& c) { c.epsilon_grid = {0.1}; });
  bad([](SweepConfig& c) { c.p_x_grid.clear(); });
  bad([](SweepConfig& c) { c.p_x_grid = {1.2}; });
  bad([](SweepConfig& c) { c.shots = 99; });
  bad([](SweepConfig& c) { c.energy_grid = {-1.0}; });
  bad([](SweepConfig& c) { c.workers = -2; });
  SweepConfig unknown = small_config();
  unknown.code_ids.push_back("toric9");
  EXPECT_THROW(run_sweep(unknown), std::invalid_argument);
}

TEST(HarnessTest, ErrorMetric) {
  std::vector<ShotOutcome> all_ok(10);
  for (auto& o : all_ok) o.logical_bit = 1;
  const auto a = error_metric(all_ok, 1);
  EXPECT_EQ(a.error_rate, 0.0);
  EXPECT_EQ(a.std_error, 0.0);

  std::vector<ShotOutcome> half(400);
  for (std::size_t i = 0; i < half.size(); ++i) half[i].logical_bit = int(i % 2);
  const auto h = error_metric(half, 0);
  EXPECT_DOUBLE_EQ(h.error_rate, 0.5);
  EXPECT_DOUBLE_EQ(h.std_error, 0.5 / std::sqrt(400.0));

  // Mismatch fraction equals half the shift in the mean of (-1)^bit.
  std::vector<ShotOutcome> mixed(1000);
  for (std::size_t i = 0; i < mixed.size(); ++i) mixed[i].logical_bit = i % 7 == 0 ? 0 : 1;
  double z = 0;
  for (const auto& o : mixed) z += o.logical_bit ? -1.0 : 1.0;
  z /= double(mixed.size());
  EXPECT_NEAR(error_metric(mixed, 1).error_rate, std::abs(z - (-1.0)) / 2, 1e-15);
  EXPECT_THROW(error_metric({}, 0), std::invalid_argument);
}

TEST(HarnessTest, EnergyEpsilonConversion) {
  const CodeEntry rep5 = lookup_code("rep5");
  for (double e : {1.0, 37.5, 1e6}) {
    const double eps = epsilon_for_energy(rep5.energy_coefficient, e);
    EXPECT_NEAR(circuit_energy(rep5.circuit, eps).value / e, 1.0, 1e-12);
    EXPECT_NEAR(energy_for_epsilon(rep5.energy_coefficient, eps) / e, 1.0, 1e-12);
  }
  EXPECT_THROW(epsilon_for_energy(Rational(1), 0.0), std::invalid_argument);
  EXPECT_THROW(energy_for_epsilon(Rational(1), 0.0), DivergentBound);
}

TEST(HarnessTest, CellsCarryGridValues) {
  const auto cells = sweep_cells(small_config());
  EXPECT_EQ(cells.size(), 5u * 2u * 2u);
  for (const auto& c : cells) {
    EXPECT_EQ(c.seed, cell_seed(77, c.code_id, c.grid_index, c.p_x_index));
    EXPECT_EQ(c.energy, small_config().energy_grid[c.grid_index]);
  }
}

TEST(HarnessTest, BareQubitNearNoiselessMatchesChannel) {
  SweepConfig c;
  c.code_ids = {"bare"};
  c.epsilon_grid = {1e-6};
  c.p_x_grid = {0.1};
  c.shots = 100000;
  c.workers = 1;
  const auto r = run_sweep(c);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0].error_rate, 0.1, 3 * r[0].std_error);
  EXPECT_DOUBLE_EQ(r[0].std_error, std::sqrt(r[0].error_rate * (1 - r[0].error_rate) / 1e5));
}

TEST(HarnessTest, Rep3MatchesOracle) {
  SweepConfig c;
  c.code_ids = {"rep3:direct"};
  c.epsilon_grid = {1e-4};
  c.p_x_grid = {0.1};
  c.shots = 100000;
  c.workers = 1;
  const auto r = run_sweep(c);
  EXPECT_NEAR(r[0].error_rate, 0.028, 3 * r[0].std_error);
}

TEST(HarnessTest, WorkerInvariance) {
  std::string reference;
  for (int w : {1, 4, 16}) {
    SweepConfig c = small_config();
    c.workers = w;
    const std::string csv = to_csv(run_sweep(c));
    if (reference.empty()) {
      reference = csv;
    } else {
      EXPECT_EQ(csv, reference) << "workers " << w;
    }
  }
}

TEST(HarnessTest, AggregationMatchesSequentialRecount) {
  SweepConfig c = small_config();
  c.workers = 4;
  c.shots = 3000;
  const auto records = run_sweep(c);
  const auto cells = sweep_cells(c);
  ASSERT_EQ(records.size(), cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const CodeEntry e = lookup_code(cells[i].code_id);
    if (e.kind != TargetKind::Pipeline) continue;
    const int ideal = ideal_outcome(e.circuit);
    std::uint64_t miss = 0;
    for (std::uint64_t s = 0; s < c.shots; ++s) {
      Rng rng(shot_seed(cells[i].seed, s));
      miss += execute_shot(e.circuit, NoiseModel{cells[i].epsilon, cells[i].p_x}, rng).logical_bit != ideal;
    }
    EXPECT_EQ(records[i].error_rate, double(miss) / double(c.shots)) << cells[i].code_id;
    EXPECT_EQ(records[i].std_error, error_from_counts(miss, c.shots).std_error);
  }
}

TEST(HarnessTest, GateTargetsReportMeanInfidelity) {
  SweepConfig c;
  c.code_ids = {"gate:X"};
  c.epsilon_grid = {0.05};
  c.p_x_grid = {0.0};
  c.shots = 20000;
  const auto r = run_sweep(c);
  const double oracle = (1 - std::exp(-2 * 0.05 * 0.05)) / 3;
  EXPECT_NEAR(r[0].error_rate, oracle, 4 * r[0].std_error);
  EXPECT_LT(r[0].std_error, 0.05 * oracle);
  EXPECT_EQ(r[0].encoder_variant, "none");
}

TEST(HarnessTest, CsvEmptyIsHeaderOnly) {
  EXPECT_EQ(to_csv({}), std::string(kCsvHeader) + "\n");
  EXPECT_EQ(std::string(kCsvHeader), "code_id,encoder_variant,epsilon,energy,p_x,shots,error_rate,std_error,master_seed");
}

TEST(HarnessTest, CsvRoundTrip) {
  const SweepRecord r{"rep3:direct:ft(v=1)", "direct", 0.1 / 3, 1.0 / 7, 0.02, 20000, 1.0 / 3, std::sqrt(2.0) / 100,
                      18446744073709551615ULL};
  std::istringstream in(to_csv({r, r}));
  const auto back = parse_csv(in);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], r);
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  SweepRecord bad = r;
  bad.code_id = "a,b";
  EXPECT_THROW(to_csv({bad}), std::invalid_argument);
}

TEST(HarnessTest, CsvSchemaViolations) {
  const std::string h = std::string(kCsvHeader) + "\n";
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_csv(in);
  };
  EXPECT_THROW(parse(""), SchemaError);
  EXPECT_THROW(parse("code,variant\n"), SchemaError);
  EXPECT_THROW(parse(h + "bare,none,1,2,0.1,100,0.5,0.05\n"), SchemaError);
  EXPECT_THROW(parse(h + "bare,none,x,2,0.1,100,0.5,0.05,1\n"), SchemaError);
  EXPECT_THROW(parse(h + "bare,none,1,2,0.1,-5,0.5,0.05,1\n"), SchemaError);
  EXPECT_THROW(parse(h + "bare,none,1,2,0.1,100,1.5,0.05,1\n"), SchemaError);
  EXPECT_THROW(parse(h + ",none,1,2,0.1,100,0.5,0.05,1\n"), SchemaError);
  try {
    parse(h + "bare,none,1,2,0.1,100,0.5,0.05,1\nbare,none,1,2,0.1,100,0.5,0.05\n");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(parse(h + "bare,none,1,2,0.1,100,0.5,0.05,1\r\n\n").size(), 1u);
}

TEST(HarnessTest, IoErrorsCarryPath) {
  try {
    emit_csv({}, "/nonexistent-dir/out.csv");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.csv"), std::string::npos);
  }
  EXPECT_THROW(read_csv("/nonexistent-dir/in.csv"), IoError);
  EXPECT_THROW(emit_manifest(small_config(), "/nonexistent-dir/m.json"), IoError);
}

TEST(HarnessTest, ManifestRerunIsByteIdentical) {
  const fs::path dir = temp_dir("manifest");
  SweepConfig c = small_config();
  c.shots = 400;
  emit_csv(run_sweep(c), (dir / "a.csv").string());
  emit_manifest(c, (dir / "a.manifest.json").string(), "a.csv");

  std::ifstream f(dir / "a.manifest.json");
  const nlohmann::json m = nlohmann::json::parse(f);
  EXPECT_EQ(m.at("csv"), "a.csv");
  EXPECT_EQ(m.at("cells").size(), sweep_cells(c).size());
  EXPECT_EQ(m.at("registry").at("rep3:waterfall").at("energy_coefficient"), "3/4");
  EXPECT_EQ(m.at("cells")[0].at("seed").get<std::uint64_t>(), sweep_cells(c)[0].seed);
  SweepConfig again = config_from_json(m);
  again.workers = 3;
  emit_csv(run_sweep(again), (dir / "b.csv").string());
  EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
  fs::remove_all(dir);
}

TEST(HarnessTest, ConfigJsonRoundTripAndRejectsUnknownKeys) {
  const SweepConfig c = preset("fig4");
  const SweepConfig back = config_from_json(config_to_json(c));
  EXPECT_EQ(back.code_ids, c.code_ids);
  EXPECT_EQ(back.energy_grid, c.energy_grid);
  EXPECT_EQ(back.p_x_grid, c.p_x_grid);
  EXPECT_EQ(back.shots, c.shots);
  EXPECT_EQ(back.master_seed, c.master_seed);
  nlohmann::json j = config_to_json(c);
  j["shotz"] = 5;
  EXPECT_THROW(config_from_json(j), std::invalid_argument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"shots": "many"})")), std::invalid_argument);
}

TEST(HarnessTest, Presets) {
  const SweepConfig f3 = preset("fig3");
  EXPECT_EQ(f3.code_ids, (std::vector<std::string>{"rep7:waterfall", "rep7:direct", "rep7:parallel"}));
  EXPECT_EQ(f3.p_x_grid, std::vector<double>{0.08});
  const SweepConfig f5 = preset("fig5");
  EXPECT_EQ(f5.code_ids,
            (std::vector<std::string>{"bare", "rep3:direct", "rep5:direct", "rep7:direct", "rep9:direct"}));
  EXPECT_EQ(f5.p_x_grid, std::vector<double>{0.10});
  const SweepConfig f9 = preset("fig9");
  EXPECT_EQ(f9.code_ids, (std::vector<std::string>{"bare", "rep3:direct", "rep3:direct:ft(v=1)"}));
  EXPECT_EQ(f9.p_x_grid, std::vector<double>{0.02});
  EXPECT_EQ(preset("fig7_8").p_x_grid.at(1), 0.02);
  for (const auto& name : preset_names()) {
    const SweepConfig p = preset(name);
    EXPECT_NO_THROW(p.validate()) << name;
    EXPECT_EQ(p.shots, 20000u);
    for (const auto& id : p.code_ids) EXPECT_TRUE(is_registered(id)) << id;
  }
  EXPECT_THROW(preset("fig2"), std::invalid_argument);
  const auto g = log_grid(1, 100, 3);
  EXPECT_DOUBLE_EQ(g[1], 10.0);
  EXPECT_THROW(log_grid(0, 1, 3), std::invalid_argument);
}

TEST(HarnessTest, LowEnergySaturatesAtHalf) {
  SweepConfig c;
  c.code_ids = {"rep3:direct", "rep5:direct"};
  c.energy_grid = {0.05, 0.1, 0.2};
  c.p_x_grid = {0.1};
  c.shots = 4000;
  for (const auto& r : run_sweep(c)) EXPECT_NEAR(r.error_rate, 0.5, 4 * 0.5 / std::sqrt(4000.0)) << r.code_id;
}

// Top-of-grid cells of every repetition preset sit on the closed-form rate.
TEST(HarnessTest, HighEnergySaturationOnPresets) {
  for (const std::string name : {"fig3", "fig4", "fig5", "fig9"}) {
    SweepConfig c = preset(name);
    c.energy_grid = {c.energy_grid.back()};
    if (name == "fig4") c.shots = 5000;
    for (const auto& r : run_sweep(c)) {
      const CodeEntry e = lookup_code(r.code_id);
      if (e.repetition_size == 0) continue;
      const double oracle = repetition_failure_rate(r.p_x, e.repetition_size);
      const double se = std::sqrt(std::max(oracle * (1 - oracle), r.error_rate * (1 - r.error_rate)) / double(r.shots));
      EXPECT_LE(std::abs(r.error_rate - oracle), 3 * se + 1.0 / double(r.shots))
          << name << " " << r.code_id << " p_x=" << r.p_x << " got " << r.error_rate << " oracle " << oracle;
    }
  }
}

}  // namespace
}  // namespace qec
