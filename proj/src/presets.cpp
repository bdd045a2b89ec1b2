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

#include <cmath>
#include <stdexcept>

#include "qec/harness.hpp"

namespace qec {

std::vector<double> log_grid(double lo, double hi, std::size_t points) {
  if (!(lo > 0 && hi > lo) || points < 2) throw std::invalid_argument("log_grid: need 0 < lo < hi and >= 2 points");
  std::vector<double> g(points);
  const double a = std::log10(lo), b = std::log10(hi);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = std::pow(10.0, a + (b - a) * double(i) / double(points - 1));
  }
  return g;
}

std::vector<std::string> preset_names() { return {"fig1", "fig3", "fig4", "fig5", "fig6", "fig7_8", "fig9"}; }

SweepConfig preset(const std::string& name) {
  SweepConfig c;
  c.name = name;
  c.shots = 20000;
  c.master_seed = 20240917;
  if (name == "fig1") {
    c.code_ids = {"gate:X", "gate:CX", "gate:Q", "gate:S"};
    c.epsilon_grid = log_grid(1e-3, 1.0, 40);
    c.p_x_grid = {0.0};
  } else if (name == "fig3") {
    c.code_ids = {"rep7:waterfall", "rep7:direct", "rep7:parallel"};
    c.energy_grid = log_grid(1e1, 1e6, 40);
    c.p_x_grid = {0.08};
  } else if (name == "fig4") {
    c.code_ids = {"rep3:direct", "rep5:direct", "rep7:direct", "rep9:direct"};
    c.energy_grid = log_grid(1e1, 1e6, 20);
    c.p_x_grid = {0.0, 0.025, 0.05, 0.075, 0.1, 0.125, 0.15, 0.175, 0.2};
  } else if (name == "fig5") {
    c.code_ids = {"bare", "rep3:direct", "rep5:direct", "rep7:direct", "rep9:direct"};
    c.energy_grid = log_grid(1e0, 1e6, 40);
    c.p_x_grid = {0.10};
  } else if (name == "fig6") {
    c.code_ids = {"perfect5:a", "perfect5:b", "perfect5:c"};
    c.energy_grid = log_grid(1e1, 1e7, 40);
    c.p_x_grid = {0.08};
  } else if (name == "fig7_8") {
    c.code_ids = {"rep3:direct", "perfect5:a", "steane7"};
    c.energy_grid = log_grid(1e1, 1e8, 40);
    c.p_x_grid = {0.0, 0.02, 0.04, 0.06, 0.08, 0.1};
  } else if (name == "fig9") {
    c.code_ids = {"bare", "rep3:direct", "rep3:direct:ft(v=1)"};
    c.energy_grid = log_grid(1e0, 1e7, 40);
    c.p_x_grid = {0.02};
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'; expected fig1, fig3, fig4, fig5, fig6, fig7_8 or fig9");
  }
  return c;
}

}  // namespace qec
