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

#include "qec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qec/registry.hpp"

namespace qec {

namespace {

constexpr std::uint64_t kChunk = 1024;

void check_grid(const std::vector<double>& g, const char* what, bool allow_zero) {
  for (double x : g) {
    if (!std::isfinite(x) || x < 0 || (!allow_zero && x == 0)) {
      throw std::invalid_argument(std::string("sweep config: ") + what + " values must be finite and " +
                                  (allow_zero ? ">= 0" : "> 0"));
    }
  }
}

struct ChunkResult {
  std::uint64_t mismatches = 0;
  double sum = 0;
  double sum_sq = 0;
};

struct Task {
  std::size_t cell;
  std::uint64_t first_shot;
  std::uint64_t count;
};

}  // namespace

void SweepConfig::validate() const {
  if (code_ids.empty()) throw std::invalid_argument("sweep config: code_ids is empty");
  if (epsilon_grid.empty() == energy_grid.empty()) {
    throw std::invalid_argument("sweep config: exactly one of epsilon_grid and energy_grid must be given");
  }
  if (p_x_grid.empty()) throw std::invalid_argument("sweep config: p_x_grid is empty");
  check_grid(epsilon_grid, "epsilon_grid", false);
  check_grid(energy_grid, "energy_grid", false);
  for (double p : p_x_grid) {
    if (!(p >= 0 && p <= 1)) throw std::invalid_argument("sweep config: p_x values must lie in [0, 1]");
  }
  if (shots < 100) throw std::invalid_argument("sweep config: shots must be >= 100");
  if (workers < 0) throw std::invalid_argument("sweep config: workers must be >= 0");
}

ErrorEstimate error_from_counts(std::uint64_t mismatches, std::uint64_t shots) {
  if (shots == 0) throw std::invalid_argument("error metric needs at least one shot");
  const double e = double(mismatches) / double(shots);
  return {e, std::sqrt(e * (1 - e) / double(shots))};
}

ErrorEstimate error_metric(const std::vector<ShotOutcome>& outcomes, int ideal) {
  std::uint64_t miss = 0;
  for (const auto& o : outcomes) miss += o.logical_bit != ideal ? 1 : 0;
  return error_from_counts(miss, outcomes.size());
}

double epsilon_for_energy(const Rational& coefficient, double energy) {
  if (!(energy > 0)) throw std::invalid_argument("energy must be > 0");
  return std::numbers::pi * std::sqrt(to_double(coefficient) / energy);
}

double energy_for_epsilon(const Rational& coefficient, double epsilon) {
  if (epsilon == 0) throw DivergentBound("energy diverges at epsilon = 0");
  return to_double(coefficient) * std::numbers::pi * std::numbers::pi / (epsilon * epsilon);
}

std::vector<CellInfo> sweep_cells(const SweepConfig& config) {
  config.validate();
  std::vector<CellInfo> cells;
  for (const auto& id : config.code_ids) {
    const CodeEntry entry = lookup_code(id);
    for (std::size_t g = 0; g < config.grid_size(); ++g) {
      for (std::size_t k = 0; k < config.p_x_grid.size(); ++k) {
        CellInfo c{id, g, k, 0, 0, config.p_x_grid[k], cell_seed(config.master_seed, id, g, k)};
        if (config.uses_energy_grid()) {
          c.energy = config.energy_grid[g];
          c.epsilon = epsilon_for_energy(entry.energy_coefficient, c.energy);
        } else {
          c.epsilon = config.epsilon_grid[g];
          c.energy = energy_for_epsilon(entry.energy_coefficient, c.epsilon);
        }
        cells.push_back(std::move(c));
      }
    }
  }
  return cells;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config, const ProgressFn& progress) {
  const std::vector<CellInfo> cells = sweep_cells(config);

  std::map<std::string, CodeEntry> entries;
  std::map<std::string, int> ideal;
  for (const auto& id : config.code_ids) {
    if (entries.count(id)) continue;
    CodeEntry e = lookup_code(id);
    if (e.kind == TargetKind::Pipeline) ideal[id] = ideal_outcome(e.circuit);
    entries.emplace(id, std::move(e));
  }

  std::vector<Task> tasks;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (std::uint64_t s = 0; s < config.shots; s += kChunk) {
      tasks.push_back({c, s, std::min(kChunk, config.shots - s)});
    }
  }
  std::vector<ChunkResult> results(tasks.size());

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    try {
      for (std::size_t t = next++; t < tasks.size(); t = next++) {
        const Task& task = tasks[t];
        const CellInfo& cell = cells[task.cell];
        const CodeEntry& entry = entries.at(cell.code_id);
        ChunkResult r;
        if (entry.kind == TargetKind::Gate) {
          const GateSpec& spec = gate_catalog(entry.gate);
          for (std::uint64_t s = task.first_shot; s < task.first_shot + task.count; ++s) {
            Rng rng(shot_seed(cell.seed, s));
            const double e = 1 - average_gate_fidelity(spec.ideal_unitary, sample_noisy_gate(spec, cell.epsilon, rng));
            r.sum += e;
            r.sum_sq += e * e;
          }
        } else {
          const NoiseModel noise{cell.epsilon, cell.p_x};
          const int want = ideal.at(cell.code_id);
          for (std::uint64_t s = task.first_shot; s < task.first_shot + task.count; ++s) {
            Rng rng(shot_seed(cell.seed, s));
            if (execute_shot_unchecked(entry.circuit, noise, rng).logical_bit != want) ++r.mismatches;
          }
        }
        results[t] = r;
        const std::size_t d = ++done;
        if (progress) {
          std::lock_guard<std::mutex> lock(progress_mutex);
          progress(d, tasks.size());
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = tasks.size();
    }
  };

  std::size_t n_workers = config.workers > 0 ? std::size_t(config.workers)
                                             : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min(n_workers, std::max<std::size_t>(1, tasks.size()));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Reduce in task order so the sums do not depend on scheduling.
  std::vector<ChunkResult> per_cell(cells.size());
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    ChunkResult& acc = per_cell[tasks[t].cell];
    acc.mismatches += results[t].mismatches;
    acc.sum += results[t].sum;
    acc.sum_sq += results[t].sum_sq;
  }

  std::vector<SweepRecord> out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const CellInfo& cell = cells[c];
    const CodeEntry& entry = entries.at(cell.code_id);
    SweepRecord rec{cell.code_id, entry.encoder_variant, cell.epsilon, cell.energy, cell.p_x,
                    config.shots, 0, 0, config.master_seed};
    if (entry.kind == TargetKind::Gate) {
      const double n = double(config.shots);
      const double mean = per_cell[c].sum / n;
      const double var = std::max(0.0, (per_cell[c].sum_sq - n * mean * mean) / (n - 1));
      rec.error_rate = std::clamp(mean, 0.0, 1.0);
      rec.std_error = std::sqrt(var / n);
    } else {
      const ErrorEstimate est = error_from_counts(per_cell[c].mismatches, config.shots);
      rec.error_rate = est.error_rate;
      rec.std_error = est.std_error;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace qec
