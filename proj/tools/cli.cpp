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

#include "cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "qec/analytics.hpp"
#include "qec/ft_readout.hpp"
#include "qec/harness.hpp"
#include "qec/registry.hpp"

namespace qec::cli {

namespace {

namespace fs = std::filesystem;

class BadArguments : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string sig4(double x) { return fmt::format("{:.4g}", x); }

// Exact value of a decimal literal such as 0.1 or 2.5e-3.
Rational parse_decimal(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  BigInt mant = 0;
  int scale = 0;
  bool digits = false, dot = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (c >= '0' && c <= '9') {
      mant = mant * 10 + (c - '0');
      digits = true;
      if (dot) ++scale;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  int exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    try {
      std::size_t used = 0;
      exp10 = std::stoi(s.substr(i + 1), &used);
      i += 1 + used;
    } catch (const std::exception&) {
      throw BadArguments("not a decimal number: " + s);
    }
  }
  if (!digits || i != s.size()) throw BadArguments("not a decimal number: " + s);
  Rational r(mant);
  const int e = exp10 - scale;
  BigInt p10 = 1;
  for (int k = 0; k < std::abs(e); ++k) p10 *= 10;
  r = e >= 0 ? r * Rational(p10) : r / Rational(p10);
  return neg ? -r : r;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> out;
  if (spec.find(':') != std::string::npos) {
    const auto a = spec.find(':'), b = spec.find(':', a + 1);
    if (b == std::string::npos) throw BadArguments("grid must be lo:hi:points or a comma list: " + spec);
    try {
      return log_grid(std::stod(spec.substr(0, a)), std::stod(spec.substr(a + 1, b - a - 1)),
                      std::stoul(spec.substr(b + 1)));
    } catch (const std::logic_error& e) {
      throw BadArguments(std::string("bad grid '") + spec + "': " + e.what());
    }
  }
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto end = spec.find(',', start);
    const std::string item = spec.substr(start, end == std::string::npos ? std::string::npos : end - start);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw BadArguments("bad grid value '" + item + "'");
    }
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = s.find(',', start);
    // ft(v=...) ids never contain commas, so a plain split is safe.
    out.push_back(s.substr(start, end == std::string::npos ? std::string::npos : end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::string timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

std::string file_safe(const std::string& id) {
  std::string s;
  for (char c : id) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
  return s;
}

void print_records(const std::vector<SweepRecord>& recs, std::ostream& out) {
  out << fmt::format("{:<24} {:>10} {:>10} {:>8} {:>10} {:>10}\n", "code_id", "epsilon", "energy", "p_x",
                     "error", "std_error");
  for (const auto& r : recs) {
    out << fmt::format("{:<24} {:>10} {:>10} {:>8} {:>10} {:>10}\n", r.code_id, sig4(r.epsilon), sig4(r.energy),
                       sig4(r.p_x), sig4(r.error_rate), sig4(r.std_error));
  }
}

void print_matrix(const Matrix& m, std::ostream& out) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out << "  [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto z = m(i, j);
      out << fmt::format("{}{:>7}{:+.4g}i", j ? "  " : "", sig4(z.real()), z.imag());
    }
    out << " ]\n";
  }
}

int cmd_gates(const std::string& name, const std::optional<double>& epsilon, std::ostream& out) {
  const auto g = parse_gate_name(name);
  if (!g) throw BadArguments("unknown gate '" + name + "'; available gates: X Y Z H Q S CX CY CZ");
  const GateSpec& spec = gate_catalog(*g);
  out << "gate " << gate_label(*g) << " (arity " << spec.arity << ")\n";
  out << "terms:\n";
  for (const auto& t : spec.terms) {
    out << fmt::format("  lambda = {:>8} rad  (lambda^2 = {} pi^2)  generator {}\n", sig4(t.lambda),
                       to_string(t.lambda_sq), t.label);
  }
  const Rational coef = gate_energy_coefficient(spec);
  out << "energy coefficient: " << to_string(coef) << " pi^2/eps^2\n";
  if (epsilon) {
    if (!(*epsilon > 0)) throw BadArguments("--epsilon must be > 0");
    out << fmt::format("energy bound at eps = {}: {} hbar*omega0\n", sig4(*epsilon),
                       sig4(gate_energy_bound(spec, *epsilon).value));
  }
  out << "ideal unitary:\n";
  print_matrix(spec.ideal_unitary, out);
  return kOk;
}

int parse_rep_size(const std::string& code) {
  if (code == "bare") return 1;
  if (code.size() < 4 || code.compare(0, 3, "rep") != 0) {
    throw BadArguments("oracle expects --code repN (N odd) or bare, got '" + code + "'");
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(code.substr(3), &used);
    if (used != code.size() - 3) throw std::invalid_argument(code);
  } catch (const std::logic_error&) {
    throw BadArguments("oracle expects --code repN, got '" + code + "'");
  }
  if (n < 1 || n % 2 == 0) throw BadArguments("repetition size must be odd, got " + std::to_string(n));
  if (n > 99) throw BadArguments("repetition size too large");
  return n;
}

int cmd_oracle(const std::string& code, const std::string& px_text, std::ostream& out) {
  const int n = parse_rep_size(code);
  const Rational p = parse_decimal(px_text);
  if (p < 0 || p > 1) throw BadArguments("--px must lie in [0, 1]");
  const double pd = to_double(p);
  const Rational fail = repetition_failure_rate(p, n);
  const Rational corr = expected_corrections(p, n);
  out << fmt::format("N = {}, p_x = {}\n", n, px_text);
  out << fmt::format("failure rate (exact):      {}  = {}\n", sig4(to_double(fail)), to_string(fail));
  out << fmt::format("failure rate (leading):    {}\n", sig4(repetition_failure_rate_leading(pd, n)));
  out << fmt::format("expected corrections:      {}  = {}\n", sig4(to_double(corr)), to_string(corr));
  out << fmt::format("expected corrections (leading): {}\n", sig4(pd * n));
  if (n >= 3) {
    out << fmt::format("energy coefficient:        {} pi^2/eps^2\n", to_string(repetition_energy_coefficient(n)));
    out << fmt::format("correction energy bound / budget: {}\n", to_string(correction_energy_ratio_bound(n)));
  }
  return kOk;
}

struct SweepArgs {
  std::string preset;
  std::string config;
  std::string out_dir = ".";
  std::string output;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::string codes;
  std::string px;
  std::string energy_grid;
  std::string epsilon_grid;
  bool quiet = false;
};

SweepConfig resolve_config(const SweepArgs& a) {
  if (!a.preset.empty() && !a.config.empty()) throw BadArguments("--preset and --config are mutually exclusive");
  if (!a.energy_grid.empty() && !a.epsilon_grid.empty()) {
    throw BadArguments("--energy-grid and --epsilon-grid are mutually exclusive");
  }
  SweepConfig c;
  c.p_x_grid = {0.0};
  if (!a.preset.empty()) {
    c = preset(a.preset);
  } else if (!a.config.empty()) {
    std::ifstream f(a.config);
    if (!f) throw IoError("cannot open config '" + a.config + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      throw SchemaError("config '" + a.config + "' is not valid JSON: " + e.what());
    }
    try {
      c = config_from_json(j);
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string(e.what()));
    }
  }
  if (const char* env = std::getenv("QEC_SEED")) {
    try {
      std::size_t used = 0;
      c.master_seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::logic_error&) {
      throw BadArguments(std::string("QEC_SEED is not an unsigned integer: ") + env);
    }
  }
  if (a.seed) c.master_seed = *a.seed;
  if (a.shots) c.shots = *a.shots;
  if (a.workers) c.workers = *a.workers;
  if (!a.codes.empty()) c.code_ids = split_list(a.codes);
  if (!a.px.empty()) c.p_x_grid = parse_grid(a.px);
  if (!a.energy_grid.empty()) {
    c.energy_grid = parse_grid(a.energy_grid);
    c.epsilon_grid.clear();
  }
  if (!a.epsilon_grid.empty()) {
    c.epsilon_grid = parse_grid(a.epsilon_grid);
    c.energy_grid.clear();
  }
  try {
    c.validate();
    for (const auto& id : c.code_ids) lookup_code(id);
  } catch (const std::invalid_argument& e) {
    throw BadArguments(e.what());
  }
  return c;
}

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const SweepConfig c = resolve_config(a);
  const std::string base = a.output.empty() ? c.name + "_" + timestamp() : a.output;
  const fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + a.out_dir + "': " + ec.message());

  const auto records = run_sweep(c);
  const fs::path csv = dir / (base + ".csv");
  emit_csv(records, csv.string());
  emit_manifest(c, (dir / (base + ".manifest.json")).string(), csv.filename().string());
  out << "wrote " << csv.string() << "\n";
  out << "wrote " << (dir / (base + ".manifest.json")).string() << "\n";
  if (c.name == "fig4" || c.name == "fig7_8") {
    for (const auto& id : c.code_ids) {
      std::vector<SweepRecord> part;
      for (const auto& r : records) {
        if (r.code_id == id) part.push_back(r);
      }
      const fs::path p = dir / (base + "_" + file_safe(id) + ".csv");
      emit_csv(part, p.string());
      out << "wrote " << p.string() << "\n";
    }
  }
  if (!a.quiet) print_records(records, out);
  return kOk;
}

int cmd_crossover(const std::vector<std::string>& inputs, const std::optional<double>& px, bool persistence,
                  std::ostream& out) {
  std::vector<SweepRecord> recs;
  for (const auto& path : inputs) {
    auto part = read_csv(path);
    recs.insert(recs.end(), part.begin(), part.end());
  }
  std::set<double> pxs;
  for (const auto& r : recs) {
    if (!px || r.p_x == *px) pxs.insert(r.p_x);
  }
  if (pxs.empty()) throw BadArguments("no records match the requested p_x");
  for (double p : pxs) {
    std::map<int, std::string> by_size;
    std::map<std::string, ErrorCurve> curves;
    for (const auto& r : recs) {
      if (r.p_x != p) continue;
      curves[r.code_id].points.push_back({r.energy, r.error_rate, r.std_error});
    }
    for (auto& [id, curve] : curves) {
      std::sort(curve.points.begin(), curve.points.end(),
                [](const CurvePoint& x, const CurvePoint& y) { return x.energy < y.energy; });
      try {
        curve.validate();
      } catch (const std::invalid_argument& e) {
        throw SchemaError("curve for " + id + ": " + e.what());
      }
      if (!is_registered(id)) throw SchemaError("unregistered code id in csv: " + id);
      const CodeEntry e = lookup_code(id);
      if (e.repetition_size == 0 || e.fault_tolerant) continue;
      if (!by_size.emplace(e.repetition_size, id).second) {
        out << "note: several curves for N = " << e.repetition_size << "; using " << by_size[e.repetition_size]
            << "\n";
      }
    }
    out << "p_x = " << sig4(p) << "\n";
    out << fmt::format("{:<16} {:<16} {:>14}\n", "code", "vs", "crossover");
    std::vector<std::pair<double, double>> fit_points;
    for (auto it = by_size.begin(); it != by_size.end() && std::next(it) != by_size.end(); ++it) {
      const auto nxt = std::next(it);
      const auto e = find_crossover(curves.at(nxt->second), curves.at(it->second), CrossoverOptions{persistence});
      out << fmt::format("{:<16} {:<16} {:>14}\n", nxt->second, it->second, e ? sig4(*e) : "none");
      if (e) fit_points.emplace_back(double(nxt->first), *e);
    }
    if (fit_points.size() >= 2) {
      const auto fit = fit_exponential(fit_points);
      out << fmt::format("fit E = a*exp(b*N): a = {}, b = {}, residual = {}\n", sig4(fit.amplitude),
                         sig4(fit.rate), sig4(fit.residual));
    } else {
      out << "fit: fewer than two crossovers\n";
    }
  }
  return kOk;
}

struct FtArgs {
  int v = 1;
  bool chain = false;
  bool simulate = true;
  double px = 0.02;
  std::uint64_t shots = 4000;
  std::size_t points = 12;
  std::optional<std::uint64_t> seed;
  int workers = 0;
  std::string out_csv;
};

int cmd_ft_compare(const FtArgs& a, std::ostream& out) {
  if (a.v < 0) throw BadArguments("--v must be >= 0");
  FtConfig cfg;
  cfg.validation_rounds = a.v;
  cfg.ring = !a.chain;
  out << fmt::format("validation rounds v = {}\n", a.v);
  out << fmt::format("{:>3} {:>10} {:>14} {:>10} {:>12} {:>16}\n", "N", "non-FT", "FT overhead", "ratio",
                     "ratio (num)", "FT circuit frag");
  for (int n = 3; n <= 11; n += 2) {
    const Rational base = repetition_energy_coefficient(n);
    const Rational over = ft_overhead_coefficient(n, a.v);
    const Rational ratio = ft_budget_ratio(n, a.v);
    const Rational frag = circuit_energy_coefficient(build_ft_syndrome_extraction(n, cfg));
    out << fmt::format("{:>3} {:>10} {:>14} {:>10} {:>12} {:>16}\n", n, to_string(base), to_string(over),
                       to_string(ratio), sig4(to_double(ratio)), to_string(frag));
  }
  const Rational lim = ft_budget_ratio_limit(a.v);
  out << fmt::format("ratio as N -> infinity: {} = {}\n", to_string(lim), sig4(to_double(lim)));
  if (!a.simulate) return kOk;

  SweepConfig c;
  c.name = "ft-compare";
  c.code_ids = {"rep3:direct", fmt::format("rep3:direct:ft(v={}){}", a.v, a.chain ? ":chain" : "")};
  c.energy_grid = log_grid(1.0, 1e6, a.points);
  c.p_x_grid = {a.px};
  c.shots = a.shots;
  c.workers = a.workers;
  if (const char* env = std::getenv("QEC_SEED")) c.master_seed = std::strtoull(env, nullptr, 10);
  if (a.seed) c.master_seed = *a.seed;
  try {
    c.validate();
  } catch (const std::invalid_argument& e) {
    throw BadArguments(e.what());
  }
  const auto recs = run_sweep(c);
  if (!a.out_csv.empty()) emit_csv(recs, a.out_csv);
  out << fmt::format("p_x = {}, repetition oracle (N = 3) = {}\n", sig4(a.px), sig4(repetition_failure_rate(a.px, 3)));
  out << fmt::format("{:>10} {:>12} {:>10} {:>12} {:>10}\n", "energy", "non-FT", "+-", "FT", "+-");
  const std::size_t m = c.energy_grid.size();
  for (std::size_t i = 0; i < m; ++i) {
    const auto& x = recs[i];
    const auto& y = recs[m + i];
    out << fmt::format("{:>10} {:>12} {:>10} {:>12} {:>10}\n", sig4(x.energy), sig4(x.error_rate),
                       sig4(x.std_error), sig4(y.error_rate), sig4(y.std_error));
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Noisy-gate simulator for the control-energy versus logical-error tradeoff of QEC codes",
               "qec-energy"};
  app.require_subcommand(1);

  auto* gates = app.add_subcommand("gates", "Show a catalog gate: generator terms, energy coefficient, unitary");
  std::string gate_name;
  std::optional<double> gate_eps;
  gates->add_option("--gate", gate_name, "Gate name (X Y Z H Q S CX CY CZ)")->required();
  gates->add_option("--epsilon", gate_eps, "Coefficient noise standard deviation (rad)");

  auto* oracle = app.add_subcommand("oracle", "Closed-form repetition-code failure rate and expected corrections");
  std::string oracle_code, oracle_px;
  oracle->add_option("--code", oracle_code, "repN with N odd, or bare")->required();
  oracle->add_option("--px", oracle_px, "Channel bit-flip probability")->required();

  auto* sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep and write CSV + manifest");
  SweepArgs sa;
  sweep->add_option("--preset", sa.preset, "Preset name (fig1 fig3 fig4 fig5 fig6 fig7_8 fig9)");
  sweep->add_option("--config", sa.config, "JSON config or manifest file");
  sweep->add_option("--out-dir", sa.out_dir, "Output directory");
  sweep->add_option("--output", sa.output, "Output base name (default <preset>_<timestamp>)");
  sweep->add_option("--shots", sa.shots, "Shots per cell");
  sweep->add_option("--seed", sa.seed, "Master seed (overrides QEC_SEED)");
  sweep->add_option("--workers", sa.workers, "Worker threads (0 = all cores)");
  sweep->add_option("--codes", sa.codes, "Comma-separated code ids");
  sweep->add_option("--px", sa.px, "p_x grid: comma list or lo:hi:points");
  sweep->add_option("--energy-grid", sa.energy_grid, "Energy grid (hbar*omega0): comma list or lo:hi:points (log)");
  sweep->add_option("--epsilon-grid", sa.epsilon_grid, "Epsilon grid: comma list or lo:hi:points (log)");
  sweep->add_flag("--quiet", sa.quiet, "Do not print the record table");

  auto* cross = app.add_subcommand("crossover", "Crossover energies between consecutive repetition sizes");
  std::vector<std::string> cross_inputs;
  std::optional<double> cross_px;
  bool no_persistence = false;
  cross->add_option("--input", cross_inputs, "Sweep CSV file(s)")->required();
  cross->add_option("--px", cross_px, "Only use records at this p_x");
  cross->add_flag("--no-persistence", no_persistence, "Report the first sign change instead of the last");

  auto* ft = app.add_subcommand("ft-compare", "Fault-tolerant readout energy ratios and error curves");
  FtArgs fa;
  ft->add_option("--v", fa.v, "Validation rounds per cat state");
  ft->add_flag("--chain", fa.chain, "Use N - 1 cat states instead of N");
  ft->add_flag("!--no-sim", fa.simulate, "Only print the energy accounting");
  ft->add_option("--px", fa.px, "Channel bit-flip probability for the curves");
  ft->add_option("--shots", fa.shots, "Shots per cell");
  ft->add_option("--points", fa.points, "Energy grid points");
  ft->add_option("--seed", fa.seed, "Master seed");
  ft->add_option("--workers", fa.workers, "Worker threads (0 = all cores)");
  ft->add_option("--out", fa.out_csv, "Write the curves to this CSV");

  auto* circ = app.add_subcommand("circuit", "Print the circuit of a registered code id");
  std::string circ_id;
  circ->add_option("--code", circ_id, "Code id, e.g. rep3:direct")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kBadArguments;
  }

  try {
    if (gates->parsed()) return cmd_gates(gate_name, gate_eps, out);
    if (oracle->parsed()) return cmd_oracle(oracle_code, oracle_px, out);
    if (sweep->parsed()) return cmd_sweep(sa, out);
    if (cross->parsed()) return cmd_crossover(cross_inputs, cross_px, !no_persistence, out);
    if (ft->parsed()) return cmd_ft_compare(fa, out);
    if (circ->parsed()) {
      const CodeEntry e = lookup_code(circ_id);
      if (e.kind != TargetKind::Pipeline) throw BadArguments(circ_id + " is a single gate, not a circuit");
      out << e.circuit.dump();
      out << "energy coefficient: " << to_string(e.energy_coefficient) << " pi^2/eps^2\n";
      return kOk;
    }
  } catch (const SchemaError& e) {
    err << "schema error: " << e.what() << "\n";
    return kSchemaViolation;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadArguments;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kBadArguments;
}

}  // namespace qec::cli
