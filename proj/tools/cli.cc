// Copyright 2026 The pomlab Authors
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

#include "cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "pomlab/classical.h"
#include "pomlab/error.h"
#include "pomlab/experiment.h"
#include "pomlab/protocol.h"
#include "pomlab/serialization.h"

#ifndef POMLAB_VERSION
#define POMLAB_VERSION "unknown"
#endif

namespace pomlab::cli {
namespace {

using nlohmann::json;

// Thrown when a computed result contradicts a property the library
// guarantees; maps to exit code 3.
class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  int n = 2;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> counts;
  std::optional<std::uint64_t> tomography_counts;
  std::optional<double> target;
  NoiseModel noise;
  int alphabet = 2;
  int seeds = 20;
  int iterations = 200;
  int bootstrap = 200;
  std::string protocol_path;
  std::string counts_csv;
  std::string tomography_csv;
  std::string out;
  std::string format = "json";
  std::vector<std::string> command_line;
};

// Default coincidence totals per (x, y) setting.
std::uint64_t DefaultCounts(int n) { return n == 3 ? 24'000'000 : 35'000'000; }

QuantumProtocol RequireStandard(int n) {
  if (n != 2 && n != 3) {
    throw Error(ErrorCode::kUnsupportedN,
                "unsupported n = " + std::to_string(n) + "; supported n: 2, 3");
  }
  return StandardProtocol(n);
}

double Num(double v) { return JsonNumber(v); }

json Envelope(const RunConfig& cfg, json inputs, json results) {
  return {{"tool", "pomlab"},
          {"tool_version", POMLAB_VERSION},
          {"command", cfg.command},
          {"command_line", cfg.command_line},
          {"seed", cfg.seed},
          {"inputs", std::move(inputs)},
          {"results", std::move(results)}};
}

void Flatten(const std::string& prefix, const json& j, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) Flatten(prefix.empty() ? key : prefix + "." + key, value, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) Flatten(prefix + "." + std::to_string(i), j[i], out);
  } else if (j.is_string()) {
    out << prefix << ',' << j.get<std::string>() << '\n';
  } else {
    out << prefix << ',' << j.dump() << '\n';
  }
}

std::string Render(const RunConfig& cfg, const json& report) {
  if (cfg.format == "csv") {
    std::ostringstream ss;
    ss << "key,value\n";
    Flatten("", report.at("results"), ss);
    return ss.str();
  }
  return report.dump(2) + "\n";
}

// temp file + rename so readers never observe a partial report.
void WriteAtomically(const std::string& path, const std::string& text) {
  const std::string temp = path + ".tmp";
  {
    std::ofstream f(temp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
    f << text;
    f.close();
    if (!f) throw Error(ErrorCode::kInvalidArgument, "failed writing " + path);
  }
  std::error_code ec;
  std::filesystem::rename(temp, path, ec);
  if (ec) {
    std::filesystem::remove(temp, ec);
    throw Error(ErrorCode::kInvalidArgument, "cannot move report into place at " + path);
  }
}

void WriteText(const std::string& path, const std::string& text) {
  if (!path.empty()) WriteAtomically(path, text);
}

json LeakageJson(const LeakageReport& r) {
  json per = json::object();
  for (const auto& e : r.per_parity) per[e.mask.ToString()] = Num(e.probability);
  return per;
}

json RunDemo(const RunConfig& cfg) {
  const QuantumProtocol p = RequireStandard(cfg.n);
  const SuccessReport s = SuccessProbability(p);
  const LeakageReport leak = ParityLeakage(p);

  double sum = 0.0;
  json per_pair = json::object();
  for (std::uint32_t x = 0; x < s.per_pair.size(); ++x) {
    json row = json::array();
    for (double v : s.per_pair[x]) {
      sum += v;
      row.push_back(Num(v));
    }
    per_pair[RenderBits(cfg.n, x)] = row;
  }
  const double mean = sum / (static_cast<double>(s.per_pair.size()) * cfg.n);
  if (std::abs(mean - s.overall) > 1e-12) throw InvariantFailure("overall is not the per-pair mean");
  for (const auto& e : leak.per_parity) {
    if (e.probability < 0.5 - 1e-12 || e.probability > 1.0) {
      throw InvariantFailure("parity leakage outside [0.5, 1]");
    }
  }

  json results = {{"success_probability", Num(s.overall)},
                  {"nc_bound", Num(s.nc_bound)},
                  {"violation_margin", Num(s.violation_margin)},
                  {"per_pair", per_pair},
                  {"per_parity_leakage", LeakageJson(leak)},
                  {"max_leakage", Num(leak.max_leakage)},
                  {"protocol", ProtocolToJson(p)}};
  return Envelope(cfg, {{"n", cfg.n}}, std::move(results));
}

json RunClassical(const RunConfig& cfg) {
  const OracleResult oracle = BruteForceOptimum(cfg.n, cfg.alphabet);
  const double closed = NcBound(cfg.n);
  std::string flag = "agree";
  if (oracle.value > closed + 1e-9) {
    throw InvariantFailure("oracle exceeds the noncontextual bound");
  }
  if (oracle.value < closed - 1e-9) flag = "alphabet-limited";
  json results = {{"oracle", Num(oracle.value)},
                  {"closed_form", Num(closed)},
                  {"agree", flag == "agree"},
                  {"flag", flag},
                  {"decoders_examined", oracle.decoders_examined},
                  {"optimal_encoding", EncodingToJson(oracle.encoding)}};
  return Envelope(cfg, {{"n", cfg.n}, {"alphabet", cfg.alphabet}}, std::move(results));
}

json RunSimulate(const RunConfig& cfg) {
  const QuantumProtocol ideal = RequireStandard(cfg.n);
  const std::uint64_t counts = cfg.counts.value_or(DefaultCounts(cfg.n));
  const std::uint64_t tomo_counts = cfg.tomography_counts.value_or(counts);
  if (counts < 1 || tomo_counts < 1) {
    throw Error(ErrorCode::kInvalidArgument, "--counts must be at least 1");
  }
  if (cfg.bootstrap < 2) throw Error(ErrorCode::kInvalidArgument, "--bootstrap must be at least 2");
  NoiseModel noise = cfg.noise;
  if (cfg.target) {
    if (noise.depolarizing_strength != 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "--target and --depolarizing are exclusive");
    }
    noise.depolarizing_strength = CalibrateDepolarizing(ideal, *cfg.target);
  }
  noise.Validate();
  if (noise.two_photon_ratio > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "--two-photon must lie in [0, 1]");
  }

  const QuantumProtocol noisy = ApplyNoise(ideal, noise, cfg.seed);
  const CountRecord record = SampleCounts(noisy, counts, cfg.seed);
  const EstimateWithError success = EstimateSuccess(record);
  const TomographyRecord tomo = SampleTomography(noisy, tomo_counts, cfg.seed);

  json leakage = json::object();
  json two_photon = json::object();
  double max_leak = 0.5;
  double max_weighted = 0.5;
  for (const ParityMask& s : AllParityMasks(cfg.n)) {
    const EstimateWithError est =
        EstimateParityLeakageTomographic(tomo, s, {cfg.bootstrap, cfg.seed});
    leakage[s.ToString()] = EstimateToJson(est, "tomographic-bootstrap", cfg.seed);
    max_leak = std::max(max_leak, est.value);
    const TwoPhotonLeakage tp = TwoPhotonParityLeakage(noisy, s, noise.two_photon_ratio);
    two_photon[s.ToString()] = {{"single_photon", Num(tp.single_photon)},
                                {"two_photon", Num(tp.two_photon)},
                                {"weighted", Num(tp.weighted)}};
    max_weighted = std::max(max_weighted, tp.weighted);
  }

  if (!cfg.counts_csv.empty()) {
    std::ostringstream ss;
    WriteCountCsv(record, ss);
    WriteText(cfg.counts_csv, ss.str());
  }
  if (!cfg.tomography_csv.empty()) {
    std::ostringstream ss;
    WriteTomographyCsv(tomo, ss);
    WriteText(cfg.tomography_csv, ss.str());
  }

  const double bound = NcBound(cfg.n);
  json results = {
      {"ideal_success", Num(SuccessProbability(ideal).overall)},
      {"noisy_success", Num(SuccessProbability(noisy).overall)},
      {"depolarizing_used", Num(noise.depolarizing_strength)},
      {"success_estimate", EstimateToJson(success, "frequency-average", cfg.seed)},
      {"nc_bound", Num(bound)},
      {"violation_sigmas",
       success.std_error > 0.0 ? json(Num((success.value - bound) / success.std_error)) : json(nullptr)},
      {"parity_leakage", leakage},
      {"max_parity_leakage", Num(max_leak)},
      {"two_photon_leakage", two_photon},
      {"max_weighted_leakage", Num(max_weighted)},
      {"noisy_protocol", ProtocolToJson(noisy)}};
  json inputs = {{"n", cfg.n},
                 {"counts", counts},
                 {"tomography_counts", tomo_counts},
                 {"depolarizing", Num(cfg.noise.depolarizing_strength)},
                 {"jitter", Num(noise.axis_jitter)},
                 {"two_photon", Num(noise.two_photon_ratio)},
                 {"bootstrap", cfg.bootstrap},
                 {"target", cfg.target ? json(Num(*cfg.target)) : json(nullptr)}};
  return Envelope(cfg, std::move(inputs), std::move(results));
}

json RunOptimize(const RunConfig& cfg) {
  OptimizerOptions opt;
  opt.restarts = cfg.seeds;
  opt.iterations = cfg.iterations;
  opt.seed = cfg.seed;
  const OptimizerResult r = OptimizeProtocol(cfg.n, opt);
  const double standard = SuccessProbability(StandardProtocol(cfg.n)).overall;
  json results = {{"protocol", ProtocolToJson(r.protocol)},
                  {"success_probability", Num(r.success.overall)},
                  {"max_leakage", Num(r.leakage.max_leakage)},
                  {"oblivious", r.leakage.max_leakage <= 0.5 + kOptimizerLeakageSlack},
                  {"objective", Num(r.objective)},
                  {"best_restart", r.best_restart},
                  {"standard_success", Num(standard)},
                  {"gap_to_standard", Num(standard - r.success.overall)},
                  {"nc_bound", Num(r.success.nc_bound)},
                  {"exploratory", cfg.n == 3}};
  json inputs = {{"n", cfg.n}, {"seeds", cfg.seeds}, {"iterations", cfg.iterations},
                 {"penalty", Num(opt.penalty)}};
  return Envelope(cfg, std::move(inputs), std::move(results));
}

json RunLeakage(const RunConfig& cfg) {
  QuantumProtocol p;
  json inputs = {{"two_photon", Num(cfg.noise.two_photon_ratio)}};
  if (!cfg.protocol_path.empty()) {
    std::ifstream f(cfg.protocol_path);
    if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot read " + cfg.protocol_path);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    p = ProtocolFromJson(j);
    inputs["protocol"] = ProtocolToJson(p);
  } else {
    p = RequireStandard(cfg.n);
    inputs["n"] = cfg.n;
  }
  if (p.n < 2) throw Error(ErrorCode::kInvalidArgument, "parity leakage needs n >= 2");
  json per = json::object();
  double max_single = 0.5;
  double max_weighted = 0.5;
  for (const ParityMask& s : AllParityMasks(p.n)) {
    const TwoPhotonLeakage tp = TwoPhotonParityLeakage(p, s, cfg.noise.two_photon_ratio);
    per[s.ToString()] = {{"single_photon", Num(tp.single_photon)},
                         {"two_photon", Num(tp.two_photon)},
                         {"weighted", Num(tp.weighted)}};
    max_single = std::max(max_single, tp.single_photon);
    max_weighted = std::max(max_weighted, tp.weighted);
  }
  json results = {{"per_parity", per},
                  {"max_single_photon", Num(max_single)},
                  {"max_weighted", Num(max_weighted)}};
  return Envelope(cfg, std::move(inputs), std::move(results));
}

void AddCommon(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
  sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--seed", cfg.seed, "64-bit seed for every stochastic step");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.command_line.assign(args.begin() + (args.empty() ? 0 : 1), args.end());

  CLI::App app{"pomlab: parity-oblivious multiplexing toolkit"};
  app.set_version_flag("--version", std::string(POMLAB_VERSION));
  app.require_subcommand(1);

  CLI::App* demo = app.add_subcommand("demo", "Standard qubit protocol: success, bound, leakage");
  demo->add_option("--n", cfg.n, "Bit count (2 or 3)");
  AddCommon(demo, cfg);

  CLI::App* classical = app.add_subcommand("classical", "Classical optimum by exhaustive LP oracle");
  classical->add_option("--n", cfg.n, "Bit count (<= 3)");
  classical->add_option("--alphabet", cfg.alphabet, "Message alphabet size (<= 8)");
  AddCommon(classical, cfg);

  CLI::App* simulate = app.add_subcommand("simulate", "Noisy finite-count experiment emulation");
  simulate->add_option("--n", cfg.n, "Bit count (2 or 3)");
  simulate->add_option("--counts", cfg.counts, "Coincidence counts per (x, y) setting");
  simulate->add_option("--tomography-counts", cfg.tomography_counts,
                       "Counts per tomography axis (defaults to --counts)");
  simulate->add_option("--depolarizing", cfg.noise.depolarizing_strength, "Depolarizing strength");
  simulate->add_option("--target", cfg.target, "Calibrate depolarizing to this success probability");
  simulate->add_option("--jitter", cfg.noise.axis_jitter, "Measurement axis jitter (radians)");
  simulate->add_option("--two-photon", cfg.noise.two_photon_ratio, "Relative two-photon probability");
  simulate->add_option("--bootstrap", cfg.bootstrap, "Bootstrap replicates for leakage errors");
  simulate->add_option("--counts-csv", cfg.counts_csv, "Also write the count record as CSV");
  simulate->add_option("--tomography-csv", cfg.tomography_csv, "Also write tomography counts as CSV");
  AddCommon(simulate, cfg);

  CLI::App* optimize = app.add_subcommand("optimize", "Search for the largest oblivious success");
  optimize->add_option("--n", cfg.n, "Bit count (2 or 3)");
  optimize->add_option("--seeds", cfg.seeds, "Number of random restarts");
  optimize->add_option("--iterations", cfg.iterations, "Sweeps per search phase");
  AddCommon(optimize, cfg);

  CLI::App* leakage = app.add_subcommand("leakage", "Single- and two-photon parity leakage");
  leakage->add_option("--n", cfg.n, "Bit count of the standard protocol (2 or 3)");
  leakage->add_option("--protocol", cfg.protocol_path, "Protocol JSON file instead of --n");
  leakage->add_option("--two-photon", cfg.noise.two_photon_ratio, "Relative two-photon probability");
  AddCommon(leakage, cfg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << POMLAB_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    json report;
    if (*demo) {
      cfg.command = "demo";
      report = RunDemo(cfg);
    } else if (*classical) {
      cfg.command = "classical";
      report = RunClassical(cfg);
    } else if (*simulate) {
      cfg.command = "simulate";
      report = RunSimulate(cfg);
    } else if (*optimize) {
      cfg.command = "optimize";
      report = RunOptimize(cfg);
    } else {
      cfg.command = "leakage";
      report = RunLeakage(cfg);
    }
    const std::string text = Render(cfg, report);
    if (cfg.out.empty()) {
      out << text;
    } else {
      WriteAtomically(cfg.out, text);
    }
    return kExitOk;
  } catch (const InvariantFailure& e) {
    err << "internal invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace pomlab::cli
