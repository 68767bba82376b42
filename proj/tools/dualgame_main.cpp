// Copyright 2026 The dualgame Authors
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

// Command-line front end.  Subcommands:
//   run-game        play a scenario exactly and/or by Monte Carlo
//   check-duality   verify the information trade-off on a scenario
//   scan-partitions scan which equal-size partition pairs fit the budget
//   fuzz            randomized sweep of the trade-off over generic scenarios
// Exit codes: 0 success, 1 property violation, 2 invalid input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualgame/dualgame.hpp"

namespace {

using namespace dualgame;

struct LoadedScenario {
  GameScenario scenario;
  std::string origin;
};

LoadedScenario resolve_scenario(const std::string& file, const std::string& preset) {
  if (file.empty() == preset.empty()) {
    throw ArgError("give exactly one of --scenario or --preset");
  }
  if (!preset.empty()) {
    std::optional<GameScenario> s = preset_scenario(preset);
    if (!s) {
      std::string known;
      for (const std::string& n : preset_names()) {
        if (!known.empty()) known += ", ";
        known += n;
      }
      throw ArgError("unknown preset '" + preset + "' (known presets: " + known + ")");
    }
    return {std::move(*s), "preset:" + preset};
  }
  return {load_scenario(file), "file:" + file};
}

Json scenario_inputs(const LoadedScenario& loaded) {
  Json inputs;
  inputs["scenario"] = loaded.scenario.name;
  inputs["source"] = loaded.origin;
  inputs["digest"] = scenario_digest(loaded.scenario);
  return inputs;
}

Json report_skeleton(const std::string& command) {
  Json doc;
  doc["tool"] = kToolName;
  doc["version"] = kToolVersion;
  doc["command"] = command;
  return doc;
}

void write_report(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw ArgError("cannot write report to " + path);
  out << doc.dump(2) << "\n";
}

void print_scenario_banner(const LoadedScenario& loaded) {
  const GameScenario& s = loaded.scenario;
  std::cout << "scenario " << s.name << " (" << loaded.origin << ")\n"
            << "  paths " << s.n_paths << ", detector dimension "
            << s.detectors.detector_dim() << ", answer sizes ways="
            << s.ways_answer_size << " phases=" << s.phases_answer_size << "\n"
            << "  digest " << scenario_digest(s) << "\n";
}

int cmd_run_game(const std::string& file, const std::string& preset,
                 std::uint64_t trials, std::uint64_t seed, bool exact,
                 const std::string& json_path) {
  LoadedScenario loaded = resolve_scenario(file, preset);
  const GameScenario& s = loaded.scenario;
  bool do_exact = exact || trials == 0;

  print_scenario_banner(loaded);
  Json doc = report_skeleton("run-game");
  doc["inputs"] = scenario_inputs(loaded);
  doc["inputs"]["exact"] = do_exact;
  doc["inputs"]["trials"] = trials;
  if (trials > 0) doc["inputs"]["seed"] = seed;
  Json results;

  if (do_exact) {
    WinProbabilities p = exact_win_probability(s);
    double cap = original_game_bound(s.n_paths);
    std::cout << "exact win probability\n"
              << "  ways    " << format_g12(p.ways) << "\n"
              << "  phases  " << format_g12(p.phases) << "\n"
              << "  overall " << format_g12(p.overall) << "\n"
              << "single-guess cap 1/2 + 1/(2*sqrt(" << s.n_paths << ")) = "
              << format_g12(cap) << "\n";
    Json e;
    e["ways"] = round_g12(p.ways);
    e["phases"] = round_g12(p.phases);
    e["overall"] = round_g12(p.overall);
    e["single_guess_cap"] = round_g12(cap);
    results["exact"] = std::move(e);
  }
  if (trials > 0) {
    MonteCarloResult mc = monte_carlo_win_rate(s, trials, seed);
    std::cout << "monte carlo (" << trials << " rounds, seed " << seed << ")\n"
              << "  wins " << mc.wins << "/" << mc.trials << "\n"
              << "  rate " << format_g12(mc.rate) << " +- " << format_g12(mc.std_error)
              << "\n";
    Json m;
    m["trials"] = mc.trials;
    m["seed"] = seed;
    m["wins"] = mc.wins;
    m["rate"] = round_g12(mc.rate);
    m["std_error"] = round_g12(mc.std_error);
    results["monte_carlo"] = std::move(m);
  }
  doc["results"] = std::move(results);
  doc["verdicts"] = Json::object();
  if (!json_path.empty()) write_report(json_path, doc);
  return 0;
}

int cmd_check_duality(const std::string& file, const std::string& preset,
                      const std::string& json_path) {
  LoadedScenario loaded = resolve_scenario(file, preset);
  const GameScenario& s = loaded.scenario;
  ScenarioJoints joints = scenario_joints(s);
  DualityReport report = duality_check(joints.phase_joint, joints.path_joint, s.weights);

  print_scenario_banner(loaded);
  std::cout << "information trade-off\n"
            << "  phase information I1   " << format_g12(report.phase_mi) << " bits\n"
            << "  path information  I2   " << format_g12(report.path_mi) << " bits\n"
            << "  weight entropy    H    " << format_g12(report.weight_entropy)
            << " bits\n"
            << "  slack H - I1 - I2      " << format_g12(report.slack) << " bits\n"
            << "verdict: " << (report.passes ? "pass" : "VIOLATION")
            << (report.saturated ? " (saturated)" : "") << "\n";

  Json doc = report_skeleton("check-duality");
  doc["inputs"] = scenario_inputs(loaded);
  Json results;
  results["phase_mi"] = round_g12(report.phase_mi);
  results["path_mi"] = round_g12(report.path_mi);
  results["weight_entropy"] = round_g12(report.weight_entropy);
  results["slack"] = round_g12(report.slack);
  doc["results"] = std::move(results);
  Json verdicts;
  verdicts["passes"] = report.passes;
  verdicts["saturated"] = report.saturated;
  doc["verdicts"] = std::move(verdicts);
  if (!json_path.empty()) write_report(json_path, doc);
  return report.passes ? 0 : 1;
}

int cmd_scan_partitions(Index n_max, const std::string& json_path) {
  if (n_max < 1 || n_max > 64) {
    throw ArgError("--n-max must be between 1 and 64");
  }
  Json doc = report_skeleton("scan-partitions");
  doc["inputs"]["n_max"] = n_max;
  Json rows = Json::array();
  for (Index n = 1; n <= n_max; ++n) {
    std::vector<Index> divisors;
    for (Index d = 1; d <= n; ++d) {
      if (n % d == 0) divisors.push_back(d);
    }
    std::cout << "N=" << n << " budget " << format_g12(std::log2(double(n)))
              << " bits; symmetric n:";
    Json row;
    row["N"] = n;
    Json pairs = Json::array();
    for (Index nw : divisors) {
      for (Index np : divisors) {
        PartitionVerdict v = partition_feasible(n, nw, np);
        Json p;
        p["n_ways"] = nw;
        p["n_phases"] = np;
        p["feasible"] = v.feasible;
        p["equality"] = v.with_equality;
        pairs.push_back(std::move(p));
        if (nw == np) {
          std::cout << " " << nw
                    << (v.feasible ? (v.with_equality ? "(=)" : "") : "(no)");
        }
      }
    }
    std::cout << "\n";
    row["pairs"] = std::move(pairs);
    rows.push_back(std::move(row));
  }
  doc["results"]["rows"] = std::move(rows);
  doc["verdicts"] = Json::object();
  if (!json_path.empty()) write_report(json_path, doc);
  return 0;
}

int cmd_fuzz(std::uint64_t count, std::uint64_t seed, const std::string& dims,
             const std::string& json_path) {
  if (count == 0) throw ArgError("--count must be at least 1");
  Index lo = 0, hi = 0;
  {
    char extra = 0;
    long long llo = 0, lhi = 0;
    if (std::sscanf(dims.c_str(), "%lld-%lld%c", &llo, &lhi, &extra) != 2) {
      throw ArgError("--dims must look like LO-HI, e.g. 2-4");
    }
    lo = static_cast<Index>(llo);
    hi = static_cast<Index>(lhi);
  }
  if (lo < 2 || hi < lo || hi > 8) {
    throw ArgError("--dims range must satisfy 2 <= LO <= HI <= 8");
  }
  RandomScenarioOptions options;
  options.detector_dim_min = lo;
  options.detector_dim_max = hi;
  FuzzResult result = run_duality_fuzz(count, seed, options);

  std::cout << "fuzz: " << result.count << " random scenarios, seed " << seed
            << ", detector dims " << lo << "-" << hi << "\n"
            << "  trade-off violations " << result.duality_violations << "\n"
            << "  information-ceiling violations " << result.holevo_violations << "\n"
            << "  smallest slack " << format_g12(result.worst_slack.slack)
            << " bits (case " << result.worst_slack.index << ")\n"
            << "  largest ceiling excess "
            << format_g12(std::max(result.worst_holevo.phase_holevo_excess,
                                   result.worst_holevo.path_holevo_excess))
            << " bits (case " << result.worst_holevo.index << ")\n";
  if (!result.violation_indices.empty()) {
    std::cout << "  violating cases (replay with --seed " << seed << "):";
    for (std::size_t i = 0; i < result.violation_indices.size() && i < 20; ++i) {
      std::cout << " " << result.violation_indices[i];
    }
    std::cout << "\n";
  }

  Json doc = report_skeleton("fuzz");
  doc["inputs"]["count"] = count;
  doc["inputs"]["seed"] = seed;
  doc["inputs"]["dims"] = dims;
  Json results;
  results["duality_violations"] = result.duality_violations;
  results["holevo_violations"] = result.holevo_violations;
  results["min_slack"] = round_g12(result.worst_slack.slack);
  results["min_slack_case"] = result.worst_slack.index;
  results["max_holevo_excess"] =
      round_g12(std::max(result.worst_holevo.phase_holevo_excess,
                         result.worst_holevo.path_holevo_excess));
  results["max_holevo_excess_case"] = result.worst_holevo.index;
  Json violations = Json::array();
  for (std::size_t i = 0; i < result.violation_indices.size() && i < 20; ++i) {
    violations.push_back(result.violation_indices[i]);
  }
  results["violation_cases"] = std::move(violations);
  doc["results"] = std::move(results);
  Json verdicts;
  verdicts["passes"] =
      result.duality_violations == 0 && result.holevo_violations == 0;
  doc["verdicts"] = std::move(verdicts);
  if (!json_path.empty()) write_report(json_path, doc);
  return (result.duality_violations == 0 && result.holevo_violations == 0) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"N-path duality games: simulate rounds and verify the "
               "information trade-off"};
  app.require_subcommand(1);

  std::string file, preset, json_path;
  std::uint64_t trials = 0, seed = 0;
  bool exact = false;

  CLI::App* run = app.add_subcommand(
      "run-game", "Play a scenario: exact win probabilities and/or Monte Carlo");
  CLI::Option* run_file =
      run->add_option("--scenario", file, "Scenario JSON file")
          ->check(CLI::ExistingFile);
  run->add_option("--preset", preset, "Built-in scenario (trine3, sixpair4, twopair4)")
      ->excludes(run_file);
  run->add_option("--trials", trials, "Monte Carlo rounds (0 = exact only)");
  run->add_option("--seed", seed, "Monte Carlo seed");
  run->add_flag("--exact", exact, "Compute exact probabilities (default when no trials)");
  run->add_option("--json", json_path, "Write a JSON report to this path");

  std::string cd_file, cd_preset, cd_json;
  CLI::App* check = app.add_subcommand(
      "check-duality", "Verify the information trade-off on a scenario");
  CLI::Option* cd_file_opt =
      check->add_option("--scenario", cd_file, "Scenario JSON file")
          ->check(CLI::ExistingFile);
  check->add_option("--preset", cd_preset, "Built-in scenario (trine3, sixpair4, twopair4)")
      ->excludes(cd_file_opt);
  check->add_option("--json", cd_json, "Write a JSON report to this path");

  Index n_max = 12;
  std::string sp_json;
  CLI::App* scan = app.add_subcommand(
      "scan-partitions", "Scan equal-partition feasibility up to a path count");
  scan->add_option("--n-max", n_max, "Largest path count to scan (<= 64)");
  scan->add_option("--json", sp_json, "Write a JSON report to this path");

  std::uint64_t fz_count = 1000, fz_seed = 1;
  std::string fz_dims = "2-4", fz_json;
  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "Randomized sweep: trade-off and information ceilings on random scenarios");
  fuzz->add_option("--count", fz_count, "Number of random scenarios");
  fuzz->add_option("--seed", fz_seed, "Root seed");
  fuzz->add_option("--dims", fz_dims, "Detector dimension range LO-HI (within 2-8)");
  fuzz->add_option("--json", fz_json, "Write a JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return cmd_run_game(file, preset, trials, seed, exact, json_path);
    if (check->parsed()) return cmd_check_duality(cd_file, cd_preset, cd_json);
    if (scan->parsed()) return cmd_scan_partitions(n_max, sp_json);
    if (fuzz->parsed()) return cmd_fuzz(fz_count, fz_seed, fz_dims, fz_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
