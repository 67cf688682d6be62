// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qaoa/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qaoa::ParseError(qaoa::ParseError::Kind::BadHeader, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const qaoa::cli::ExperimentConfig& config, const qaoa::Json& report) {
  std::string payload;
  if (config.format == "csv")
    payload = qaoa::cli::report_csv(config.command, report);
  else
    payload = report.dump(2) + "\n";

  if (config.output_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) throw qaoa::Error("cannot write " + config.output_path);
    out << payload;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QAOA simulator and MaxCut analysis toolkit"};
  app.require_subcommand(1);

  qaoa::cli::ExperimentConfig config;
  std::string graph_path;
  std::uint64_t seed_value = 0;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd, bool needs_graph) {
    cmd->add_option("--p", config.p, "QAOA level p");
    cmd->add_option("--grid", config.grid_resolution,
                    "grid resolution (angle grid; (s,t) surface for worst-case)");
    cmd->add_option("--shots", config.shots, "measurement shots (0 = repetition estimate)");
    cmd->add_option("--seed", seed_value, "RNG seed")->each([&](const std::string&) {
      seed_given = true;
    });
    cmd->add_option("--limit-qubits", config.max_qubits, "full state-vector qubit cap");
    cmd->add_option("--out", config.output_path, "output file (default: stdout)");
    cmd->add_option("--format", config.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    if (needs_graph)
      cmd->add_option("graph", graph_path, "edge-list file")->required()->check(CLI::ExistingFile);
  };

  add_common(app.add_subcommand("maxcut", "optimize, simulate and sample MaxCut"), true);
  auto* ring = app.add_subcommand("ring", "ring-of-disagrees M_p table");
  add_common(ring, false);
  ring->add_flag("--extended-ring", config.extended_ring, "allow p up to 6");
  add_common(app.add_subcommand("worst-case", "3-regular worst-case ratio surface"), false);
  add_common(app.add_subcommand("certify", "per-instance ratio certificate"), true);
  add_common(app.add_subcommand("mis", "independent-set variant"), true);
  add_common(app.add_subcommand("sweep", "F_p over the full angle grid"), true);

  CLI11_PARSE(app, argc, argv);

  config.command = app.get_subcommands().front()->get_name();
  if (seed_given) config.seed = seed_value;

  try {
    qaoa::Json report;
    if (config.command == "maxcut")
      report = qaoa::cli::run_maxcut(config, slurp(graph_path));
    else if (config.command == "ring")
      report = qaoa::cli::run_ring(config);
    else if (config.command == "worst-case")
      report = qaoa::cli::run_worst_case(config);
    else if (config.command == "certify")
      report = qaoa::cli::run_certify(config, slurp(graph_path));
    else if (config.command == "mis")
      report = qaoa::cli::run_mis(config, slurp(graph_path));
    else if (config.command == "sweep")
      report = qaoa::cli::run_sweep(config, slurp(graph_path));
    emit(config, report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qaoa::cli::exit_code_for(e);
  }
  return 0;
}
