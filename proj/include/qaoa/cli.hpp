// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "qaoa/serialization.hpp"

namespace qaoa::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Resolved run configuration. Every report embeds it, so a run can be
/// reproduced from its output alone.
struct ExperimentConfig {
  std::string command;  // maxcut | ring | worst-case | certify | mis | sweep
  int p = 1;
  int grid_resolution = 0;  // angle grid; for worst-case, the (s,t) surface grid
  int shots = 0;            // 0 = size sampling runs by the repetition estimate
  std::optional<std::uint64_t> seed;
  int max_qubits = kDefaultMaxQubits;
  std::size_t basis_limit = mis::kDefaultBasisLimit;
  std::string output_path;  // empty = stdout
  std::string format = "json";
  bool extended_ring = false;
  int ring_n = 100;
  double repetition_constant = 1.0;
  int threads = 0;
};

/// {"version", "config", "results"} envelope shared by every command.
Json envelope(const ExperimentConfig& config, Json results);

Json run_maxcut(const ExperimentConfig& config, const std::string& graph_text);
Json run_ring(const ExperimentConfig& config);
Json run_worst_case(const ExperimentConfig& config);
Json run_certify(const ExperimentConfig& config, const std::string& graph_text);
Json run_mis(const ExperimentConfig& config, const std::string& graph_text);
Json run_sweep(const ExperimentConfig& config, const std::string& graph_text);

/// CSV renderings of the table-bearing reports (ring, worst-case, sweep).
std::string report_csv(const std::string& command, const Json& envelope);

/// Exit codes: 0 success, 2 parse, 3 resource, 4 budget, 5 infeasible,
/// 1 anything else.
int exit_code_for(const std::exception& e);

}  // namespace qaoa::cli
