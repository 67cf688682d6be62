// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qaoa/qaoa.hpp"

namespace qaoa {

using Objective = std::function<double(const AngleSchedule&)>;

struct OptimizerConfig {
  /// Grid points per axis; 0 picks the per-level default (64 for p=1, 24 for
  /// p=2, 10 for p=3, none beyond — levels without a grid use seeded random
  /// multistarts plus warm starts from the previous level).
  int grid_resolution = 0;
  double refine_tol = 1e-8;
  double refine_step = 0.25;  // initial pattern-search step for non-grid starts
  int multistarts = 4;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
  std::int64_t max_grid_points = 5'000'000;
  /// Opt-in search-window reduction: gammas scanned over [0, pi) instead of
  /// [0, 2pi). Value-preserving for MaxCut on regular graphs, where
  /// exp(-i pi C) is a global spin flip (or the identity for even degree);
  /// off by default since the full domain is the documented one.
  bool gamma_period_pi = false;
};

/// Per-level default grid resolution.
int default_grid_resolution(int p);

struct OptimizationResult {
  AngleSchedule best_schedule;
  double best_value = 0.0;
  std::int64_t evaluations = 0;
  int grid_resolution = 0;
  bool refined = false;
};

/// Exhaustive product grid over [0,2pi)^p x [0,pi)^p, `resolution` points per
/// axis. Deterministic; ties go to the lexicographically smallest schedule.
/// The objective must be safe to call from multiple threads.
OptimizationResult grid_search(const Objective& objective, int p, int resolution,
                               int threads = 0, std::int64_t max_grid_points = 5'000'000);

/// Compass/pattern search: axis-wise +/- steps, greedy acceptance, step
/// halving, until the step falls below tol. Never returns a value below the
/// start's.
OptimizationResult refine(const Objective& objective, const AngleSchedule& start, double tol,
                          double initial_step = 0.25);

/// Maximize F_p. The decomposed objective is used whenever the worst-case
/// subgraph is smaller than the graph; otherwise the full state vector.
/// Levels 1..p are climbed in a ladder: each level refines the grid best
/// (when a grid is configured), a linear interpolation of the previous
/// level's optimum, its zero-padded embedding, and seeded random starts.
OptimizationResult maximize_fp(const Graph& g, int p, const OptimizerConfig& config = {});
OptimizationResult maximize_fp(const SubgraphDecomposition& d, int p,
                               const OptimizerConfig& config = {});

/// The full ladder, one result per level 1..p. The objective factory maps a
/// level to its objective.
std::vector<OptimizationResult> maximize_fp_ladder(
    const std::function<Objective(int)>& objective_for_level, int p,
    const OptimizerConfig& config = {});

/// Generic box-domain search used by the independent-set variant, where the
/// schedule is not a (gamma, beta) pair vector.
struct Box {
  std::vector<double> lo, hi;
};

struct BoxResult {
  std::vector<double> x;
  double value = 0.0;
  std::int64_t evaluations = 0;
};

using BoxObjective = std::function<double(const std::vector<double>&)>;

BoxResult grid_search_box(const BoxObjective& objective, const Box& box, int resolution,
                          int threads = 0, std::int64_t max_grid_points = 5'000'000);
BoxResult pattern_search_box(const BoxObjective& objective, const std::vector<double>& start,
                             double initial_step, double tol);

}  // namespace qaoa
