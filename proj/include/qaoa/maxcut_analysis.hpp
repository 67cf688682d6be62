// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qaoa/optimizer.hpp"

namespace qaoa {

/// Per-instance approximation-ratio lower bound for 3-regular MaxCut at
/// p = 1: achieved expectation M_1 over the structural cut upper bound
/// 3n/2 - S - T.
struct RatioCertificate {
  int n = 0;
  int S = 0;  // crossed squares
  int T = 0;  // isolated triangles
  double m1 = 0.0;
  double cut_upper_bound = 0.0;
  double ratio_lower_bound = 0.0;
  /// K4 is the one 3-regular graph the S/T analysis does not cover (its
  /// square's leaving edges coincide); the bound is still valid but loose,
  /// and the true ratio is higher.
  bool k4_special_case = false;
};

/// The three p=1 subgraph types of 3-regular MaxCut, and the p=2 tree.
/// Layouts are fixed: the root edge is (0,1).
RootedSubgraph crossed_square_subgraph();    // g4: 4-cycle 0-2-1-3 plus diagonal (0,1)
RootedSubgraph triangle_with_legs_subgraph();  // g5: triangle 0-1-2, legs 0-3 and 1-4
RootedSubgraph double_star_subgraph();       // g6: legs 0-2, 0-3, 1-4, 1-5
RootedSubgraph tree14_subgraph();            // depth-2 3-regular tree, 14 vertices

/// M_p for the ring of disagrees, computed by maximizing the single segment
/// type and scaling by n. Requires n > 2p+2 so the segment is the only type.
double ring_mp(int n, int p, const OptimizerConfig& config = {});

/// F_1/n on a 3-regular graph with crossed-square density s = S/n and
/// isolated-triangle density t = T/n:
///   s f_g4 + (4s + 3t) f_g5 + (3/2 - 5s - 3t) f_g6.
/// Feasibility: s, t >= 0 and 4s + 3t <= 1.
double f1_nst(double s, double t, double gamma, double beta, FgCache* cache = nullptr);

/// max over (gamma, beta) of f1_nst.
double m1_density(double s, double t, const OptimizerConfig& config = {},
                  FgCache* cache = nullptr);

/// m1_density(s,t) / (3/2 - s - t): the approximation-ratio lower bound as a
/// function of the structure densities.
double ratio_bound(double s, double t, const OptimizerConfig& config = {},
                   FgCache* cache = nullptr);

struct WorstCaseSample {
  double s = 0.0, t = 0.0, ratio = 0.0;
};

struct WorstCaseResult {
  double s = 0.0, t = 0.0, ratio = 0.0;  // minimizer
  int grid = 0;
  std::vector<WorstCaseSample> samples;  // feasible grid points, row-major in (s, t)
};

/// Minimize ratio_bound over the feasible (s, t) region by grid plus local
/// refinement. The expected minimizer is the corner (0, 0) at 0.6924.
WorstCaseResult worst_case_ratio(int grid, const OptimizerConfig& config = {});

/// Counts S and T, maximizes F_1, and bounds the cut from above by
/// 3n/2 - S - T. Requires a connected 3-regular graph.
RatioCertificate certify_instance(const Graph& g, const OptimizerConfig& config = {});

}  // namespace qaoa
