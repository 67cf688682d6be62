// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/maxcut_analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace qaoa {

namespace {

constexpr double kFeasEps = 1e-12;

RootedSubgraph make_fixture(int n, std::vector<Edge> edges, int p) {
  RootedSubgraph s;
  s.graph = Graph(n, std::move(edges));
  s.root_edge = {0, 1};
  s.p = p;
  return s;
}

bool feasible(double s, double t) {
  return s >= -kFeasEps && t >= -kFeasEps && 4 * s + 3 * t <= 1.0 + kFeasEps;
}

void require_feasible(double s, double t) {
  if (!feasible(s, t))
    throw InfeasibleError("densities (s,t) must satisfy s,t >= 0 and 4s + 3t <= 1");
}

struct Fixtures {
  RootedSubgraph g4 = crossed_square_subgraph();
  RootedSubgraph g5 = triangle_with_legs_subgraph();
  RootedSubgraph g6 = double_star_subgraph();
  CanonicalKey k4 = canonical_key(g4);
  CanonicalKey k5 = canonical_key(g5);
  CanonicalKey k6 = canonical_key(g6);
};

const Fixtures& fixtures() {
  static const Fixtures f;
  return f;
}

double cached_f(const RootedSubgraph& s, const CanonicalKey& key, const AngleSchedule& sched,
                FgCache* cache) {
  if (cache) {
    if (auto hit = cache->lookup(key, sched)) return *hit;
    double f = f_subgraph(s, sched);
    cache->insert(key, sched, f);
    return f;
  }
  return f_subgraph(s, sched);
}

}  // namespace

RootedSubgraph crossed_square_subgraph() {
  return make_fixture(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {0, 3}}, 1);
}

RootedSubgraph triangle_with_legs_subgraph() {
  return make_fixture(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}}, 1);
}

RootedSubgraph double_star_subgraph() {
  return make_fixture(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}, 1);
}

RootedSubgraph tree14_subgraph() {
  return make_fixture(14,
                      {{0, 1},
                       {0, 2},
                       {0, 3},
                       {1, 4},
                       {1, 5},
                       {2, 6},
                       {2, 7},
                       {3, 8},
                       {3, 9},
                       {4, 10},
                       {4, 11},
                       {5, 12},
                       {5, 13}},
                      2);
}

double ring_mp(int n, int p, const OptimizerConfig& config) {
  if (p < 1) throw InfeasibleError("ring_mp requires p >= 1");
  if (n <= 2 * p + 2)
    throw InfeasibleError("ring_mp requires n > 2p+2 so the segment is the only subgraph type");
  const SubgraphDecomposition d = decompose(ring_graph(n), p);
  return maximize_fp(d, p, config).best_value;
}

double f1_nst(double s, double t, double gamma, double beta, FgCache* cache) {
  require_feasible(s, t);
  const Fixtures& fx = fixtures();
  AngleSchedule sched;
  sched.gammas = {gamma};
  sched.betas = {beta};
  const double f4 = cached_f(fx.g4, fx.k4, sched, cache);
  const double f5 = cached_f(fx.g5, fx.k5, sched, cache);
  const double f6 = cached_f(fx.g6, fx.k6, sched, cache);
  return s * f4 + (4 * s + 3 * t) * f5 + (1.5 - 5 * s - 3 * t) * f6;
}

double m1_density(double s, double t, const OptimizerConfig& config, FgCache* cache) {
  require_feasible(s, t);
  const Objective objective = [s, t, cache](const AngleSchedule& sched) {
    return f1_nst(s, t, sched.gammas[0], sched.betas[0], cache);
  };
  const int res = config.grid_resolution > 0 ? config.grid_resolution : default_grid_resolution(1);
  OptimizationResult g = grid_search(objective, 1, res, config.threads, config.max_grid_points);
  OptimizationResult r =
      refine(objective, g.best_schedule, config.refine_tol, 2.0 * std::numbers::pi / res);
  return r.best_value;
}

double ratio_bound(double s, double t, const OptimizerConfig& config, FgCache* cache) {
  require_feasible(s, t);
  return m1_density(s, t, config, cache) / (1.5 - s - t);
}

WorstCaseResult worst_case_ratio(int grid, const OptimizerConfig& config) {
  if (grid < 2) throw InfeasibleError("worst_case_ratio needs at least 2 grid points per axis");

  FgCache cache;
  WorstCaseResult out;
  out.grid = grid;
  const double s_max = 0.25;      // 4s <= 1
  const double t_max = 1.0 / 3.0; // 3t <= 1

  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double s = s_max * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double t = t_max * j / (grid - 1);
      if (!feasible(s, t)) continue;
      const double r = ratio_bound(s, t, config, &cache);
      out.samples.push_back({s, t, r});
      if (r < best) {
        best = r;
        out.s = s;
        out.t = t;
      }
    }
  }

  // Local descent on (s, t) from the best grid point; infeasible moves are
  // rejected.
  const BoxObjective negated = [&](const std::vector<double>& x) {
    if (!feasible(x[0], x[1])) return -std::numeric_limits<double>::infinity();
    return -ratio_bound(x[0], x[1], config, &cache);
  };
  BoxResult refined = pattern_search_box(negated, {out.s, out.t},
                                         std::max(s_max, t_max) / (grid - 1), 1e-6);
  out.s = refined.x[0];
  out.t = refined.x[1];
  out.ratio = -refined.value;
  return out;
}

RatioCertificate certify_instance(const Graph& g, const OptimizerConfig& config) {
  if (!g.is_regular(3)) throw InfeasibleError("certify_instance requires a 3-regular graph");
  if (!g.is_connected()) throw InfeasibleError("certify_instance requires a connected graph");

  RatioCertificate cert;
  cert.n = g.n_vertices();
  cert.k4_special_case = (cert.n == 4);
  cert.S = count_crossed_squares(g);
  cert.T = count_isolated_triangles(g);
  cert.m1 = maximize_fp(decompose(g, 1), 1, config).best_value;
  cert.cut_upper_bound = 1.5 * cert.n - cert.S - cert.T;
  cert.ratio_lower_bound = cert.m1 / cert.cut_upper_bound;
  return cert;
}

}  // namespace qaoa
