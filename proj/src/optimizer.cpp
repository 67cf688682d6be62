// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qaoa/rng.hpp"
#include "qaoa/util.hpp"

namespace qaoa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<double> pack(const AngleSchedule& s) {
  std::vector<double> x = s.gammas;
  x.insert(x.end(), s.betas.begin(), s.betas.end());
  return x;
}

AngleSchedule unpack(const std::vector<double>& x) {
  const std::size_t p = x.size() / 2;
  AngleSchedule s;
  s.gammas.assign(x.begin(), x.begin() + p);
  s.betas.assign(x.begin() + p, x.end());
  return s;
}

Box schedule_box(int p) {
  Box box;
  box.lo.assign(2 * p, 0.0);
  box.hi.assign(2 * p, std::numbers::pi);
  for (int i = 0; i < p; ++i) box.hi[i] = kTwoPi;
  return box;
}

double wrap(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0) r += period;
  return r;
}

AngleSchedule normalized(const AngleSchedule& s) {
  AngleSchedule out = s;
  for (double& g : out.gammas) g = wrap(g, kTwoPi);
  for (double& b : out.betas) b = wrap(b, std::numbers::pi);
  return out;
}

/// Stretch a level-(p-1) schedule onto p points by linear interpolation.
AngleSchedule interpolate_up(const AngleSchedule& s, int p_new) {
  auto stretch = [p_new](const std::vector<double>& v) {
    std::vector<double> out(p_new);
    const int p_old = static_cast<int>(v.size());
    if (p_old == 1) {
      std::fill(out.begin(), out.end(), v[0]);
      return out;
    }
    for (int i = 0; i < p_new; ++i) {
      const double x = static_cast<double>(i) * (p_old - 1) / (p_new - 1);
      const int i0 = std::min(static_cast<int>(x), p_old - 2);
      const double frac = x - i0;
      out[i] = v[i0] * (1.0 - frac) + v[i0 + 1] * frac;
    }
    return out;
  };
  AngleSchedule out;
  out.gammas = stretch(s.gammas);
  out.betas = stretch(s.betas);
  return out;
}

AngleSchedule embed_zero(const AngleSchedule& s) {
  AngleSchedule out = s;
  out.gammas.push_back(0.0);
  out.betas.push_back(0.0);
  return out;
}

}  // namespace

int default_grid_resolution(int p) {
  switch (p) {
    case 1: return 64;
    case 2: return 24;
    case 3: return 10;
    default: return 0;
  }
}

BoxResult grid_search_box(const BoxObjective& objective, const Box& box, int resolution,
                          int threads, std::int64_t max_grid_points) {
  const int dims = static_cast<int>(box.lo.size());
  if (resolution < 2) throw InfeasibleError("grid resolution must be >= 2");
  if (dims < 1) throw InfeasibleError("grid needs at least one dimension");

  std::int64_t total = 1;
  for (int d = 0; d < dims; ++d) {
    total *= resolution;
    if (total > max_grid_points)
      throw BudgetError("grid of " + std::to_string(resolution) + "^" + std::to_string(dims) +
                        " points exceeds the budget of " + std::to_string(max_grid_points));
  }

  std::vector<double> steps(dims);
  for (int d = 0; d < dims; ++d) steps[d] = (box.hi[d] - box.lo[d]) / resolution;

  auto point_at = [&](std::int64_t index) {
    std::vector<double> x(dims);
    for (int d = dims - 1; d >= 0; --d) {
      x[d] = box.lo[d] + steps[d] * static_cast<double>(index % resolution);
      index /= resolution;
    }
    return x;
  };

  threads = resolve_threads(threads);
  struct ChunkBest {
    double value = -std::numeric_limits<double>::infinity();
    std::int64_t index = -1;
  };
  std::vector<ChunkBest> bests(static_cast<std::size_t>(std::min<std::int64_t>(threads, total)));

  parallel_chunks(total, threads, [&](std::int64_t begin, std::int64_t end, int worker) {
    ChunkBest local;
    for (std::int64_t i = begin; i < end; ++i) {
      const double v = objective(point_at(i));
      if (v > local.value || (v == local.value && i < local.index)) {
        local.value = v;
        local.index = i;
      }
    }
    bests[worker] = local;
  });

  ChunkBest best;
  for (const ChunkBest& b : bests) {
    if (b.index < 0) continue;
    if (best.index < 0 || b.value > best.value ||
        (b.value == best.value && b.index < best.index))
      best = b;
  }
  if (best.index < 0) throw InfeasibleError("objective undefined on the whole grid");

  BoxResult out;
  out.x = point_at(best.index);
  out.value = best.value;
  out.evaluations = total;
  return out;
}

BoxResult pattern_search_box(const BoxObjective& objective, const std::vector<double>& start,
                             double initial_step, double tol) {
  if (tol <= 0) throw InfeasibleError("pattern-search tolerance must be positive");
  BoxResult out;
  out.x = start;
  out.value = objective(out.x);
  out.evaluations = 1;

  const int dims = static_cast<int>(start.size());
  double step = initial_step;
  while (step >= tol) {
    bool improved = false;
    for (int d = 0; d < dims; ++d) {
      for (double sgn : {1.0, -1.0}) {
        std::vector<double> y = out.x;
        y[d] += sgn * step;
        const double v = objective(y);
        ++out.evaluations;
        if (v > out.value) {
          out.x = std::move(y);
          out.value = v;
          improved = true;
          // Ride the improving direction before moving on.
          for (;;) {
            std::vector<double> z = out.x;
            z[d] += sgn * step;
            const double vz = objective(z);
            ++out.evaluations;
            if (vz <= out.value) break;
            out.x = std::move(z);
            out.value = vz;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return out;
}

OptimizationResult grid_search(const Objective& objective, int p, int resolution, int threads,
                               std::int64_t max_grid_points) {
  if (p < 1) throw InfeasibleError("grid search requires p >= 1");
  BoxResult r = grid_search_box([&](const std::vector<double>& x) { return objective(unpack(x)); },
                                schedule_box(p), resolution, threads, max_grid_points);
  OptimizationResult out;
  out.best_schedule = unpack(r.x);
  out.best_value = r.value;
  out.evaluations = r.evaluations;
  out.grid_resolution = resolution;
  out.refined = false;
  return out;
}

OptimizationResult refine(const Objective& objective, const AngleSchedule& start, double tol,
                          double initial_step) {
  start.validate();
  BoxResult r = pattern_search_box(
      [&](const std::vector<double>& x) { return objective(unpack(x)); }, pack(start),
      initial_step, tol);
  OptimizationResult out;
  out.best_schedule = unpack(r.x);
  out.best_value = r.value;
  out.evaluations = r.evaluations;
  out.refined = true;
  return out;
}

std::vector<OptimizationResult> maximize_fp_ladder(
    const std::function<Objective(int)>& objective_for_level, int p,
    const OptimizerConfig& config) {
  if (p < 1) throw InfeasibleError("maximize_fp requires p >= 1");

  Rng multistart_rng = Rng::substream(config.seed, "multistart");
  std::vector<OptimizationResult> ladder;
  ladder.reserve(p);
  AngleSchedule prev;  // un-normalized best of the previous level
  const double gamma_hi = config.gamma_period_pi ? std::numbers::pi : kTwoPi;

  for (int level = 1; level <= p; ++level) {
    const Objective objective = objective_for_level(level);
    const int res =
        config.grid_resolution > 0 ? config.grid_resolution : default_grid_resolution(level);

    std::int64_t evals = 0;
    struct Start {
      AngleSchedule schedule;
      double step;
    };
    std::vector<Start> starts;

    if (res > 0) {
      Box box = schedule_box(level);
      for (int i = 0; i < level; ++i) box.hi[i] = gamma_hi;
      BoxResult g = grid_search_box(
          [&](const std::vector<double>& x) { return objective(unpack(x)); }, box, res,
          config.threads, config.max_grid_points);
      evals += g.evaluations;
      starts.push_back({unpack(g.x), gamma_hi / res});
    } else {
      const int count = std::max(1, config.multistarts);
      for (int i = 0; i < count; ++i) {
        AngleSchedule s;
        for (int j = 0; j < level; ++j) s.gammas.push_back(multistart_rng.uniform(0.0, gamma_hi));
        for (int j = 0; j < level; ++j)
          s.betas.push_back(multistart_rng.uniform(0.0, std::numbers::pi));
        starts.push_back({std::move(s), config.refine_step});
      }
    }
    if (level > 1) {
      starts.push_back({interpolate_up(prev, level), config.refine_step});
      starts.push_back({embed_zero(prev), config.refine_step});
    }

    std::vector<OptimizationResult> refined(starts.size());
    std::vector<std::int64_t> start_evals(starts.size(), 0);
    parallel_chunks(static_cast<std::int64_t>(starts.size()), config.threads,
                    [&](std::int64_t begin, std::int64_t end, int) {
                      for (std::int64_t i = begin; i < end; ++i) {
                        refined[i] =
                            refine(objective, starts[i].schedule, config.refine_tol, starts[i].step);
                        start_evals[i] = refined[i].evaluations;
                      }
                    });

    int best = 0;
    for (std::size_t i = 0; i < refined.size(); ++i) {
      evals += start_evals[i];
      if (refined[i].best_value > refined[best].best_value ||
          (refined[i].best_value == refined[best].best_value &&
           pack(refined[i].best_schedule) < pack(refined[best].best_schedule)))
        best = static_cast<int>(i);
    }

    prev = refined[best].best_schedule;

    OptimizationResult level_result;
    level_result.best_schedule = normalized(prev);
    level_result.best_value = refined[best].best_value;
    level_result.evaluations = evals;
    level_result.grid_resolution = res;
    level_result.refined = true;
    ladder.push_back(std::move(level_result));
  }
  return ladder;
}

OptimizationResult maximize_fp(const SubgraphDecomposition& d, int p,
                               const OptimizerConfig& config) {
  auto cache = std::make_shared<FgCache>();
  auto factory = [&d, cache](int) {
    return Objective([&d, cache](const AngleSchedule& s) {
      return fp_decomposed(d, s, cache.get()).value;
    });
  };
  return maximize_fp_ladder(factory, p, config).back();
}

OptimizationResult maximize_fp(const Graph& g, int p, const OptimizerConfig& config) {
  auto cache = std::make_shared<FgCache>();
  // One decomposition per ladder level, built lazily.
  auto decomps = std::make_shared<std::map<int, SubgraphDecomposition>>();
  const int v_eff = std::max(2, g.max_degree());
  auto factory = [&g, cache, decomps, v_eff](int level) {
    if (q_tree(v_eff, level) < g.n_vertices()) {
      if (!decomps->count(level)) decomps->emplace(level, decompose(g, level));
      const SubgraphDecomposition& d = decomps->at(level);
      return Objective([&d, cache](const AngleSchedule& s) {
        return fp_decomposed(d, s, cache.get()).value;
      });
    }
    return Objective([&g](const AngleSchedule& s) { return fp_full(g, s).value; });
  };
  return maximize_fp_ladder(factory, p, config).back();
}

}  // namespace qaoa
