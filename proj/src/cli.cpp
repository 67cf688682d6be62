// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace qaoa::cli {

namespace {

OptimizerConfig optimizer_config(const ExperimentConfig& config) {
  OptimizerConfig oc;
  oc.grid_resolution = config.command == "worst-case" ? 0 : config.grid_resolution;
  oc.seed = config.seed.value_or(1);
  oc.threads = config.threads;
  return oc;
}

void require_seed(const ExperimentConfig& config) {
  if (!config.seed)
    throw InfeasibleError("command \"" + config.command + "\" samples and requires a seed");
}

Json config_json(const ExperimentConfig& config) {
  Json j{{"command", config.command},
         {"p", config.p},
         {"grid_resolution", config.grid_resolution},
         {"shots", config.shots},
         {"max_qubits", config.max_qubits},
         {"basis_limit", config.basis_limit},
         {"format", config.format},
         {"extended_ring", config.extended_ring},
         {"ring_n", config.ring_n},
         {"repetition_constant", config.repetition_constant}};
  if (config.seed)
    j["seed"] = *config.seed;
  else
    j["seed"] = nullptr;
  return j;
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Json envelope(const ExperimentConfig& config, Json results) {
  return Json{{"version", kVersion}, {"config", config_json(config)}, {"results", std::move(results)}};
}

Json run_maxcut(const ExperimentConfig& config, const std::string& graph_text) {
  require_seed(config);
  const Graph g = parse_graph(graph_text);
  const int n = g.n_vertices();
  const std::int64_t m = g.n_edges();
  if (m == 0) throw InfeasibleError("maxcut needs at least one edge");

  const OptimizerConfig oc = optimizer_config(config);
  const int v_eff = std::max(2, g.max_degree());
  const bool decomposed = q_tree(v_eff, config.p) < n;

  const OptimizationResult opt = maximize_fp(g, config.p, oc);
  Json decomposition_json;
  FpEvaluation fp;
  if (decomposed) {
    const SubgraphDecomposition d = decompose(g, config.p);
    decomposition_json = to_json(d);
    fp = fp_decomposed(d, opt.best_schedule);
  } else {
    fp = fp_full(g, opt.best_schedule, config.max_qubits);
  }

  const QuantumState state = prepare_qaoa_state(g, opt.best_schedule, config.max_qubits);
  const CostDiagonal c = cost_diagonal(g);
  const double var = variance(state, c);
  const ConcentrationBound bound = concentration_bound(v_eff, config.p, m);
  const std::int64_t repetitions = repetition_estimate(fp.value, m, config.repetition_constant);

  const int shots = config.shots > 0 ? config.shots : static_cast<int>(repetitions);
  Rng shot_rng = Rng::substream(*config.seed, "shots");
  const std::vector<std::uint64_t> draws = sample(state, shot_rng, shots);
  std::int64_t best_cut = 0;
  double mean_cut = 0.0;
  std::uint64_t best_string = draws.empty() ? 0 : draws[0];
  for (std::uint64_t z : draws) {
    const std::int64_t cut = c.values[z];
    mean_cut += static_cast<double>(cut);
    if (cut > best_cut) {
      best_cut = cut;
      best_string = z;
    }
  }
  mean_cut /= static_cast<double>(shots);

  Json results{{"n", n},
               {"m", m},
               {"path", decomposed ? "decomposed" : "full"},
               {"optimum", to_json(opt, config.p)},
               {"fp", to_json(fp)},
               {"variance", var},
               {"concentration_bound", Json{{"variance_bound", bound.variance_bound},
                                            {"v", bound.v},
                                            {"p", bound.p},
                                            {"m", bound.m}}},
               {"repetition_estimate", repetitions},
               {"sampling", Json{{"shots", shots},
                                 {"best_cut", best_cut},
                                 {"best_string", bitstring(best_string, n)},
                                 {"mean_cut", mean_cut}}}};
  if (decomposed) results["decomposition"] = std::move(decomposition_json);
  if (g.is_regular(3) && g.is_connected())
    results["certificate"] = to_json(certify_instance(g, oc));
  return envelope(config, std::move(results));
}

Json run_ring(const ExperimentConfig& config) {
  const int cap = config.extended_ring ? 6 : 3;
  if (config.p > cap)
    throw BudgetError("ring analysis capped at p = " + std::to_string(cap) +
                      (config.extended_ring ? "" : " (pass --extended-ring for p up to 6)"));
  const int n = config.ring_n;
  if (n <= 2 * config.p + 2)
    throw InfeasibleError("ring analysis needs n > 2p+2");

  const OptimizerConfig oc = optimizer_config(config);
  const Graph ring = ring_graph(n);
  auto decomps = std::make_shared<std::map<int, SubgraphDecomposition>>();
  auto cache = std::make_shared<FgCache>();
  auto factory = [&ring, decomps, cache](int level) {
    if (!decomps->count(level)) decomps->emplace(level, decompose(ring, level));
    const SubgraphDecomposition& d = decomps->at(level);
    return Objective(
        [&d, cache](const AngleSchedule& s) { return fp_decomposed(d, s, cache.get()).value; });
  };
  const std::vector<OptimizationResult> ladder = maximize_fp_ladder(factory, config.p, oc);

  Json rows = Json::array();
  for (int level = 1; level <= config.p; ++level) {
    const OptimizationResult& r = ladder[level - 1];
    const double mp_over_n = r.best_value / n;
    const double closed_form = (2.0 * level + 1.0) / (2.0 * level + 2.0);
    rows.push_back({{"p", level},
                    {"mp", r.best_value},
                    {"mp_over_n", mp_over_n},
                    {"closed_form", closed_form},
                    {"deviation", std::abs(mp_over_n - closed_form)},
                    {"optimum", to_json(r, level)}});
  }
  return envelope(config, Json{{"n", n}, {"rows", std::move(rows)}});
}

Json run_worst_case(const ExperimentConfig& config) {
  const int grid = config.grid_resolution > 0 ? config.grid_resolution : 20;
  const WorstCaseResult wc = worst_case_ratio(grid, optimizer_config(config));
  Json samples = Json::array();
  for (const WorstCaseSample& s : wc.samples)
    samples.push_back({{"s", s.s}, {"t", s.t}, {"ratio", s.ratio}});
  return envelope(config, Json{{"grid", wc.grid},
                               {"s", wc.s},
                               {"t", wc.t},
                               {"ratio", wc.ratio},
                               {"samples", std::move(samples)}});
}

Json run_certify(const ExperimentConfig& config, const std::string& graph_text) {
  const Graph g = parse_graph(graph_text);
  const RatioCertificate cert = certify_instance(g, optimizer_config(config));
  return envelope(config, to_json(cert));
}

Json run_mis(const ExperimentConfig& config, const std::string& graph_text) {
  require_seed(config);
  const Graph g = parse_graph(graph_text);
  const mis::IndependentSetBasis basis = mis::enumerate_basis(g, config.basis_limit);
  const mis::MixerMatrix mixer = mis::build_mixer_matrix(basis);

  const mis::VariantOptimum opt = mis::maximize_variant(basis, mixer, config.p, optimizer_config(config));
  const mis::RestrictedState state = mis::prepare_variant_state(basis, mixer, opt.schedule);

  int alpha = 0;
  for (std::uint64_t mask : basis.strings()) alpha = std::max(alpha, std::popcount(mask));

  const int shots = config.shots > 0 ? config.shots : 1000;
  Rng shot_rng = Rng::substream(*config.seed, "shots");
  const std::vector<std::uint64_t> draws = mis::sample_variant(state, shot_rng, shots);
  std::uint64_t best_mask = draws[0];
  double mean_size = 0.0;
  for (std::uint64_t mask : draws) {
    mean_size += std::popcount(mask);
    if (std::popcount(mask) > std::popcount(best_mask)) best_mask = mask;
  }
  mean_size /= static_cast<double>(shots);

  const int n = g.n_vertices();
  Json basis_json = Json{{"n", n}, {"size", basis.size()}};
  if (basis.size() <= 4096) basis_json = to_json(basis);

  Json results{
      {"basis", std::move(basis_json)},
      {"fp", Json{{"method", "restricted"}, {"p", config.p}, {"value", opt.value}, {"variant", true}}},
      {"schedule", Json{{"bs", opt.schedule.bs}, {"gammas", opt.schedule.gammas}}},
      {"b_window", opt.b_window},
      {"evaluations", opt.evaluations},
      {"alpha", alpha},
      {"sampling", Json{{"shots", shots},
                        {"best_set", bitstring(best_mask, n)},
                        {"best_size", std::popcount(best_mask)},
                        {"mean_size", mean_size}}}};
  return envelope(config, std::move(results));
}

Json run_sweep(const ExperimentConfig& config, const std::string& graph_text) {
  const Graph g = parse_graph(graph_text);
  const int res = config.grid_resolution > 0 ? config.grid_resolution
                                             : default_grid_resolution(config.p);
  if (res < 2)
    throw InfeasibleError("sweep needs a grid resolution >= 2 for p = " + std::to_string(config.p));

  const SubgraphDecomposition d = decompose(g, config.p);
  FgCache cache;
  const OptimizerConfig oc = optimizer_config(config);

  // Collect every grid point, then report the surface and its best point.
  std::vector<Json> points;
  const Objective objective = [&](const AngleSchedule& s) {
    return fp_decomposed(d, s, &cache).value;
  };
  OptimizationResult best = grid_search(objective, config.p, res, oc.threads, oc.max_grid_points);

  // Second deterministic pass for the surface rows. The point arithmetic
  // mirrors grid_search exactly, so every value is a cache hit.
  Json rows = Json::array();
  const int dims = 2 * config.p;
  std::vector<int> idx(dims, 0);
  const double gstep = 2.0 * std::numbers::pi / res;
  const double bstep = std::numbers::pi / res;
  for (;;) {
    AngleSchedule s;
    for (int i = 0; i < config.p; ++i) s.gammas.push_back(gstep * idx[i]);
    for (int i = 0; i < config.p; ++i) s.betas.push_back(bstep * idx[config.p + i]);
    rows.push_back({{"gammas", s.gammas}, {"betas", s.betas}, {"value", objective(s)}});
    int d2 = dims - 1;
    while (d2 >= 0 && ++idx[d2] == res) idx[d2--] = 0;
    if (d2 < 0) break;
  }
  return envelope(config, Json{{"grid_resolution", res},
                               {"best", to_json(best, config.p)},
                               {"points", std::move(rows)}});
}

std::string report_csv(const std::string& command, const Json& env) {
  const Json& results = env.at("results");
  std::string out;
  if (command == "worst-case") {
    out = "s,t,ratio\n";
    for (const Json& row : results.at("samples"))
      out += fmt_double(row.at("s").get<double>()) + "," + fmt_double(row.at("t").get<double>()) +
             "," + fmt_double(row.at("ratio").get<double>()) + "\n";
    return out;
  }
  if (command == "ring") {
    out = "p,mp_over_n,closed_form,deviation\n";
    for (const Json& row : results.at("rows"))
      out += std::to_string(row.at("p").get<int>()) + "," +
             fmt_double(row.at("mp_over_n").get<double>()) + "," +
             fmt_double(row.at("closed_form").get<double>()) + "," +
             fmt_double(row.at("deviation").get<double>()) + "\n";
    return out;
  }
  if (command == "sweep") {
    out = "gammas,betas,value\n";
    for (const Json& row : results.at("points")) {
      std::string gs, bs;
      for (const Json& v : row.at("gammas")) gs += (gs.empty() ? "" : ";") + fmt_double(v.get<double>());
      for (const Json& v : row.at("betas")) bs += (bs.empty() ? "" : ";") + fmt_double(v.get<double>());
      out += gs + "," + bs + "," + fmt_double(row.at("value").get<double>()) + "\n";
    }
    return out;
  }
  throw InfeasibleError("command \"" + command + "\" has no CSV rendering");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return 2;
  if (dynamic_cast<const ResourceLimitError*>(&e)) return 3;
  if (dynamic_cast<const BudgetError*>(&e)) return 4;
  if (dynamic_cast<const InfeasibleError*>(&e)) return 5;
  return 1;
}

}  // namespace qaoa::cli
