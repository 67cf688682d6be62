// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one function per criterion, each printing a PASS/FAIL
// line with its wall time. Run all with no arguments or a single criterion
// with --only N.

#include <sys/wait.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qaoa/cli.hpp"
#include "qaoa/maxcut_analysis.hpp"

using namespace qaoa;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

AngleSchedule random_schedule(int p, Rng& rng) {
  AngleSchedule s;
  for (int i = 0; i < p; ++i) s.gammas.push_back(rng.uniform(0.0, 2 * kPi));
  for (int i = 0; i < p; ++i) s.betas.push_back(rng.uniform(0.0, kPi));
  return s;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Graphs of maximum degree <= 3 for the equivalence and concentration
// criteria: rings, random cubic graphs, and cubic graphs with a few edges
// deleted.
std::vector<Graph> degree3_suite(int count, Rng& rng) {
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    switch (out.size() % 3) {
      case 0:
        out.push_back(ring_graph(6 + 2 * static_cast<int>(rng.below(6))));
        break;
      case 1:
        out.push_back(random_regular_graph(6 + 2 * rng.below(6), 3, rng.next()));
        break;
      default: {
        const Graph g = random_regular_graph(8 + 2 * rng.below(5), 3, rng.next());
        std::vector<Edge> edges = g.edges();
        const std::size_t drop = 1 + rng.below(3);
        for (std::size_t i = 0; i < drop; ++i)
          edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
        out.push_back(Graph(g.n_vertices(), std::move(edges)));
        break;
      }
    }
  }
  return out;
}

// The 3-regular instances with known S and T used by criteria 5 and 9.
struct StInstance {
  Graph g;
  int S, T;
};

std::vector<StInstance> st_suite() {
  std::vector<StInstance> out;
  const std::vector<Graph> backbones = {oracle::k33(),          oracle::cube_graph(),
                                        oracle::petersen(),     oracle::moebius_ladder(8),
                                        oracle::moebius_ladder(10), oracle::heawood()};
  for (const Graph& b : backbones) {
    for (auto [s, t] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
      out.push_back({oracle::build_st_instance(b, s, t), s, t});
    }
  }
  out.push_back({oracle::build_st_instance(oracle::cube_graph(), 2, 0), 2, 0});
  out.push_back({oracle::build_st_instance(oracle::moebius_ladder(10), 2, 2), 2, 2});
  out.push_back({oracle::triangular_prism(), 0, 2});
  out.push_back({oracle::two_crossed_squares(), 2, 0});
  return out;
}

SubgraphDecomposition single_entry(const RootedSubgraph& s) {
  SubgraphDecomposition d;
  d.p = s.p;
  d.entries.emplace(canonical_key(s), SubgraphDecomposition::Entry{s, 1});
  return d;
}

// ---- criteria ----

Check c1_ring() {
  Check check;
  const Graph ring = ring_graph(100);
  auto cache = std::make_shared<FgCache>();
  auto decomps = std::make_shared<std::map<int, SubgraphDecomposition>>();
  auto factory = [&ring, cache, decomps](int level) {
    if (!decomps->count(level)) decomps->emplace(level, decompose(ring, level));
    const SubgraphDecomposition& d = decomps->at(level);
    return Objective(
        [&d, cache](const AngleSchedule& s) { return fp_decomposed(d, s, cache.get()).value; });
  };

  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<OptimizationResult> base = maximize_fp_ladder(factory, 3, {});
  const double base_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  for (int p = 1; p <= 3; ++p) {
    const double target = (2.0 * p + 1.0) / (2.0 * p + 2.0);
    const double got = base[p - 1].best_value / 100.0;
    check.expect(std::abs(got - target) <= 5e-4,
                 "p=" + std::to_string(p) + " M_p/n=" + fmt(got) + " vs " + fmt(target));
  }
  check.expect(base_seconds < 60.0, "base run took " + fmt(base_seconds) + " s (>60)");

  const auto t1 = std::chrono::steady_clock::now();
  const std::vector<OptimizationResult> ext = maximize_fp_ladder(factory, 6, {});
  const double ext_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
  for (int p = 4; p <= 6; ++p) {
    const double target = (2.0 * p + 1.0) / (2.0 * p + 2.0);
    const double got = ext[p - 1].best_value / 100.0;
    check.expect(std::abs(got - target) <= 5e-4,
                 "p=" + std::to_string(p) + " M_p/n=" + fmt(got) + " vs " + fmt(target));
  }
  check.expect(ext_seconds < 1800.0, "extended run took " + fmt(ext_seconds) + " s (>1800)");
  return check;
}

Check c2_worst_case() {
  Check check;
  const auto t0 = std::chrono::steady_clock::now();
  const WorstCaseResult wc = worst_case_ratio(20);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  check.expect(std::abs(wc.s) <= 1e-9 && std::abs(wc.t) <= 1e-9,
               "minimizer (" + fmt(wc.s) + "," + fmt(wc.t) + ") is not the corner");
  check.expect(std::abs(wc.ratio - 0.6924) <= 5e-4, "ratio " + fmt(wc.ratio));
  check.expect(seconds < 600.0, "took " + fmt(seconds) + " s (>600)");
  return check;
}

Check c3_tree14() {
  Check check;
  const auto t0 = std::chrono::steady_clock::now();
  const OptimizationResult opt = maximize_fp(single_entry(tree14_subgraph()), 2, {});
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  check.expect(std::abs(opt.best_value - 0.7559) <= 5e-4, "tree value " + fmt(opt.best_value));
  check.expect(seconds < 1200.0, "took " + fmt(seconds) + " s (>1200)");

  // On a bipartite girth-6 cubic graph every p=2 neighborhood is this tree,
  // so the same angles drive the full state to the same per-edge value.
  const Graph hw = oracle::heawood();
  const double per_edge = fp_full(hw, opt.best_schedule).value / hw.n_edges();
  check.expect(std::abs(per_edge - 0.7559) <= 5e-3, "heawood per-edge " + fmt(per_edge));
  return check;
}

Check c4_oracle_equivalence() {
  Check check;
  Rng rng(404);
  const std::vector<Graph> graphs = degree3_suite(50, rng);
  for (const Graph& g : graphs) {
    for (int p : {1, 2}) {
      const SubgraphDecomposition d = decompose(g, p);
      FgCache cache;
      for (int trial = 0; trial < 20; ++trial) {
        const AngleSchedule sched = random_schedule(p, rng);
        const double full = fp_full(g, sched).value;
        const double dec = fp_decomposed(d, sched, &cache).value;
        check.expect(std::abs(full - dec) <= 1e-10,
                     "n=" + std::to_string(g.n_vertices()) + " p=" + std::to_string(p) +
                         " |full-dec|=" + fmt(std::abs(full - dec)));
      }
    }
  }
  return check;
}

Check c5_weight_law() {
  Check check;
  const CanonicalKey k4 = canonical_key(crossed_square_subgraph());
  const CanonicalKey k5 = canonical_key(triangle_with_legs_subgraph());
  const CanonicalKey k6 = canonical_key(double_star_subgraph());
  const std::vector<StInstance> suite = st_suite();
  check.expect(suite.size() >= 20, "suite too small");
  for (const StInstance& inst : suite) {
    const int n = inst.g.n_vertices();
    const SubgraphDecomposition d = decompose(inst.g, 1);
    auto weight = [&](const CanonicalKey& k) -> std::int64_t {
      auto it = d.entries.find(k);
      return it == d.entries.end() ? 0 : it->second.weight;
    };
    const bool ok = weight(k4) == inst.S && weight(k5) == 4 * inst.S + 3 * inst.T &&
                    weight(k6) == 3 * n / 2 - 5 * inst.S - 3 * inst.T;
    check.expect(ok, "weights off at n=" + std::to_string(n) + " S=" + std::to_string(inst.S) +
                         " T=" + std::to_string(inst.T));
  }
  return check;
}

Check c6_zero_angles() {
  Check check;
  Rng rng(606);
  std::vector<Graph> graphs = degree3_suite(10, rng);
  graphs.push_back(oracle::petersen());
  graphs.push_back(oracle::two_crossed_squares());
  for (const Graph& g : graphs) {
    if (g.n_edges() == 0) continue;
    for (int p : {1, 2, 3}) {
      const AngleSchedule zero = AngleSchedule::zeros(p);
      const double half = g.n_edges() / 2.0;
      check.expect(std::abs(fp_full(g, zero).value - half) <= 1e-10, "full path");
      check.expect(std::abs(fp_decomposed(decompose(g, p), zero).value - half) <= 1e-10,
                   "decomposed path");
    }
  }
  return check;
}

Check c7_monotonicity() {
  Check check;
  const std::vector<Graph> instances = {ring_graph(8), oracle::triangular_prism(), oracle::k33(),
                                        random_regular_graph(10, 3, 7)};
  for (const Graph& g : instances) {
    double prev = 0.0;
    for (int p = 1; p <= 3; ++p) {
      const double mp = maximize_fp(g, p).best_value;
      if (p > 1)
        check.expect(mp >= prev - 1e-9,
                     "M_" + std::to_string(p) + "=" + fmt(mp) + " < M_" + std::to_string(p - 1) +
                         "=" + fmt(prev));
      prev = mp;
    }
  }
  return check;
}

Check c8_concentration() {
  Check check;
  Rng rng(808);

  // Variance never exceeds the Eq-31 bound.
  for (int trial = 0; trial < 12; ++trial) {
    const bool cubic = trial % 2 == 0;
    const int n = 8 + 2 * static_cast<int>(rng.below(5));
    const Graph g = cubic ? random_regular_graph(n, 3, rng.next()) : ring_graph(n);
    const CostDiagonal c = cost_diagonal(g);
    for (int p : {1, 2}) {
      const AngleSchedule sched = random_schedule(p, rng);
      const double var = variance(prepare_qaoa_state(g, sched), c);
      const double bound = concentration_bound(cubic ? 3 : 2, p, g.n_edges()).variance_bound;
      check.expect(var <= bound, "variance " + fmt(var) + " > bound " + fmt(bound));
    }
  }

  // Repetition guarantee on ring16 at the p=1 optimum.
  const Graph ring = ring_graph(16);
  const std::int64_t m = ring.n_edges();
  const OptimizationResult opt = maximize_fp(ring, 1);
  const QuantumState state = prepare_qaoa_state(ring, opt.best_schedule);
  const CostDiagonal c = cost_diagonal(ring);
  const double fp = expectation(state, c);
  const std::int64_t shots = repetition_estimate(fp, m);
  check.expect(shots == 45, "ceil(16 ln 16) = 45, got " + std::to_string(shots));

  int successes = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Rng shot_rng = Rng::substream(static_cast<std::uint64_t>(trial), "shots");
    for (std::uint64_t z : sample(state, shot_rng, static_cast<int>(shots))) {
      if (c.values[z] >= fp - 1.0) {
        ++successes;
        break;
      }
    }
  }
  const double needed = 200.0 * (1.0 - 1.0 / static_cast<double>(m));
  check.expect(successes >= needed,
               "only " + std::to_string(successes) + "/200 trials hit F_p - 1 (need " +
                   fmt(needed) + ")");
  return check;
}

Check c9_cut_upper_bound() {
  Check check;
  Rng rng(909);
  std::vector<Graph> graphs;
  for (const StInstance& inst : st_suite())
    if (inst.g.n_vertices() <= 16) graphs.push_back(inst.g);
  for (int trial = 0; trial < 10; ++trial)
    graphs.push_back(random_regular_graph(8 + 2 * rng.below(5), 3, rng.next()));
  int tested = 0;
  for (const Graph& g : graphs) {
    const int n = g.n_vertices();
    if (n > 16 || n == 4) continue;
    ++tested;
    const int s = count_crossed_squares(g);
    const int t = count_isolated_triangles(g);
    const int max_cut = oracle::brute_force_max_cut(g);
    check.expect(max_cut <= 1.5 * n - s - t,
                 "max cut " + std::to_string(max_cut) + " beats 3n/2-S-T on n=" +
                     std::to_string(n));
  }
  check.expect(tested >= 20, "only " + std::to_string(tested) + " instances tested");
  return check;
}

Check c10_mis_exact() {
  Check check;
  for (int n = 1; n <= 10; ++n) {
    const mis::IndependentSetBasis basis = mis::enumerate_basis(Graph(n, {}));
    const mis::MixerMatrix mixer = mis::build_mixer_matrix(basis);
    mis::VariantSchedule sched;
    sched.bs = {kPi / 2};
    const mis::RestrictedState st = mis::prepare_variant_state(basis, mixer, sched);
    const std::size_t ones = basis.index_of((std::uint64_t{1} << n) - 1);
    const double prob = std::norm(st.amplitudes[ones]);
    check.expect(std::abs(prob - 1.0) <= 1e-10, "n=" + std::to_string(n) + " P(1..1)=" + fmt(prob));
  }
  return check;
}

Check c11_mis_oracle() {
  Check check;
  Rng rng(1111);

  // Series vs dense spectral exponential on small bases.
  const std::vector<Graph> small = {Graph(3, {{0, 1}, {1, 2}, {0, 2}}), Graph(2, {{0, 1}}),
                                    Graph(6, {}), random_regular_graph(6, 3, 3),
                                    ring_graph(6)};
  for (const Graph& g : small) {
    const mis::IndependentSetBasis basis = mis::enumerate_basis(g);
    if (basis.size() > 64) continue;
    const mis::MixerMatrix mixer = mis::build_mixer_matrix(basis);
    for (int trial = 0; trial < 6; ++trial) {
      const double b = rng.uniform(-2 * kPi, 2 * kPi);
      mis::RestrictedState st = mis::zero_state(basis);
      Eigen::VectorXcd psi(static_cast<Eigen::Index>(basis.size()));
      for (std::size_t i = 0; i < basis.size(); ++i)
        psi(static_cast<Eigen::Index>(i)) = st.amplitudes[i];
      const Eigen::VectorXcd expected = oracle::dense_exp_b(mixer, psi, b);
      mis::apply_exp_b(st, mixer, b);
      double diff = 0.0;
      for (std::size_t i = 0; i < basis.size(); ++i)
        diff = std::max(diff, std::abs(st.amplitudes[i] - expected(static_cast<Eigen::Index>(i))));
      check.expect(diff <= 1e-9, "series vs dense diff " + fmt(diff));
    }
  }

  // fp_variant never beats the brute-force independence number.
  for (int trial = 0; trial < 8; ++trial) {
    const int n = 8 + 2 * static_cast<int>(rng.below(5));
    const Graph g = random_regular_graph(n, 3, rng.next());
    const int alpha = oracle::brute_force_max_independent_set(g);
    const mis::IndependentSetBasis basis = mis::enumerate_basis(g);
    const mis::MixerMatrix mixer = mis::build_mixer_matrix(basis);
    for (int p : {1, 2}) {
      mis::VariantSchedule sched;
      for (int i = 0; i < p; ++i) sched.bs.push_back(rng.uniform(0.0, 2 * kPi));
      for (int i = 0; i + 1 < p; ++i) sched.gammas.push_back(rng.uniform(0.0, 2 * kPi));
      const double f = mis::fp_variant(basis, mixer, sched);
      check.expect(f <= alpha + 1e-10, "fp_variant " + fmt(f) + " > alpha " + std::to_string(alpha));
    }
  }
  return check;
}

Check c12_determinism() {
  Check check;
#ifndef QAOA_CLI_PATH
  check.expect(false, "CLI path not configured");
  return check;
#else
  const std::string cli = QAOA_CLI_PATH;
  const std::string dir = "acceptance_tmp";
  std::system(("mkdir -p " + dir).c_str());

  std::ofstream(dir + "/prism.edges") << format_graph(oracle::triangular_prism());
  std::ofstream(dir + "/p3.edges") << "3\n0 1\n1 2\n";
  std::ofstream(dir + "/ring8.edges") << format_graph(ring_graph(8));

  const std::vector<std::string> commands = {
      "maxcut " + dir + "/prism.edges --p 1 --seed 7",
      "ring --p 2",
      "worst-case --grid 6",
      "certify " + dir + "/prism.edges",
      "mis " + dir + "/p3.edges --p 2 --seed 5",
      "sweep " + dir + "/ring8.edges --p 1 --grid 6",
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    const std::string a = dir + "/out_a_" + std::to_string(i) + ".json";
    const std::string b = dir + "/out_b_" + std::to_string(i) + ".json";
    const std::string base = cli + " " + commands[i] + " --out ";
    const int ra = std::system((base + a).c_str());
    const int rb = std::system((base + b).c_str());
    check.expect(ra == 0 && rb == 0, "command failed: " + commands[i]);
    std::ifstream fa(a, std::ios::binary), fb(b, std::ios::binary);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    check.expect(!sa.str().empty() && sa.str() == sb.str(),
                 "outputs differ for: " + commands[i]);
  }

  // A malformed instance exits with the parse code and writes nothing.
  std::ofstream(dir + "/bad.edges") << "2\n0 0\n";
  const std::string bad_out = dir + "/bad.json";
  const int rc = std::system(
      (cli + " maxcut " + dir + "/bad.edges --seed 1 --out " + bad_out + " 2>/dev/null").c_str());
  check.expect(WIFEXITED(rc) && WEXITSTATUS(rc) == 2,
               "parse failure exited with " + std::to_string(WEXITSTATUS(rc)));
  check.expect(!std::ifstream(bad_out).good(), "error run still wrote an output file");
  return check;
#endif
}

struct Criterion {
  int id;
  const char* name;
  std::function<Check()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);

  const std::vector<Criterion> criteria = {
      {1, "ring of disagrees M_p/n = (2p+1)/(2p+2)", c1_ring},
      {2, "worst-case 3-regular ratio 0.6924 at (0,0)", c2_worst_case},
      {3, "p=2 tree value 0.7559", c3_tree14},
      {4, "full vs decomposed F_p within 1e-10", c4_oracle_equivalence},
      {5, "subgraph weight law {S, 4S+3T, 3n/2-5S-3T}", c5_weight_law},
      {6, "zero-angle law F_p = m/2", c6_zero_angles},
      {7, "monotonicity M_p >= M_{p-1}", c7_monotonicity},
      {8, "concentration bound and repetition guarantee", c8_concentration},
      {9, "brute-force max cut <= 3n/2 - S - T", c9_cut_upper_bound},
      {10, "MIS exact case: b = pi/2 on edgeless graphs", c10_mis_exact},
      {11, "MIS series oracle and alpha bound", c11_mis_oracle},
      {12, "byte-identical reports across runs", c12_determinism},
  };

  bool all_ok = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const Check result = c.run();
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2d %-48s %s (%.1f s)%s%s\n", c.id, c.name,
                result.ok ? "PASS" : "FAIL", seconds, result.ok ? "" : " — ",
                result.detail.c_str());
    std::fflush(stdout);
    all_ok = all_ok && result.ok;
  }
  return all_ok ? 0 : 1;
}
