// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/qaoa.hpp"

#include <cmath>
#include <cstring>

namespace qaoa {

std::string FgCache::make_key(const CanonicalKey& key, const AngleSchedule& sched) {
  std::string k(key.bytes().begin(), key.bytes().end());
  k.push_back('\0');
  auto append_doubles = [&k](const std::vector<double>& v) {
    const std::size_t off = k.size();
    k.resize(off + v.size() * sizeof(double));
    std::memcpy(k.data() + off, v.data(), v.size() * sizeof(double));
  };
  append_doubles(sched.gammas);
  append_doubles(sched.betas);
  return k;
}

std::optional<double> FgCache::lookup(const CanonicalKey& key, const AngleSchedule& sched) const {
  std::lock_guard lock(mutex_);
  auto it = map_.find(make_key(key, sched));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void FgCache::insert(const CanonicalKey& key, const AngleSchedule& sched, double value) {
  std::lock_guard lock(mutex_);
  map_.emplace(make_key(key, sched), value);
}

std::size_t FgCache::size() const {
  std::lock_guard lock(mutex_);
  return map_.size();
}

FpEvaluation fp_full(const Graph& g, const AngleSchedule& sched, int max_qubits) {
  sched.validate();
  const CostDiagonal c = cost_diagonal(g);
  const QuantumState st = prepare_qaoa_state(c, sched, max_qubits);
  FpEvaluation ev;
  ev.value = expectation(st, c);
  ev.method = FpEvaluation::Method::Full;
  ev.p = sched.p();
  return ev;
}

double f_subgraph(const RootedSubgraph& s, const AngleSchedule& sched, int max_qubits) {
  sched.validate();
  const CostDiagonal c_sub = cost_diagonal(s.graph);
  const QuantumState st = prepare_qaoa_state(c_sub, sched, max_qubits);
  const Graph root_only(s.graph.n_vertices(), {s.root_edge});
  return expectation(st, cost_diagonal(root_only));
}

FpEvaluation fp_decomposed(const SubgraphDecomposition& d, const AngleSchedule& sched,
                           FgCache* cache, int max_qubits) {
  sched.validate();
  FpEvaluation ev;
  ev.method = FpEvaluation::Method::Decomposed;
  ev.p = sched.p();
  for (const auto& [key, entry] : d.entries) {
    double f;
    if (cache) {
      if (auto hit = cache->lookup(key, sched)) {
        f = *hit;
      } else {
        f = f_subgraph(entry.representative, sched, max_qubits);
        cache->insert(key, sched, f);
      }
    } else {
      f = f_subgraph(entry.representative, sched, max_qubits);
    }
    ev.per_subgraph.emplace(key, f);
    ev.value += static_cast<double>(entry.weight) * f;
  }
  return ev;
}

ConcentrationBound concentration_bound(int v, int p, std::int64_t m) {
  if (v < 2) throw InfeasibleError("concentration bound requires degree >= 2");
  if (p < 1) throw InfeasibleError("concentration bound requires p >= 1");
  ConcentrationBound b;
  b.v = v;
  b.p = p;
  b.m = m;
  if (v == 2) {
    b.variance_bound = static_cast<double>(4 * p + 4) * static_cast<double>(m);
  } else {
    const double reach = 2.0 * (std::pow(v - 1, 2 * p + 2) - 1.0) / (v - 2);
    b.variance_bound = reach * static_cast<double>(m);
  }
  return b;
}

std::int64_t repetition_estimate(double fp, std::int64_t m, double c) {
  (void)fp;  // the estimate targets an outcome >= fp - 1; only m sets the count
  if (m < 2) throw InfeasibleError("repetition estimate requires m >= 2");
  return static_cast<std::int64_t>(std::ceil(c * static_cast<double>(m) * std::log(static_cast<double>(m))));
}

}  // namespace qaoa
