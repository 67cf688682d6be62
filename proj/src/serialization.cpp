// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/serialization.hpp"

#include "qaoa/statevector.hpp"

namespace qaoa {

Json to_json(const SubgraphDecomposition& d) {
  Json entries = Json::array();
  for (const auto& [key, entry] : d.entries) {
    const RootedSubgraph& rep = entry.representative;
    Json edges = Json::array();
    for (auto [j, k] : rep.graph.edges()) edges.push_back({j, k});
    entries.push_back({{"key", key.hex()},
                       {"weight", entry.weight},
                       {"vertices", rep.graph.n_vertices()},
                       {"edges", std::move(edges)},
                       {"root", {rep.root_edge.first, rep.root_edge.second}}});
  }
  return Json{{"p", d.p}, {"entries", std::move(entries)}};
}

Json to_json(const FpEvaluation& ev, bool variant) {
  Json out{{"method", ev.method == FpEvaluation::Method::Full ? "full" : "decomposed"},
           {"p", ev.p},
           {"value", ev.value}};
  if (!ev.per_subgraph.empty()) {
    Json per = Json::object();
    for (const auto& [key, f] : ev.per_subgraph) per[key.hex()] = f;
    out["per_subgraph"] = std::move(per);
  }
  if (variant) out["variant"] = true;
  return out;
}

Json to_json(const OptimizationResult& r, int p) {
  return Json{{"p", p},
              {"gammas", r.best_schedule.gammas},
              {"betas", r.best_schedule.betas},
              {"value", r.best_value},
              {"evaluations", r.evaluations},
              {"grid_resolution", r.grid_resolution}};
}

Json to_json(const RatioCertificate& cert) {
  return Json{{"n", cert.n},
              {"S", cert.S},
              {"T", cert.T},
              {"M1", cert.m1},
              {"cut_upper_bound", cert.cut_upper_bound},
              {"ratio_lower_bound", cert.ratio_lower_bound},
              {"k4_special_case", cert.k4_special_case}};
}

Json to_json(const mis::IndependentSetBasis& basis) {
  const int n = basis.source_graph().n_vertices();
  Json strings = Json::array();
  for (std::uint64_t mask : basis.strings()) strings.push_back(bitstring(mask, n));
  return Json{{"n", n},
              {"size", basis.size()},
              {"strings", std::move(strings)}};
}

}  // namespace qaoa
