// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "qaoa/graph.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

/// One evaluation of the objective expectation F_p.
struct FpEvaluation {
  enum class Method { Full, Decomposed };

  double value = 0.0;
  Method method = Method::Full;
  int p = 0;
  std::map<CanonicalKey, double> per_subgraph;  // filled on the decomposed path
};

/// Concurrent memo of f_g values keyed on (canonical key, schedule bytes).
/// Schedules are compared bit-exactly; inserts of the same key are
/// idempotent, so concurrent writers are harmless.
class FgCache {
 public:
  std::optional<double> lookup(const CanonicalKey& key, const AngleSchedule& sched) const;
  void insert(const CanonicalKey& key, const AngleSchedule& sched, double value);
  std::size_t size() const;

 private:
  static std::string make_key(const CanonicalKey& key, const AngleSchedule& sched);

  mutable std::mutex mutex_;
  std::unordered_map<std::string, double> map_;
};

/// F_p by full state-vector simulation: the expectation of the graph's cut
/// objective in the prepared p-level state.
FpEvaluation fp_full(const Graph& g, const AngleSchedule& sched,
                     int max_qubits = kDefaultMaxQubits);

/// The single-edge term f_g: the QAOA state is prepared on the subgraph's
/// own qubits with its own restricted objective and mixer, and the root
/// edge's cut operator is measured. Value in [0, 1].
double f_subgraph(const RootedSubgraph& s, const AngleSchedule& sched,
                  int max_qubits = kDefaultMaxQubits);

/// F_p as the weighted sum of f_g over subgraph types. With a cache, each
/// (type, schedule) pair is evaluated once per sweep.
FpEvaluation fp_decomposed(const SubgraphDecomposition& d, const AngleSchedule& sched,
                           FgCache* cache = nullptr, int max_qubits = kDefaultMaxQubits);

/// Variance bound for C in any p-level state on a degree-v graph with m
/// edges: 2[((v-1)^(2p+2) - 1)/((v-1) - 1)] m, or (4p+4) m when v = 2.
struct ConcentrationBound {
  double variance_bound = 0.0;
  int v = 0;
  int p = 0;
  std::int64_t m = 0;
};

ConcentrationBound concentration_bound(int v, int p, std::int64_t m);

/// Number of measurement repetitions that suffices for an outcome of at
/// least fp - 1 with probability 1 - 1/m: ceil(c * m * ln m).
std::int64_t repetition_estimate(double fp, std::int64_t m, double c = 1.0);

}  // namespace qaoa
