// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qaoa/errors.hpp"

namespace qaoa {

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int j, int k) { return j < k ? Edge{j, k} : Edge{k, j}; }

/// Undirected simple graph: no self-loops, no parallel edges, vertices
/// indexed 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  /// Validates and normalizes the edge set; throws InfeasibleError on
  /// self-loops, duplicates, or out-of-range endpoints.
  Graph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool is_regular(int v) const;
  bool has_edge(int j, int k) const;
  bool is_connected() const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;            // sorted, normalized
  std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Parse the edge-list text format: first line "n", then one "j k" pair per
/// line. Blank lines are ignored. Throws ParseError with a distinct kind per
/// failure class.
Graph parse_graph(std::string_view text);

/// Render a graph in the same edge-list format parse_graph accepts.
std::string format_graph(const Graph& g);

/// Cycle on n >= 3 vertices, edges <j, j+1 mod n>.
Graph ring_graph(int n);

/// Random simple v-regular graph via the pairing model with full rejection
/// of loops and parallel edges. Deterministic for a fixed seed. Throws
/// InfeasibleError if n*v is odd or v >= n, BudgetError if no simple pairing
/// is found within the retry budget.
Graph random_regular_graph(int n, int degree, std::uint64_t seed);

/// A subgraph grown from a distinguished edge: the instance a single edge
/// term of the objective depends on.
struct RootedSubgraph {
  Graph graph;     // compact relabeling, vertices 0..k-1
  Edge root_edge;  // in compact labels
  int p = 0;       // neighborhood radius it was grown with
};

/// Distance-p neighborhood of edge e: vertices within distance p of either
/// endpoint, and exactly the edges lying within p steps of e (an edge <a,b>
/// is kept iff it is e itself or min over its endpoints of the distance to
/// {j,k} is at most p-1). Vertices are relabeled compactly in order of
/// (distance from the root endpoints, original index).
RootedSubgraph edge_neighborhood(const Graph& g, Edge e, int p);

/// Canonical form of a RootedSubgraph under isomorphisms that map root edge
/// to root edge (endpoint swap allowed). Two subgraphs compare equal iff
/// such an isomorphism exists.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }
  std::string hex() const;

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

CanonicalKey canonical_key(const RootedSubgraph& s);

/// Weighted set of subgraph types occurring in a graph at level p. The
/// weights sum to the edge count of the source graph.
struct SubgraphDecomposition {
  struct Entry {
    RootedSubgraph representative;
    std::int64_t weight = 0;
  };

  int p = 0;
  std::map<CanonicalKey, Entry> entries;

  std::int64_t total_weight() const;
};

SubgraphDecomposition decompose(const Graph& g, int p);

/// Number of triangles in a 3-regular graph whose three leaving edges end on
/// three distinct vertices and which are vertex-disjoint from every crossed
/// square and every other counted triangle. Throws on non-3-regular input.
int count_isolated_triangles(const Graph& g);

/// Number of 4-cycles-plus-diagonal in a 3-regular graph whose two leaving
/// edges are distinct (the coinciding case is the K4 component, which is not
/// counted). Throws on non-3-regular input.
int count_crossed_squares(const Graph& g);

/// Largest possible subgraph size at level p on degree-v graphs: the rooted
/// tree, 2[((v-1)^(p+1) - 1)/((v-1) - 1)] vertices, or 2p+2 when v = 2.
std::int64_t q_tree(int degree, int p);

}  // namespace qaoa
