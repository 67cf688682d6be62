// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/graph.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <sstream>

#include "qaoa/rng.hpp"

namespace qaoa {

namespace {

constexpr int kMaxCanonicalVertices = 40;

std::string edge_str(int j, int k) {
  return "<" + std::to_string(j) + "," + std::to_string(k) + ">";
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices) {
  if (n_ < 0) throw InfeasibleError("vertex count must be nonnegative");
  edges_.reserve(edges.size());
  for (auto [j, k] : edges) {
    if (j == k) throw InfeasibleError("self-loop at vertex " + std::to_string(j));
    if (j < 0 || k < 0 || j >= n_ || k >= n_)
      throw InfeasibleError("edge " + edge_str(j, k) + " out of range for n=" + std::to_string(n_));
    edges_.push_back(make_edge(j, k));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InfeasibleError("duplicate edge");
  adj_.assign(n_, {});
  for (auto [j, k] : edges_) {
    adj_[j].push_back(k);
    adj_[k].push_back(j);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

bool Graph::is_regular(int v) const {
  for (int u = 0; u < n_; ++u)
    if (degree(u) != v) return false;
  return true;
}

bool Graph::has_edge(int j, int k) const {
  if (j < 0 || j >= n_ || k < 0 || k >= n_) return false;
  const auto& nb = adj_[j];
  return std::binary_search(nb.begin(), nb.end(), k);
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int count = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        queue.push_back(w);
      }
    }
  }
  return count == n_;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<Edge> edges;
  std::vector<char> strip;

  auto next_line = [&](std::string& out) -> bool {
    while (std::getline(in, out)) {
      ++lineno;
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (out.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line(line))
    throw ParseError(ParseError::Kind::BadHeader, "empty input: expected a vertex-count header");
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || n < 0 || (ls >> extra))
      throw ParseError(ParseError::Kind::BadHeader,
                       "line " + std::to_string(lineno) + ": expected header \"n\", got \"" + line + "\"");
  }

  std::vector<std::vector<char>> seen(n);
  for (auto& row : seen) row.assign(n, 0);

  while (next_line(line)) {
    std::istringstream ls(line);
    int j, k;
    std::string extra;
    if (!(ls >> j >> k) || (ls >> extra))
      throw ParseError(ParseError::Kind::MalformedLine,
                       "line " + std::to_string(lineno) + ": expected \"j k\", got \"" + line + "\"");
    if (j < 0 || k < 0 || j >= n || k >= n)
      throw ParseError(ParseError::Kind::VertexOutOfRange,
                       "line " + std::to_string(lineno) + ": vertex out of range in " + edge_str(j, k));
    if (j == k)
      throw ParseError(ParseError::Kind::SelfLoop,
                       "line " + std::to_string(lineno) + ": self-loop at vertex " + std::to_string(j));
    if (seen[j][k])
      throw ParseError(ParseError::Kind::DuplicateEdge,
                       "line " + std::to_string(lineno) + ": duplicate edge " + edge_str(j, k));
    seen[j][k] = seen[k][j] = 1;
    edges.push_back(make_edge(j, k));
  }
  return Graph(n, std::move(edges));
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.n_vertices()) + "\n";
  for (auto [j, k] : g.edges()) out += std::to_string(j) + " " + std::to_string(k) + "\n";
  return out;
}

Graph ring_graph(int n) {
  if (n < 3) throw InfeasibleError("ring requires n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  edges.reserve(n);
  for (int j = 0; j < n; ++j) edges.push_back(make_edge(j, (j + 1) % n));
  return Graph(n, std::move(edges));
}

Graph random_regular_graph(int n, int degree, std::uint64_t seed) {
  if (degree < 0 || n < 0) throw InfeasibleError("negative size");
  if (degree >= n) throw InfeasibleError("degree must be < n");
  if ((static_cast<std::int64_t>(n) * degree) % 2 != 0)
    throw InfeasibleError("n*degree must be even, got n=" + std::to_string(n) +
                          " degree=" + std::to_string(degree));

  Rng rng(seed);
  const int stubs = n * degree;
  std::vector<int> points(stubs);
  for (int i = 0; i < stubs; ++i) points[i] = i / degree;

  constexpr int kAttempts = 2000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    // Fisher-Yates pairing of stubs.
    std::vector<int> perm = points;
    for (int i = stubs - 1; i > 0; --i) {
      int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
      std::swap(perm[i], perm[j]);
    }
    std::vector<Edge> edges;
    edges.reserve(stubs / 2);
    bool simple = true;
    std::vector<std::vector<char>> seen(n);
    for (auto& row : seen) row.assign(n, 0);
    for (int i = 0; i + 1 < stubs && simple; i += 2) {
      int a = perm[i], b = perm[i + 1];
      if (a == b || seen[a][b]) {
        simple = false;
        break;
      }
      seen[a][b] = seen[b][a] = 1;
      edges.push_back(make_edge(a, b));
    }
    if (simple) return Graph(n, std::move(edges));
  }
  throw BudgetError("no simple " + std::to_string(degree) + "-regular pairing found in " +
                    std::to_string(kAttempts) + " attempts");
}

RootedSubgraph edge_neighborhood(const Graph& g, Edge e, int p) {
  e = make_edge(e.first, e.second);
  if (!g.has_edge(e.first, e.second))
    throw InfeasibleError("edge " + edge_str(e.first, e.second) + " not in graph");
  if (p < 1) throw InfeasibleError("neighborhood level must be >= 1");

  const int n = g.n_vertices();
  std::vector<int> dist(n, -1);
  std::deque<int> queue;
  dist[e.first] = 0;
  dist[e.second] = 0;
  queue.push_back(e.first);
  queue.push_back(e.second);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (dist[u] == p) continue;
    for (int w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }

  std::vector<int> verts;
  for (int v = 0; v < n; ++v)
    if (dist[v] >= 0 && dist[v] <= p) verts.push_back(v);
  std::sort(verts.begin(), verts.end(),
            [&](int a, int b) { return std::pair(dist[a], a) < std::pair(dist[b], b); });

  std::vector<int> compact(n, -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) compact[verts[i]] = i;

  std::vector<Edge> sub_edges;
  for (auto [a, b] : g.edges()) {
    if (compact[a] < 0 || compact[b] < 0) continue;
    bool is_root = (make_edge(a, b) == e);
    if (is_root || std::min(dist[a], dist[b]) <= p - 1)
      sub_edges.push_back(make_edge(compact[a], compact[b]));
  }

  RootedSubgraph out;
  out.graph = Graph(static_cast<int>(verts.size()), std::move(sub_edges));
  out.root_edge = make_edge(compact[e.first], compact[e.second]);
  out.p = p;
  return out;
}

namespace {

// Finds the lexicographically largest adjacency bitstring over all labelings
// that place the root endpoints at labels {0, 1}. Row i packs the adjacency
// of label i to labels j < i into a uint64 with label 0 at the top bit, so
// rows compare lexicographically as integers. Branch and bound on the
// partial row sequence; ties are explored exhaustively.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.n_vertices()), adj_(n_, 0) {
    for (auto [j, k] : g.edges()) {
      adj_[j] |= std::uint64_t{1} << k;
      adj_[k] |= std::uint64_t{1} << j;
    }
    labeling_.reserve(n_);
    used_.assign(n_, 0);
    cur_rows_.assign(n_, 0);
  }

  void seed_root(int a, int b) {
    labeling_ = {a};
    std::fill(used_.begin(), used_.end(), 0);
    used_[a] = used_[b] = 1;
    cur_rows_[0] = 0;
    cur_rows_[1] = row_of(b);
    labeling_.push_back(b);
    extend(2, false);
  }

  std::vector<std::uint64_t> best() const { return best_rows_; }

 private:
  std::uint64_t row_of(int v) const {
    std::uint64_t row = 0;
    for (std::size_t i = 0; i < labeling_.size(); ++i)
      row |= ((adj_[v] >> labeling_[i]) & 1) << (63 - i);
    return row;
  }

  void extend(int depth, bool greater) {
    if (depth == n_) {
      if (!have_best_ ||
          std::lexicographical_compare(best_rows_.begin(), best_rows_.end(),
                                       cur_rows_.begin(), cur_rows_.begin() + n_)) {
        best_rows_.assign(cur_rows_.begin(), cur_rows_.begin() + n_);
        have_best_ = true;
      }
      return;
    }
    struct Cand {
      std::uint64_t row;
      int v;
    };
    std::vector<Cand> cands;
    for (int v = 0; v < n_; ++v)
      if (!used_[v]) cands.push_back({row_of(v), v});
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.row != b.row ? a.row > b.row : a.v < b.v;
    });
    for (const Cand& c : cands) {
      bool child_greater = greater;
      if (!greater && have_best_) {
        if (c.row < best_rows_[depth]) break;  // all remaining rows are smaller
        if (c.row > best_rows_[depth]) child_greater = true;
      }
      if (greater && c.row < cands.front().row) break;  // only max rows can extend the max
      used_[c.v] = 1;
      labeling_.push_back(c.v);
      cur_rows_[depth] = c.row;
      extend(depth + 1, child_greater);
      labeling_.pop_back();
      used_[c.v] = 0;
    }
  }

  int n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> labeling_;
  std::vector<char> used_;
  std::vector<std::uint64_t> cur_rows_;
  std::vector<std::uint64_t> best_rows_;
  bool have_best_ = false;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

CanonicalKey canonical_key(const RootedSubgraph& s) {
  const Graph& g = s.graph;
  const int n = g.n_vertices();
  if (n > kMaxCanonicalVertices)
    throw ResourceLimitError("subgraph with " + std::to_string(n) +
                             " vertices exceeds the canonicalization limit of " +
                             std::to_string(kMaxCanonicalVertices));
  if (!g.has_edge(s.root_edge.first, s.root_edge.second))
    throw InfeasibleError("root edge not in subgraph");

  CanonicalSearch search(g);
  search.seed_root(s.root_edge.first, s.root_edge.second);
  search.seed_root(s.root_edge.second, s.root_edge.first);
  std::vector<std::uint64_t> rows = search.best();

  // Pack [n][upper-triangle bits, row-major] into bytes.
  std::vector<std::uint8_t> bytes{static_cast<std::uint8_t>(n)};
  int bitpos = 0;
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      if (bitpos % 8 == 0) bytes.push_back(0);
      if ((rows[i] >> (63 - j)) & 1) bytes.back() |= 0x80 >> (bitpos % 8);
      ++bitpos;
    }
  }
  return CanonicalKey(std::move(bytes));
}

std::int64_t SubgraphDecomposition::total_weight() const {
  std::int64_t total = 0;
  for (const auto& [key, entry] : entries) total += entry.weight;
  return total;
}

SubgraphDecomposition decompose(const Graph& g, int p) {
  if (p < 1) throw InfeasibleError("decomposition level must be >= 1");
  SubgraphDecomposition d;
  d.p = p;
  for (Edge e : g.edges()) {
    RootedSubgraph s = edge_neighborhood(g, e, p);
    CanonicalKey key = canonical_key(s);
    auto it = d.entries.find(key);
    if (it == d.entries.end())
      d.entries.emplace(std::move(key), SubgraphDecomposition::Entry{std::move(s), 1});
    else
      ++it->second.weight;
  }
  return d;
}

namespace {

void require_cubic(const Graph& g, const char* op) {
  if (!g.is_regular(3))
    throw InfeasibleError(std::string(op) + " requires a 3-regular graph");
}

// All crossed squares as sorted vertex quadruples. An edge whose endpoints
// share two neighbors is the diagonal of a 4-cycle-plus-diagonal; the square
// counts unless it induces K4 (coinciding leaving edges).
std::vector<std::array<int, 4>> crossed_square_sets(const Graph& g) {
  std::vector<std::array<int, 4>> out;
  for (auto [u, v] : g.edges()) {
    std::vector<int> common;
    std::set_intersection(g.neighbors(u).begin(), g.neighbors(u).end(),
                          g.neighbors(v).begin(), g.neighbors(v).end(),
                          std::back_inserter(common));
    if (common.size() != 2) continue;
    if (g.has_edge(common[0], common[1])) continue;  // K4 component
    std::array<int, 4> quad{u, v, common[0], common[1]};
    std::sort(quad.begin(), quad.end());
    out.push_back(quad);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int count_crossed_squares(const Graph& g) {
  require_cubic(g, "count_crossed_squares");
  return static_cast<int>(crossed_square_sets(g).size());
}

int count_isolated_triangles(const Graph& g) {
  require_cubic(g, "count_isolated_triangles");

  std::vector<char> blocked(g.n_vertices(), 0);
  for (const auto& quad : crossed_square_sets(g))
    for (int v : quad) blocked[v] = 1;

  int count = 0;
  for (auto [u, v] : g.edges()) {
    for (int w : g.neighbors(u)) {
      if (w <= v || !g.has_edge(v, w)) continue;  // triangle u < v < w
      // The three leaving edges must end on three distinct vertices.
      std::vector<int> leave;
      for (int x : {u, v, w})
        for (int y : g.neighbors(x))
          if (y != u && y != v && y != w) leave.push_back(y);
      if (leave.size() != 3) continue;
      std::sort(leave.begin(), leave.end());
      if (leave[0] == leave[1] || leave[1] == leave[2]) continue;
      if (blocked[u] || blocked[v] || blocked[w]) continue;
      blocked[u] = blocked[v] = blocked[w] = 1;  // counted triangles are disjoint
      ++count;
    }
  }
  return count;
}

std::int64_t q_tree(int degree, int p) {
  if (degree < 2) throw InfeasibleError("q_tree requires degree >= 2");
  if (p < 1) throw InfeasibleError("q_tree requires p >= 1");
  if (degree == 2) return 2 * static_cast<std::int64_t>(p) + 2;
  std::int64_t power = 1;
  for (int i = 0; i < p + 1; ++i) {
    if (power > (std::int64_t{1} << 56)) throw ResourceLimitError("q_tree overflow");
    power *= degree - 1;
  }
  return 2 * ((power - 1) / (degree - 2));
}

}  // namespace qaoa
