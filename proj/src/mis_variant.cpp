// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/mis_variant.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace qaoa::mis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kSeriesBudget = 500;

}  // namespace

IndependentSetBasis::IndependentSetBasis(Graph source, std::vector<std::uint64_t> strings)
    : source_(std::move(source)), strings_(std::move(strings)) {
  index_.reserve(strings_.size() * 2);
  for (std::size_t i = 0; i < strings_.size(); ++i) index_.emplace(strings_[i], i);
  auto it = index_.find(0);
  if (it == index_.end()) throw InfeasibleError("basis must contain the empty set");
  zero_index_ = it->second;
}

std::size_t IndependentSetBasis::index_of(std::uint64_t mask) const {
  auto it = index_.find(mask);
  return it == index_.end() ? npos : it->second;
}

IndependentSetBasis enumerate_basis(const Graph& g, std::size_t limit) {
  const int n = g.n_vertices();
  if (n < 1 || n > 62) throw InfeasibleError("basis enumeration needs 1..62 vertices");

  std::vector<std::uint64_t> adj(n, 0);
  for (auto [j, k] : g.edges()) {
    adj[j] |= std::uint64_t{1} << k;
    adj[k] |= std::uint64_t{1} << j;
  }

  std::vector<std::uint64_t> strings;
  // DFS trying bit 0 before bit 1 at each vertex yields rendered-string
  // lexicographic order.
  struct Frame {
    int vertex;
    std::uint64_t mask;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    auto [v, mask] = stack.back();
    stack.pop_back();
    if (v == n) {
      if (strings.size() >= limit)
        throw ResourceLimitError("independent-set basis exceeds the limit of " +
                                 std::to_string(limit) + " strings");
      strings.push_back(mask);
      continue;
    }
    // Push in reverse order so the 0 branch is explored first.
    if ((adj[v] & mask) == 0) stack.push_back({v + 1, mask | (std::uint64_t{1} << v)});
    stack.push_back({v + 1, mask});
  }
  return IndependentSetBasis(g, std::move(strings));
}

int MixerMatrix::max_degree() const {
  int d = 0;
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
    d = std::max(d, static_cast<int>(offsets[i + 1] - offsets[i]));
  return d;
}

MixerMatrix build_mixer_matrix(const IndependentSetBasis& basis) {
  const int n = basis.source_graph().n_vertices();
  MixerMatrix m;
  m.offsets.reserve(basis.size() + 1);
  m.offsets.push_back(0);
  std::vector<std::uint32_t> row;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    row.clear();
    const std::uint64_t mask = basis.string_at(i);
    for (int j = 0; j < n; ++j) {
      const std::size_t other = basis.index_of(mask ^ (std::uint64_t{1} << j));
      if (other != IndependentSetBasis::npos) row.push_back(static_cast<std::uint32_t>(other));
    }
    std::sort(row.begin(), row.end());
    m.neighbors.insert(m.neighbors.end(), row.begin(), row.end());
    m.offsets.push_back(static_cast<std::uint32_t>(m.neighbors.size()));
  }
  return m;
}

double RestrictedState::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

RestrictedState zero_state(const IndependentSetBasis& basis) {
  RestrictedState st;
  st.basis = &basis;
  st.amplitudes.assign(basis.size(), {0.0, 0.0});
  st.amplitudes[basis.zero_index()] = {1.0, 0.0};
  return st;
}

void VariantSchedule::validate() const {
  if (bs.empty() || bs.size() != gammas.size() + 1)
    throw InfeasibleError("variant schedule needs p >= 1 b values and p-1 gammas");
}

void apply_exp_b(RestrictedState& state, const MixerMatrix& mixer, double b, double tol) {
  if (state.amplitudes.size() != mixer.size())
    throw InfeasibleError("mixer does not match state dimension");
  if (b == 0.0) return;

  // ||B||_2 <= max row degree; substeps keep ||theta B|| <= 1 so the series
  // has no growing-term cancellation.
  const double scale = std::max(1.0, static_cast<double>(mixer.max_degree()));
  const int substeps = std::max(1, static_cast<int>(std::ceil(std::abs(b) * scale)));
  const std::complex<double> theta{0.0, -b / substeps};

  const std::size_t dim = mixer.size();
  std::vector<std::complex<double>> term(dim), next(dim), acc(dim);
  for (int s = 0; s < substeps; ++s) {
    acc = state.amplitudes;
    term = state.amplitudes;
    int k = 1;
    for (; k <= kSeriesBudget; ++k) {
      // next = (theta / k) * B * term
      const std::complex<double> coeff = theta / static_cast<double>(k);
      double term_norm2 = 0.0;
      for (std::size_t i = 0; i < dim; ++i) {
        std::complex<double> sum{0.0, 0.0};
        for (std::uint32_t idx = mixer.offsets[i]; idx < mixer.offsets[i + 1]; ++idx)
          sum += term[mixer.neighbors[idx]];
        next[i] = coeff * sum;
        acc[i] += next[i];
        term_norm2 += std::norm(next[i]);
      }
      term.swap(next);
      if (std::sqrt(term_norm2) < tol) break;
    }
    if (k > kSeriesBudget)
      throw BudgetError("exp(-ibB) series did not converge within " +
                        std::to_string(kSeriesBudget) + " terms");
    state.amplitudes = acc;
  }

  // Pin the unit norm: truncation drift would otherwise leak into
  // expectation values across repeated applications.
  double norm2 = 0.0;
  for (const auto& a : state.amplitudes) norm2 += std::norm(a);
  const double inv = 1.0 / std::sqrt(norm2);
  for (auto& a : state.amplitudes) a *= inv;
}

void apply_exp_c(RestrictedState& state, double gamma) {
  const auto& strings = state.basis->strings();
  for (std::size_t i = 0; i < state.amplitudes.size(); ++i) {
    const int w = std::popcount(strings[i]);
    state.amplitudes[i] *= std::polar(1.0, -gamma * w);
  }
}

RestrictedState prepare_variant_state(const IndependentSetBasis& basis, const MixerMatrix& mixer,
                                      const VariantSchedule& sched, double tol) {
  sched.validate();
  RestrictedState st = zero_state(basis);
  apply_exp_b(st, mixer, sched.bs[0], tol);
  for (std::size_t layer = 0; layer + 1 < sched.bs.size(); ++layer) {
    apply_exp_c(st, sched.gammas[layer]);
    apply_exp_b(st, mixer, sched.bs[layer + 1], tol);
  }
  return st;
}

double fp_variant(const IndependentSetBasis& basis, const MixerMatrix& mixer,
                  const VariantSchedule& sched) {
  const RestrictedState st = prepare_variant_state(basis, mixer, sched);
  const auto& strings = basis.strings();
  double sum = 0.0;
  for (std::size_t i = 0; i < st.amplitudes.size(); ++i)
    sum += std::norm(st.amplitudes[i]) * std::popcount(strings[i]);
  return sum;
}

namespace {

VariantSchedule unpack_variant(const std::vector<double>& x, int p) {
  VariantSchedule s;
  s.bs.assign(x.begin(), x.begin() + p);
  s.gammas.assign(x.begin() + p, x.end());
  return s;
}

}  // namespace

VariantOptimum maximize_variant(const IndependentSetBasis& basis, const MixerMatrix& mixer, int p,
                                const OptimizerConfig& config) {
  if (p < 1) throw InfeasibleError("maximize_variant requires p >= 1");

  const double window = kTwoPi;
  Rng multistart_rng = Rng::substream(config.seed, "mis-multistart");

  std::vector<double> prev;  // packed (bs, gammas) best of the previous level
  VariantOptimum out;
  for (int level = 1; level <= p; ++level) {
    const int dims = 2 * level - 1;
    const BoxObjective objective = [&basis, &mixer, level](const std::vector<double>& x) {
      return fp_variant(basis, mixer, unpack_variant(x, level));
    };
    Box box;
    box.lo.assign(dims, 0.0);
    box.hi.assign(dims, window);

    std::int64_t evals = 0;
    std::vector<std::pair<std::vector<double>, double>> starts;  // (point, initial step)
    const int res =
        config.grid_resolution > 0 ? config.grid_resolution : default_grid_resolution(level);
    if (res > 0) {
      BoxResult g = grid_search_box(objective, box, res, config.threads, config.max_grid_points);
      evals += g.evaluations;
      starts.push_back({g.x, window / res});
    } else {
      for (int i = 0; i < std::max(1, config.multistarts); ++i) {
        std::vector<double> x(dims);
        for (double& v : x) v = multistart_rng.uniform(0.0, window);
        starts.push_back({std::move(x), config.refine_step});
      }
    }
    if (level > 1) {
      // Embed the previous level with b_p = 0, gamma_{p-1} = 0.
      std::vector<double> embedded(dims, 0.0);
      std::copy(prev.begin(), prev.begin() + (level - 1), embedded.begin());
      std::copy(prev.begin() + (level - 1), prev.end(), embedded.begin() + level);
      starts.push_back({std::move(embedded), config.refine_step});
    }

    BoxResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for (const auto& [x0, step] : starts) {
      BoxResult r = pattern_search_box(objective, x0, step, config.refine_tol);
      evals += r.evaluations;
      if (r.value > best.value || (r.value == best.value && r.x < best.x)) best = std::move(r);
    }

    prev = best.x;
    out.schedule = unpack_variant(best.x, level);
    out.value = best.value;
    out.evaluations += evals;
    out.grid_resolution = res;
    out.b_window = window;
  }
  return out;
}

std::vector<std::uint64_t> sample_variant(const RestrictedState& state, Rng& rng, int shots) {
  if (shots < 1) throw InfeasibleError("shots must be >= 1");
  const auto& amps = state.amplitudes;
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    acc += std::norm(amps[i]);
    cdf[i] = acc;
  }
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (int s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    out.push_back(state.basis->string_at(static_cast<std::size_t>(it - cdf.begin())));
  }
  return out;
}

}  // namespace qaoa::mis
