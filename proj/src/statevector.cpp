// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include "qaoa/statevector.hpp"

#include <algorithm>
#include <cmath>

namespace qaoa {

AngleSchedule AngleSchedule::zeros(int p) {
  AngleSchedule s;
  s.gammas.assign(p, 0.0);
  s.betas.assign(p, 0.0);
  return s;
}

void AngleSchedule::validate() const {
  if (gammas.empty() || gammas.size() != betas.size())
    throw InfeasibleError("schedule needs p >= 1 with equally many gammas and betas");
}

namespace {

void check_qubits(int n_qubits, int max_qubits) {
  if (n_qubits < 1) throw InfeasibleError("need at least one qubit");
  if (n_qubits > max_qubits)
    throw ResourceLimitError("state vector over " + std::to_string(n_qubits) +
                             " qubits exceeds the cap of " + std::to_string(max_qubits));
}

}  // namespace

QuantumState::QuantumState(int n_qubits, int max_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits, max_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
}

double QuantumState::norm() const {
  double s = 0.0;
  for (const Amplitude& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::int32_t CostDiagonal::max_value() const {
  std::int32_t m = 0;
  for (std::int32_t v : values) m = std::max(m, v);
  return m;
}

QuantumState uniform_state(int n_qubits, int max_qubits) {
  QuantumState st(n_qubits, max_qubits);
  const double a = std::pow(2.0, -0.5 * n_qubits);
  std::fill(st.amplitudes().begin(), st.amplitudes().end(), Amplitude{a, 0.0});
  return st;
}

QuantumState basis_state(int n_qubits, std::uint64_t z, int max_qubits) {
  QuantumState st(n_qubits, max_qubits);
  if (z >= st.size()) throw InfeasibleError("basis index out of range");
  st.amplitudes()[z] = Amplitude{1.0, 0.0};
  return st;
}

CostDiagonal cost_diagonal(const Graph& g) {
  CostDiagonal c;
  c.n_qubits = g.n_vertices();
  if (c.n_qubits < 1 || c.n_qubits > 62) throw InfeasibleError("cost diagonal needs 1..62 vertices");
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  c.values.assign(dim, 0);
  for (auto [j, k] : g.edges()) {
    for (std::size_t z = 0; z < dim; ++z)
      c.values[z] += static_cast<std::int32_t>(((z >> j) ^ (z >> k)) & 1);
  }
  return c;
}

void apply_phase_separator(QuantumState& state, const CostDiagonal& c, double gamma) {
  if (c.n_qubits != state.n_qubits())
    throw InfeasibleError("cost diagonal does not match state dimension");
  // C has a small integer spectrum: index phases from a table.
  const std::int32_t top = c.max_value();
  std::vector<Amplitude> phase(top + 1);
  for (std::int32_t v = 0; v <= top; ++v)
    phase[v] = std::polar(1.0, -gamma * v);
  auto& amps = state.amplitudes();
  for (std::size_t z = 0; z < amps.size(); ++z) amps[z] *= phase[c.values[z]];
}

void apply_mixer(QuantumState& state, double beta) {
  const double cb = std::cos(beta);
  const double sb = std::sin(beta);
  auto& amps = state.amplitudes();
  const std::size_t dim = amps.size();
  for (int q = 0; q < state.n_qubits(); ++q) {
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * bit) {
      for (std::size_t lo = base; lo < base + bit; ++lo) {
        const Amplitude a = amps[lo];
        const Amplitude b = amps[lo | bit];
        // exp(-i beta sigma_x): (a, b) -> (a cos - i b sin, b cos - i a sin)
        amps[lo] = Amplitude{cb * a.real() + sb * b.imag(), cb * a.imag() - sb * b.real()};
        amps[lo | bit] = Amplitude{cb * b.real() + sb * a.imag(), cb * b.imag() - sb * a.real()};
      }
    }
  }
}

QuantumState prepare_qaoa_state(const Graph& g, const AngleSchedule& sched, int max_qubits) {
  return prepare_qaoa_state(cost_diagonal(g), sched, max_qubits);
}

QuantumState prepare_qaoa_state(const CostDiagonal& c, const AngleSchedule& sched,
                                int max_qubits) {
  sched.validate();
  QuantumState st = uniform_state(c.n_qubits, max_qubits);
  for (int layer = 0; layer < sched.p(); ++layer) {
    apply_phase_separator(st, c, sched.gammas[layer]);
    apply_mixer(st, sched.betas[layer]);
  }
  return st;
}

double expectation(const QuantumState& state, const CostDiagonal& c) {
  if (c.n_qubits != state.n_qubits())
    throw InfeasibleError("cost diagonal does not match state dimension");
  const auto& amps = state.amplitudes();
  double sum = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z) sum += std::norm(amps[z]) * c.values[z];
  return sum;
}

double variance(const QuantumState& state, const CostDiagonal& c) {
  if (c.n_qubits != state.n_qubits())
    throw InfeasibleError("cost diagonal does not match state dimension");
  const auto& amps = state.amplitudes();
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z) {
    const double pz = std::norm(amps[z]);
    const double v = c.values[z];
    sum += pz * v;
    sum2 += pz * v * v;
  }
  return sum2 - sum * sum;
}

std::vector<std::uint64_t> sample(const QuantumState& state, Rng& rng, int shots) {
  if (shots < 1) throw InfeasibleError("shots must be >= 1");
  const auto& amps = state.amplitudes();
  std::vector<double> cdf(amps.size());
  double acc = 0.0;
  for (std::size_t z = 0; z < amps.size(); ++z) {
    acc += std::norm(amps[z]);
    cdf[z] = acc;
  }
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (int s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    out.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
  }
  return out;
}

std::string bitstring(std::uint64_t z, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int j = 0; j < n_qubits; ++j)
    if ((z >> j) & 1) s[j] = '1';
  return s;
}

}  // namespace qaoa
