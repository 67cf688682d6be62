// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qaoa/errors.hpp"
#include "qaoa/graph.hpp"
#include "qaoa/rng.hpp"

namespace qaoa {

/// Largest full state vector the engine will allocate by default
/// (2^24 complex amplitudes, 256 MiB). Callers may raise or lower this cap.
inline constexpr int kDefaultMaxQubits = 24;

using Amplitude = std::complex<double>;

/// The 2p angles of a level-p schedule. gammas are taken modulo 2*pi and
/// betas modulo pi by the phase/mixer periodicity of integer-spectrum
/// objectives, but values outside those windows are accepted.
struct AngleSchedule {
  std::vector<double> gammas;
  std::vector<double> betas;

  int p() const { return static_cast<int>(gammas.size()); }
  static AngleSchedule zeros(int p);
  void validate() const;  // equal lengths, p >= 1
};

/// Dense state over n qubits. Bit convention: qubit j is bit j of the basis
/// index (little-endian), fixed project-wide.
class QuantumState {
 public:
  QuantumState(int n_qubits, int max_qubits = kDefaultMaxQubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }
  Amplitude amp(std::uint64_t z) const { return amps_[z]; }

  double norm() const;

 private:
  int n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Integer objective values over the computational basis.
struct CostDiagonal {
  int n_qubits = 0;
  std::vector<std::int32_t> values;

  std::int32_t max_value() const;
};

/// |s>: every amplitude 2^(-n/2).
QuantumState uniform_state(int n_qubits, int max_qubits = kDefaultMaxQubits);

/// |z>.
QuantumState basis_state(int n_qubits, std::uint64_t z, int max_qubits = kDefaultMaxQubits);

/// MaxCut objective: values(z) = number of edges whose endpoints differ.
CostDiagonal cost_diagonal(const Graph& g);

/// amp(z) *= exp(-i * gamma * C(z)).
void apply_phase_separator(QuantumState& state, const CostDiagonal& c, double gamma);

/// Applies exp(-i * beta * sigma_x) to every qubit, as in-place butterflies
/// over index pairs differing in one bit.
void apply_mixer(QuantumState& state, double beta);

/// U(B,beta_p) U(C,gamma_p) ... U(B,beta_1) U(C,gamma_1) |s>.
QuantumState prepare_qaoa_state(const Graph& g, const AngleSchedule& sched,
                                int max_qubits = kDefaultMaxQubits);
QuantumState prepare_qaoa_state(const CostDiagonal& c, const AngleSchedule& sched,
                                int max_qubits = kDefaultMaxQubits);

/// Sum_z |amp(z)|^2 C(z).
double expectation(const QuantumState& state, const CostDiagonal& c);

/// <C^2> - <C>^2.
double variance(const QuantumState& state, const CostDiagonal& c);

/// `shots` independent draws from |amp(z)|^2, as basis indices.
/// Deterministic for a fixed generator state.
std::vector<std::uint64_t> sample(const QuantumState& state, Rng& rng, int shots);

/// Render a basis index as a bit string, character j = bit of qubit j.
std::string bitstring(std::uint64_t z, int n_qubits);

}  // namespace qaoa
