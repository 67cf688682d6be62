// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "qaoa/graph.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/rng.hpp"

namespace qaoa::mis {

/// Default cap on the number of legal strings enumerated.
inline constexpr std::size_t kDefaultBasisLimit = std::size_t{1} << 22;

/// The restricted Hilbert space: one basis vector per independent set of the
/// source graph, encoded as a bit mask (bit j = vertex j selected). Strings
/// are ordered lexicographically as rendered bit strings (vertex 0 first).
class IndependentSetBasis {
 public:
  IndependentSetBasis(Graph source, std::vector<std::uint64_t> strings);

  const Graph& source_graph() const { return source_; }
  std::size_t size() const { return strings_.size(); }
  std::uint64_t string_at(std::size_t i) const { return strings_[i]; }
  const std::vector<std::uint64_t>& strings() const { return strings_; }
  /// Position of a mask, or npos if it is not a legal string.
  std::size_t index_of(std::uint64_t mask) const;
  std::size_t zero_index() const { return zero_index_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  Graph source_;
  std::vector<std::uint64_t> strings_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::size_t zero_index_ = 0;
};

/// Enumerate every independent set of g by backtracking with adjacency
/// pruning. Deterministic order. Throws ResourceLimitError past the limit.
IndependentSetBasis enumerate_basis(const Graph& g, std::size_t limit = kDefaultBasisLimit);

/// B restricted to legal strings: the hypercube adjacency matrix on the
/// basis, stored as sorted adjacency lists (CSR).
struct MixerMatrix {
  std::vector<std::uint32_t> offsets;    // size() + 1 entries
  std::vector<std::uint32_t> neighbors;  // column indices, sorted per row

  std::size_t size() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  int max_degree() const;
};

MixerMatrix build_mixer_matrix(const IndependentSetBasis& basis);

/// Amplitudes over the legal strings, in basis order.
struct RestrictedState {
  const IndependentSetBasis* basis = nullptr;
  std::vector<std::complex<double>> amplitudes;

  double norm() const;
};

/// |z = 0...0>, the empty independent set.
RestrictedState zero_state(const IndependentSetBasis& basis);

/// The variant's p real numbers b and p-1 angles gamma.
struct VariantSchedule {
  std::vector<double> bs;
  std::vector<double> gammas;

  int p() const { return static_cast<int>(bs.size()); }
  void validate() const;  // bs.size() == gammas.size() + 1 >= 1
};

/// exp(-i b B) by a scaled Taylor series of sparse matrix-vector products:
/// b is split into substeps small enough that term norms decay immediately,
/// and each substep's series runs until the term norm drops below tol.
void apply_exp_b(RestrictedState& state, const MixerMatrix& mixer, double b, double tol = 1e-12);

/// amp(z) *= exp(-i gamma * weight(z)) with weight the Hamming weight.
void apply_exp_c(RestrictedState& state, double gamma);

/// U(B,b_p) U(C,gamma_{p-1}) ... U(C,gamma_1) U(B,b_1) |z=0>: the alternation
/// starts and ends with B.
RestrictedState prepare_variant_state(const IndependentSetBasis& basis, const MixerMatrix& mixer,
                                      const VariantSchedule& sched, double tol = 1e-12);

/// Expectation of the Hamming weight in the prepared state.
double fp_variant(const IndependentSetBasis& basis, const MixerMatrix& mixer,
                  const VariantSchedule& sched);

struct VariantOptimum {
  VariantSchedule schedule;
  double value = 0.0;
  std::int64_t evaluations = 0;
  int grid_resolution = 0;
  /// Search window applied to each b component (b has no natural period).
  double b_window = 0.0;
};

/// Maximize F_p over (b, gamma). Each b component is searched over a
/// [0, 2pi) window by default; gammas over [0, 2pi). Ladder warm starts
/// embed the previous level with b_p = 0, gamma_{p-1} = 0.
VariantOptimum maximize_variant(const IndependentSetBasis& basis, const MixerMatrix& mixer, int p,
                                const OptimizerConfig& config = {});

/// Draws from |amp|^2; every returned mask is a legal string by construction.
std::vector<std::uint64_t> sample_variant(const RestrictedState& state, Rng& rng, int shots);

}  // namespace qaoa::mis
