// Copyright 2026 The qaoakit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <bit>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qaoa/mis_variant.hpp"

using namespace qaoa;
using namespace qaoa::mis;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

Graph edgeless(int n) { return Graph(n, {}); }

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }

Eigen::VectorXcd to_eigen(const RestrictedState& st) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(st.amplitudes.size()));
  for (std::size_t i = 0; i < st.amplitudes.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = st.amplitudes[i];
  return v;
}

bool is_independent(const Graph& g, std::uint64_t mask) {
  for (auto [j, k] : g.edges())
    if (((mask >> j) & 1) && ((mask >> k) & 1)) return false;
  return true;
}

}  // namespace

TEST_CASE("enumerate_basis") {
  SUBCASE("triangle has the empty set and three singletons") {
    const IndependentSetBasis basis = enumerate_basis(triangle());
    REQUIRE(basis.size() == 4);
    // Lexicographic order of the rendered strings: 000, 001, 010, 100.
    CHECK(basis.string_at(0) == 0b000);
    CHECK(basis.string_at(1) == 0b100);
    CHECK(basis.string_at(2) == 0b010);
    CHECK(basis.string_at(3) == 0b001);
  }

  SUBCASE("edgeless graphs keep all strings") {
    for (int n : {1, 3, 6}) CHECK(enumerate_basis(edgeless(n)).size() == std::size_t{1} << n);
  }

  SUBCASE("single edge drops only 11") {
    const IndependentSetBasis basis = enumerate_basis(Graph(2, {{0, 1}}));
    REQUIRE(basis.size() == 3);
    CHECK(basis.index_of(0b11) == IndependentSetBasis::npos);
    CHECK(basis.zero_index() == 0);
  }

  SUBCASE("every string is an independent set (property)") {
    Rng rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = random_regular_graph(10, 3, rng.next());
      const IndependentSetBasis basis = enumerate_basis(g);
      for (std::uint64_t mask : basis.strings()) CHECK(is_independent(g, mask));
    }
  }

  SUBCASE("limit is enforced") {
    CHECK_THROWS_AS(enumerate_basis(edgeless(12), 100), ResourceLimitError);
  }
}

TEST_CASE("build_mixer_matrix") {
  SUBCASE("single edge") {
    const IndependentSetBasis basis = enumerate_basis(Graph(2, {{0, 1}}));
    const MixerMatrix m = build_mixer_matrix(basis);
    // Strings in order: 00, 01(mask 2), 10(mask 1). 00 connects to both
    // singletons; the singletons differ in two bits.
    auto row = [&](std::size_t i) {
      return std::vector<std::uint32_t>(m.neighbors.begin() + m.offsets[i],
                                        m.neighbors.begin() + m.offsets[i + 1]);
    };
    CHECK(row(0) == std::vector<std::uint32_t>{1, 2});
    CHECK(row(1) == std::vector<std::uint32_t>{0});
    CHECK(row(2) == std::vector<std::uint32_t>{0});
  }

  SUBCASE("edgeless n=2 is the 2-cube") {
    const MixerMatrix m = build_mixer_matrix(enumerate_basis(edgeless(2)));
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(m.offsets[i + 1] - m.offsets[i] == 2);
  }

  SUBCASE("row degrees never exceed n (property)") {
    Rng rng(4);
    for (int trial = 0; trial < 4; ++trial) {
      const Graph g = random_regular_graph(8, 3, rng.next());
      const MixerMatrix m = build_mixer_matrix(enumerate_basis(g));
      CHECK(m.max_degree() <= g.n_vertices());
    }
  }
}

TEST_CASE("apply_exp_b") {
  SUBCASE("b = 0 is the identity") {
    const IndependentSetBasis basis = enumerate_basis(triangle());
    const MixerMatrix m = build_mixer_matrix(basis);
    RestrictedState st = zero_state(basis);
    apply_exp_b(st, m, 0.0);
    CHECK(std::abs(st.amplitudes[basis.zero_index()] - std::complex<double>{1.0, 0.0}) == 0.0);
  }

  SUBCASE("edgeless quantum walk at b = pi/2 lands on all-ones") {
    const IndependentSetBasis basis = enumerate_basis(edgeless(4));
    const MixerMatrix m = build_mixer_matrix(basis);
    RestrictedState st = zero_state(basis);
    apply_exp_b(st, m, kPi / 2);
    const std::size_t ones = basis.index_of(0b1111);
    CHECK(std::norm(st.amplitudes[ones]) == Approx(1.0).epsilon(1e-10));
  }

  SUBCASE("matches the dense spectral oracle (property)") {
    Rng rng(9);
    const std::vector<Graph> graphs = {triangle(), path3(), edgeless(5),
                                       Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}),
                                       random_regular_graph(6, 3, 17)};
    for (const Graph& g : graphs) {
      const IndependentSetBasis basis = enumerate_basis(g);
      REQUIRE(basis.size() <= 64);
      const MixerMatrix m = build_mixer_matrix(basis);
      for (int trial = 0; trial < 4; ++trial) {
        const double b = rng.uniform(-2 * kPi, 2 * kPi);
        RestrictedState st = zero_state(basis);
        // Random start state, normalized.
        for (auto& a : st.amplitudes) a = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double nrm = st.norm();
        for (auto& a : st.amplitudes) a /= nrm;

        const Eigen::VectorXcd expected = oracle::dense_exp_b(m, to_eigen(st), b);
        apply_exp_b(st, m, b);
        double diff = 0.0;
        for (std::size_t i = 0; i < st.amplitudes.size(); ++i)
          diff = std::max(diff,
                          std::abs(st.amplitudes[i] - expected(static_cast<Eigen::Index>(i))));
        CHECK(diff < 1e-9);
        CHECK(std::abs(st.norm() - 1.0) < 1e-10);
      }
    }
  }

  SUBCASE("unitary on larger bases (property)") {
    const IndependentSetBasis basis = enumerate_basis(edgeless(12));
    const MixerMatrix m = build_mixer_matrix(basis);
    RestrictedState st = zero_state(basis);
    apply_exp_b(st, m, 2 * kPi);
    CHECK(std::abs(st.norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("apply_exp_c") {
  const IndependentSetBasis basis = enumerate_basis(edgeless(2));
  SUBCASE("gamma = 0 and gamma = 2pi are identities") {
    RestrictedState a = zero_state(basis);
    RestrictedState b = zero_state(basis);
    apply_exp_c(a, 0.0);
    apply_exp_c(b, 2 * kPi);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(std::abs(a.amplitudes[i] - zero_state(basis).amplitudes[i]) == 0.0);
      CHECK(std::abs(b.amplitudes[i] - zero_state(basis).amplitudes[i]) < 1e-12);
    }
  }

  SUBCASE("weight-2 string at gamma = pi/2 picks up phase -1") {
    RestrictedState st = zero_state(basis);
    const std::size_t idx = basis.index_of(0b11);
    st.amplitudes[basis.zero_index()] = {0.0, 0.0};
    st.amplitudes[idx] = {1.0, 0.0};
    apply_exp_c(st, kPi / 2);
    CHECK(std::abs(st.amplitudes[idx] - std::complex<double>{-1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("prepare_variant_state") {
  const IndependentSetBasis basis = enumerate_basis(edgeless(4));
  const MixerMatrix m = build_mixer_matrix(basis);

  SUBCASE("p=1, b=0 stays at |z=0>") {
    VariantSchedule sched;
    sched.bs = {0.0};
    const RestrictedState st = prepare_variant_state(basis, m, sched);
    CHECK(std::norm(st.amplitudes[basis.zero_index()]) == Approx(1.0));
  }

  SUBCASE("norm 1 for random schedules (property)") {
    Rng rng(6);
    for (int trial = 0; trial < 8; ++trial) {
      VariantSchedule sched;
      sched.bs = {rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)};
      sched.gammas = {rng.uniform(0, 2 * kPi)};
      CHECK(std::abs(prepare_variant_state(basis, m, sched).norm() - 1.0) < 1e-10);
    }
  }

  SUBCASE("schedule shape is validated") {
    VariantSchedule bad;
    bad.bs = {1.0, 2.0};
    bad.gammas = {};
    CHECK_THROWS_AS(prepare_variant_state(basis, m, bad), InfeasibleError);
  }
}

TEST_CASE("fp_variant") {
  SUBCASE("zero schedule scores the empty set") {
    const IndependentSetBasis basis = enumerate_basis(triangle());
    const MixerMatrix m = build_mixer_matrix(basis);
    VariantSchedule sched;
    sched.bs = {0.0};
    CHECK(fp_variant(basis, m, sched) == Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("edgeless at b = pi/2 reaches n") {
    const IndependentSetBasis basis = enumerate_basis(edgeless(5));
    const MixerMatrix m = build_mixer_matrix(basis);
    VariantSchedule sched;
    sched.bs = {kPi / 2};
    CHECK(fp_variant(basis, m, sched) == Approx(5.0).epsilon(1e-10));
  }

  SUBCASE("single edge: the b sweep tops out at the independence number 1") {
    const Graph g(2, {{0, 1}});
    const IndependentSetBasis basis = enumerate_basis(g);
    const MixerMatrix m = build_mixer_matrix(basis);
    double best = 0.0;
    for (double b = 0.0; b <= 2 * kPi; b += 1e-3) {
      VariantSchedule sched;
      sched.bs = {b};
      const double f = fp_variant(basis, m, sched);
      CHECK(f <= 1.0 + 1e-9);
      best = std::max(best, f);
    }
    CHECK(best == Approx(1.0).epsilon(1e-4));
  }

  SUBCASE("never exceeds the brute-force independence number (property)") {
    Rng rng(15);
    for (int trial = 0; trial < 4; ++trial) {
      const Graph g = random_regular_graph(8, 3, rng.next());
      const int alpha = oracle::brute_force_max_independent_set(g);
      const IndependentSetBasis basis = enumerate_basis(g);
      const MixerMatrix m = build_mixer_matrix(basis);
      for (int inner = 0; inner < 4; ++inner) {
        VariantSchedule sched;
        sched.bs = {rng.uniform(0, 2 * kPi), rng.uniform(0, 2 * kPi)};
        sched.gammas = {rng.uniform(0, 2 * kPi)};
        CHECK(fp_variant(basis, m, sched) <= alpha + 1e-10);
      }
    }
  }
}

TEST_CASE("maximize_variant") {
  SUBCASE("edgeless n=4 p=1 finds b = pi/2 and value 4") {
    const IndependentSetBasis basis = enumerate_basis(edgeless(4));
    const MixerMatrix m = build_mixer_matrix(basis);
    const VariantOptimum opt = maximize_variant(basis, m, 1);
    CHECK(opt.value == Approx(4.0).epsilon(1e-6));
    CHECK(opt.schedule.bs[0] == Approx(kPi / 2).epsilon(1e-3));
  }

  SUBCASE("monotone in p and bounded by alpha on P3") {
    const Graph g = path3();
    const IndependentSetBasis basis = enumerate_basis(g);
    const MixerMatrix m = build_mixer_matrix(basis);
    const int alpha = oracle::brute_force_max_independent_set(g);
    REQUIRE(alpha == 2);
    double prev = 0.0;
    for (int p : {1, 2, 3}) {
      const VariantOptimum opt = maximize_variant(basis, m, p);
      CHECK(opt.value >= prev - 1e-9);
      CHECK(opt.value <= alpha + 1e-9);
      prev = opt.value;
    }
  }

  SUBCASE("monotone on the triangle") {
    const IndependentSetBasis basis = enumerate_basis(triangle());
    const MixerMatrix m = build_mixer_matrix(basis);
    const double m1 = maximize_variant(basis, m, 1).value;
    const double m2 = maximize_variant(basis, m, 2).value;
    CHECK(m2 >= m1 - 1e-9);
    CHECK(m2 <= 1.0 + 1e-9);
  }
}

TEST_CASE("sample_variant") {
  SUBCASE("concentrated draws") {
    const IndependentSetBasis basis = enumerate_basis(edgeless(3));
    const MixerMatrix m = build_mixer_matrix(basis);
    VariantSchedule sched;
    sched.bs = {kPi / 2};
    const RestrictedState st = prepare_variant_state(basis, m, sched);
    Rng rng(2);
    for (std::uint64_t mask : sample_variant(st, rng, 30)) CHECK(mask == 0b111);

    Rng rng2(3);
    for (std::uint64_t mask : sample_variant(zero_state(basis), rng2, 30)) CHECK(mask == 0);
  }

  SUBCASE("samples are always legal and track the expected weight") {
    Rng rng(44);
    const Graph g = random_regular_graph(8, 3, 99);
    const IndependentSetBasis basis = enumerate_basis(g);
    const MixerMatrix m = build_mixer_matrix(basis);
    VariantSchedule sched;
    sched.bs = {1.1, 0.4};
    sched.gammas = {0.7};
    const RestrictedState st = prepare_variant_state(basis, m, sched);
    const double mean = fp_variant(basis, m, sched);

    const int shots = 100000;
    double acc = 0.0;
    for (std::uint64_t mask : sample_variant(st, rng, shots)) {
      CHECK(is_independent(g, mask));
      acc += std::popcount(mask);
    }
    // Weights are bounded by n, so a 3-sigma window on the mean is generous.
    CHECK(std::abs(acc / shots - mean) <= 3.0 * g.n_vertices() / std::sqrt(shots));
  }
}
