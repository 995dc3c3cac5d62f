#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "ising/dual_sampler.hpp"
#include "ising/error.hpp"
#include "ising/exact.hpp"
#include "ising/primal_sampler.hpp"
#include "ising/topology.hpp"
#include "oracles.hpp"

using namespace ising;
using ising::testing::bits_from;
using ising::testing::bits_from_mask;

namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

TreePartition mst(const IsingModel& model) {
  std::vector<double> w;
  for (double j : model.couplings()) w.push_back(std::abs(j));
  return maximum_spanning_tree(model.graph(), w);
}

}  // namespace

TEST_CASE("chord sampling law") {
  CHECK(dual_flip_probability(0.0) == 0.0);
  CHECK(dual_flip_probability(40.0) == doctest::Approx(0.5));
  CHECK(dual_flip_probability(1.0) == doctest::Approx(0.43233235838169365).epsilon(1e-14));
  CHECK_THROWS_AS(dual_flip_probability(-0.1), Error);

  const IsingModel tri(periodic_chain(3), {2.0, 2.0, 1.0});
  const auto t = mst(tri);
  REQUIRE(t.chord_count() == 1);
  int ones = 0;
  const int n = 200000;
  for (int l = 0; l < n; ++l) {
    CounterStream s(8, static_cast<std::uint64_t>(l));
    ones += draw_chord_assignment(tri, t, s).test(0);
  }
  CHECK(ones / double(n) == doctest::Approx(0.4323).epsilon(0.01));

  const IsingModel neg(periodic_chain(3), {2.0, 2.0, -1.0});
  CounterStream s(1, 0);
  CHECK_THROWS_AS(draw_chord_assignment(neg, mst(neg), s), Error);
}

TEST_CASE("branch completion") {
  const auto tri = maximum_spanning_tree(periodic_chain(3), std::vector<double>{1, 1, 1});
  const auto full = complete_branches(tri, bits_from({1}));
  CHECK(full.domain == Domain::dual);
  CHECK(full.bits.indices() == std::vector<std::size_t>{0, 1, 2});
  CHECK_FALSE(complete_branches(tri, bits_from({0})).bits.any());

  const auto tree = maximum_spanning_tree(Graph::build(3, Pairs{{0, 1}, {1, 2}}), std::vector<double>{1, 1});
  CHECK_FALSE(complete_branches(tree, BitVector(0)).bits.any());
  CHECK_THROWS_AS(complete_branches(tri, bits_from({1, 0})), Error);
}

TEST_CASE("completed dual assignments: cutset parity and cycle sums agree") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = ising::testing::random_connected_graph(rng, 2 + trial % 9, 15);
    std::vector<double> w(g.edge_count());
    for (auto& x : w) x = static_cast<double>(rng() % 7);
    const auto t = maximum_spanning_tree(g, w);
    for (int k = 0; k < 16; ++k) {
      const auto chords = bits_from_mask(rng(), t.chord_count());
      const auto full = complete_branches(t, chords);
      CHECK(satisfies_cutset_parity(t, full.bits));
      CHECK(ising::testing::has_even_degrees(g, full.bits));
      CHECK(full.bits == ising::testing::dual_completion_by_peeling(t, chords));

      BitVector cycle_sum(g.edge_count());
      for (std::size_t j : chords.indices()) cycle_sum ^= fundamental_cycle(t, t.chord_ids()[j]);
      CHECK(full.bits == cycle_sum);
    }
  }
}

TEST_CASE("exhaustive expectation of the dual estimator equals Z'_d") {
  std::mt19937_64 rng(78);
  std::uniform_real_distribution<double> coupling(0.0, 1.5);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = ising::testing::random_connected_graph(rng, 4 + trial % 9, 18);
    std::vector<double> j(g.edge_count());
    for (auto& x : j) x = coupling(rng);
    const IsingModel model(g, j);
    const auto t = mst(model);
    const DualWeight weight(model, t);
    const double log_zq = log_proposal_normalizer_dual(model, t);

    LogSumExp expectation;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t.chord_count()); ++mask) {
      const auto bits = bits_from_mask(mask, t.chord_count());
      double log_q = 0;
      for (std::size_t k = 0; k < t.chord_count(); ++k) {
        const double p1 = dual_flip_probability(model.coupling(t.chord_ids()[k]));
        log_q += std::log(bits.test(k) ? p1 : 1 - p1);
      }
      expectation.add(log_q + log_zq + weight(bits));
    }
    double log_b = 0;
    for (double x : j) log_b += std::log(2 * std::cosh(x));
    CHECK(std::abs(expectation.value() - (brute_force_log_Zd(model, t) - log_b)) <= 1e-9);
  }
}

TEST_CASE("estimate_dual: degenerate cases are exact") {
  const IsingModel tree(Graph::build(4, Pairs{{0, 1}, {1, 2}, {2, 3}}), {0.5, 1.0, 2.0});
  const auto r = estimate_dual(tree, mst(tree), {1000, 1, 1});
  CHECK(r.log_reduced_estimate == 0.0);
  CHECK(r.empirical_chi_square == 0.0);
  double expected = std::numbers::ln2;
  for (double j : tree.couplings()) expected += std::log(2 * std::cosh(j));
  CHECK(r.log_estimate == doctest::Approx(expected));
  CHECK(r.log_estimate == doctest::Approx(brute_force_log_Z(tree)));

  // Zero chords: the proposal is a point mass on the all-zero assignment and
  // the estimate is the tree-only model's Z.
  const Graph g = lattice_2d(3, 3, true);
  const auto t = mst(IsingModel(g, couplings_constant(g, 1.0)));
  std::vector<double> j(g.edge_count(), 0.0);
  for (EdgeId b : t.branch_ids()) j[b] = 0.8;
  const IsingModel branch_only(g, j);
  const auto rz = estimate_dual(branch_only, t, {2000, 4, 1});
  CHECK(rz.empirical_chi_square == 0.0);
  CHECK(rz.log_estimate == doctest::Approx(brute_force_log_Z(branch_only)).epsilon(1e-12));

  const IsingModel neg(periodic_chain(3), {1.0, -1.0, 1.0});
  CHECK_THROWS_AS(estimate_dual(neg, mst(neg), {10, 1, 1}), Error);
}

TEST_CASE("zero-coupling branches contribute zero weight, not NaN") {
  const IsingModel tri(periodic_chain(3), {0.0, 0.0, 1.5});
  const auto t = maximum_spanning_tree(tri.graph(), std::vector<double>{1, 1, 0});
  const auto r = estimate_dual(tri, t, {50000, 3, 1});
  CHECK_FALSE(std::isnan(r.log_estimate));
  CHECK(std::abs(r.log_estimate - brute_force_log_Z(tri)) <= 4 * r.std_error_log);
}

TEST_CASE("estimate_dual converges on the triangle") {
  const IsingModel tri(periodic_chain(3), {1.0, 1.0, 1.0});
  const auto r = estimate_dual(tri, mst(tri), {100000, 7, 2});
  CHECK(std::abs(r.log_estimate - std::log(42.37835049340399)) <= 3 * r.std_error_log);
  CHECK(r.empirical_chi_square == doctest::Approx(ising::testing::exact_chi_square_dual(tri, mst(tri))).epsilon(0.05));
}

TEST_CASE("strong-branch limit drives chi-square to zero") {
  const Graph g = lattice_2d(3, 3, true);
  const auto t = maximum_spanning_tree(g, couplings_uniform(g, 0, 1, 6));
  double previous_exact = INFINITY;
  double previous_empirical = INFINITY;
  for (double jb : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    std::vector<double> j(g.edge_count(), 0.5);
    for (EdgeId b : t.branch_ids()) j[b] = jb;
    const IsingModel model(g, j);
    const double exact = ising::testing::exact_chi_square_dual(model, t);
    const auto r = estimate_dual(model, t, {100000, 42, 1});
    CAPTURE(jb);
    CHECK(exact <= previous_exact);
    CHECK(r.empirical_chi_square <= previous_empirical);
    previous_exact = exact;
    previous_empirical = r.empirical_chi_square;
  }
  CHECK(previous_empirical < 1e-5);
}

TEST_CASE("primal and dual estimators agree with the exact value") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coupling(0.1, 1.2);
  for (int trial = 0; trial < 4; ++trial) {
    const Graph g = ising::testing::random_connected_graph(rng, 6 + 2 * trial, 14 + trial);
    std::vector<double> j(g.edge_count());
    for (auto& x : j) x = coupling(rng);
    const IsingModel model(g, j);
    const auto t = mst(model);
    const double exact = brute_force_log_Z(model);
    const auto p = estimate_primal(model, t, {100000, 1000 + static_cast<std::uint64_t>(trial), 4});
    const auto d = estimate_dual(model, t, {100000, 2000 + static_cast<std::uint64_t>(trial), 4});
    CAPTURE(trial);
    CHECK(std::abs(p.log_estimate - exact) <= 4 * p.std_error_log);
    CHECK(std::abs(d.log_estimate - exact) <= 4 * d.std_error_log);
  }
}

TEST_CASE("estimate_dual is deterministic across thread counts") {
  const Graph g = lattice_2d(3, 4, true);
  const IsingModel model(g, couplings_uniform(g, 0.2, 2.0, 3));
  const auto t = mst(model);
  const auto a = estimate_dual(model, t, {30000, 5, 1});
  for (unsigned threads : {2u, 8u}) {
    const auto b = estimate_dual(model, t, {30000, 5, threads});
    CHECK(a.log_estimate == b.log_estimate);
    CHECK(a.empirical_chi_square == b.empirical_chi_square);
  }
}
