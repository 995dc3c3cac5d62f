#pragma once

#include <cstdint>
#include <vector>

#include "ising/estimate.hpp"
#include "ising/model.hpp"

namespace ising {

// Probability that a branch bit is 1 under the tree proposal: e^{-2J} / (1 + e^{-2J}).
double primal_flip_probability(double coupling);

// One draw of y_T from the product proposal on the spanning tree; bit i
// belongs to the branch at position i.
BitVector draw_branch_assignment(const IsingModel& model, const TreePartition& partition, CounterStream& stream);

// Chord bits over chord positions: the parity of the branch bits along each
// fundamental cycle.
BitVector chord_bits(const TreePartition& partition, const BitVector& branch_bits);

// Full primal assignment over edge ids. Throws Error{invalid_argument} if
// branch_bits does not have one bit per branch.
Assignment complete_chords(const TreePartition& partition, const BitVector& branch_bits);

// Spin configuration with x[root] = anchor and x_u XOR x_v = y on every edge.
// Throws Error{inconsistent_assignment} if the assignment violates cycle parity.
std::vector<std::uint8_t> lift_to_spins(const TreePartition& partition, const Assignment& assignment, bool anchor);

// Log importance weight of a branch assignment: the sum of the reduced primal
// factors over the chords it induces.
class PrimalWeight {
 public:
  PrimalWeight(const IsingModel& model, const TreePartition& partition);
  double operator()(const BitVector& branch_bits) const;

 private:
  const TreePartition* partition_;
  std::vector<double> chord_log_factor_;
};

// Importance-sampling estimate of ln Z from the spanning-tree proposal with
// weights on the chords. Throws Error{invalid_argument} for samples == 0.
EstimateReport estimate_primal(const IsingModel& model, const TreePartition& partition, const EstimateOptions& options);

}  // namespace ising
