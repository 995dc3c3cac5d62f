#pragma once

#include <vector>

#include "ising/estimate.hpp"
#include "ising/model.hpp"

namespace ising {

// Probability that a chord bit is 1 under the cotree proposal: tanh J / (1 + tanh J).
// Throws Error{non_ferromagnetic_dual} for J < 0.
double dual_flip_probability(double coupling);

// One draw of ytilde over chord positions. Throws Error{non_ferromagnetic_dual}.
BitVector draw_chord_assignment(const IsingModel& model, const TreePartition& partition, CounterStream& stream);

// Branch bits over branch positions: parity of the chord bits in each
// fundamental cutset.
BitVector branch_bits(const TreePartition& partition, const BitVector& chord_bits);

// Full dual assignment over edge ids.
Assignment complete_branches(const TreePartition& partition, const BitVector& chord_bits);

// Log importance weight of a chord assignment: the sum of ln tanh J over the
// branches it switches on (-inf when such a branch has J = 0).
class DualWeight {
 public:
  DualWeight(const IsingModel& model, const TreePartition& partition);
  double operator()(const BitVector& chord_bits) const;

 private:
  const TreePartition* partition_;
  std::vector<double> branch_log_factor_;
};

// Importance-sampling estimate of ln Z in the dual domain: proposal on the
// chords, weights tanh(J)^ytilde on the branches.
// Throws Error{non_ferromagnetic_dual | invalid_argument}.
EstimateReport estimate_dual(const IsingModel& model, const TreePartition& partition, const EstimateOptions& options);

}  // namespace ising
