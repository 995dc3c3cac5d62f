#pragma once

#include <cstdint>
#include <functional>

#include "ising/bitvector.hpp"
#include "ising/graph.hpp"
#include "ising/log_sum_exp.hpp"
#include "ising/rng.hpp"

namespace ising {

enum class Domain { primal, dual };

// Binary configuration over all edge ids: y in the primal domain, ytilde in
// the dual domain.
struct Assignment {
  BitVector bits;
  Domain domain = Domain::primal;
};

// XOR of the assignment over every fundamental cycle is zero.
bool satisfies_cycle_parity(const TreePartition& partition, const BitVector& bits);
// XOR of the assignment over every fundamental cutset is zero.
bool satisfies_cutset_parity(const TreePartition& partition, const BitVector& bits);

inline constexpr std::uint64_t kDefaultSeed = 20170419;

struct EstimateOptions {
  std::uint64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
};

struct EstimateReport {
  double log_estimate = 0;          // ln Z_hat
  double log_reduced_estimate = 0;  // ln Z'_M_hat or ln Z'_d_hat
  double std_error_log = 0;         // delta-method standard error of ln Z_hat
  double empirical_chi_square = 0;  // L Var[Z'_hat] / Z'_hat^2
  std::uint64_t sample_count = 0;
  std::uint64_t seed = 0;
  double wall_time_seconds = 0;
};

// Samples per scheduling block. Blocks are accumulated sequentially and merged
// in block order, so the result does not depend on the thread count.
inline constexpr std::uint64_t kSampleBlock = 4096;

// Draws options.samples log-weights, sample l from CounterStream(seed, l).
// Throws Error{invalid_argument} when samples == 0.
WeightAccumulator accumulate_log_weights(const EstimateOptions& options,
                                         const std::function<double(CounterStream&)>& log_weight);

}  // namespace ising
