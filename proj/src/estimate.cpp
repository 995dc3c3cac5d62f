#include "ising/estimate.hpp"

#include <vector>

#include "ising/error.hpp"
#include "ising/parallel.hpp"

namespace ising {

bool satisfies_cycle_parity(const TreePartition& partition, const BitVector& bits) {
  for (EdgeId c : partition.chord_ids()) {
    if (fundamental_cycle(partition, c).dot(bits)) return false;
  }
  return true;
}

bool satisfies_cutset_parity(const TreePartition& partition, const BitVector& bits) {
  for (EdgeId b : partition.branch_ids()) {
    if (fundamental_cutset(partition, b).dot(bits)) return false;
  }
  return true;
}

WeightAccumulator accumulate_log_weights(const EstimateOptions& options,
                                         const std::function<double(CounterStream&)>& log_weight) {
  if (options.samples == 0) throw Error(ErrorCode::invalid_argument, "sample count must be at least 1");
  const std::uint64_t blocks = (options.samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<WeightAccumulator> partial(blocks);
  for_each_chunk(blocks, options.threads, [&](std::size_t block) {
    const std::uint64_t begin = block * kSampleBlock;
    const std::uint64_t end = std::min(options.samples, begin + kSampleBlock);
    WeightAccumulator acc;
    for (std::uint64_t l = begin; l < end; ++l) {
      CounterStream stream(options.seed, l);
      acc.add(log_weight(stream));
    }
    partial[block] = acc;
  });
  WeightAccumulator total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace ising
