#include "ising/dual_sampler.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "ising/error.hpp"

namespace ising {

double dual_flip_probability(double coupling) {
  if (coupling < 0) throw Error(ErrorCode::non_ferromagnetic_dual, "coupling " + std::to_string(coupling) + " < 0");
  const double t = std::tanh(coupling);
  return t / (1.0 + t);
}

namespace {

std::vector<double> chord_flip_probabilities(const IsingModel& model, const TreePartition& partition) {
  std::vector<double> p;
  p.reserve(partition.chord_count());
  for (EdgeId c : partition.chord_ids()) p.push_back(dual_flip_probability(model.coupling(c)));
  return p;
}

BitVector draw_bits(std::span<const double> p_one, CounterStream& stream) {
  BitVector bits(p_one.size());
  for (std::size_t j = 0; j < p_one.size(); ++j) {
    if (stream.bernoulli(p_one[j])) bits.set(j);
  }
  return bits;
}

}  // namespace

BitVector draw_chord_assignment(const IsingModel& model, const TreePartition& partition, CounterStream& stream) {
  require_same_graph(model, partition);
  return draw_bits(chord_flip_probabilities(model, partition), stream);
}

BitVector branch_bits(const TreePartition& partition, const BitVector& chord_bits) {
  BitVector out(partition.branch_count());
  for (std::size_t i = 0; i < partition.branch_count(); ++i) {
    if (partition.cutset_row(i).dot(chord_bits)) out.set(i);
  }
  return out;
}

Assignment complete_branches(const TreePartition& partition, const BitVector& chord_bits) {
  if (chord_bits.size() != partition.chord_count()) {
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(partition.chord_count()) + " chord bits");
  }
  Assignment full{BitVector(partition.graph().edge_count()), Domain::dual};
  for (std::size_t j : chord_bits.indices()) full.bits.set(partition.chord_ids()[j]);
  for (std::size_t i : branch_bits(partition, chord_bits).indices()) full.bits.set(partition.branch_ids()[i]);
  return full;
}

DualWeight::DualWeight(const IsingModel& model, const TreePartition& partition) : partition_(&partition) {
  require_same_graph(model, partition);
  branch_log_factor_.reserve(partition.branch_count());
  for (EdgeId b : partition.branch_ids()) branch_log_factor_.push_back(factor_dual_reduced(model.coupling(b), true).value());
}

double DualWeight::operator()(const BitVector& chord_bits) const {
  double log_w = 0;
  for (std::size_t i = 0; i < branch_log_factor_.size(); ++i) {
    if (partition_->cutset_row(i).dot(chord_bits)) log_w += branch_log_factor_[i];
  }
  return log_w;
}

EstimateReport estimate_dual(const IsingModel& model, const TreePartition& partition, const EstimateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_same_graph(model, partition);

  const double log_prefactor = log_prefactor_dual(model, partition);
  const double log_normalizer = log_proposal_normalizer_dual(model, partition);
  const auto p_one = chord_flip_probabilities(model, partition);
  const DualWeight log_weight(model, partition);
  const auto acc = accumulate_log_weights(options, [&](CounterStream& stream) { return log_weight(draw_bits(p_one, stream)); });

  EstimateReport report;
  report.log_reduced_estimate = log_normalizer + acc.log_mean();
  report.log_estimate = log_prefactor + report.log_reduced_estimate;
  report.std_error_log = acc.std_error_log();
  report.empirical_chi_square = acc.relative_variance();
  report.sample_count = acc.count();
  report.seed = options.seed;
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ising
