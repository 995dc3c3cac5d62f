#include "ising/primal_sampler.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "ising/error.hpp"

namespace ising {

double primal_flip_probability(double coupling) { return 1.0 / (1.0 + std::exp(2 * coupling)); }

namespace {

BitVector draw_bits(std::span<const double> p_one, CounterStream& stream) {
  BitVector bits(p_one.size());
  for (std::size_t i = 0; i < p_one.size(); ++i) {
    if (stream.bernoulli(p_one[i])) bits.set(i);
  }
  return bits;
}

std::vector<double> branch_flip_probabilities(const IsingModel& model, const TreePartition& partition) {
  std::vector<double> p;
  p.reserve(partition.branch_count());
  for (EdgeId b : partition.branch_ids()) p.push_back(primal_flip_probability(model.coupling(b)));
  return p;
}

}  // namespace

BitVector draw_branch_assignment(const IsingModel& model, const TreePartition& partition, CounterStream& stream) {
  require_same_graph(model, partition);
  return draw_bits(branch_flip_probabilities(model, partition), stream);
}

BitVector chord_bits(const TreePartition& partition, const BitVector& branch_bits) {
  BitVector out(partition.chord_count());
  for (std::size_t j = 0; j < partition.chord_count(); ++j) {
    if (partition.cycle_column(j).dot(branch_bits)) out.set(j);
  }
  return out;
}

Assignment complete_chords(const TreePartition& partition, const BitVector& branch_bits) {
  if (branch_bits.size() != partition.branch_count()) {
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(partition.branch_count()) + " branch bits");
  }
  Assignment full{BitVector(partition.graph().edge_count()), Domain::primal};
  for (std::size_t i : branch_bits.indices()) full.bits.set(partition.branch_ids()[i]);
  for (std::size_t j : chord_bits(partition, branch_bits).indices()) full.bits.set(partition.chord_ids()[j]);
  return full;
}

std::vector<std::uint8_t> lift_to_spins(const TreePartition& partition, const Assignment& assignment, bool anchor) {
  const Graph& g = partition.graph();
  if (assignment.bits.size() != g.edge_count()) {
    throw Error(ErrorCode::invalid_argument, "assignment must cover every edge");
  }
  std::vector<std::uint8_t> spins(g.vertex_count(), 0);
  spins[partition.root()] = anchor;
  for (VertexId v : partition.traversal_order()) {
    if (v == partition.root()) continue;
    spins[v] = spins[partition.parent_vertices()[v]] ^ assignment.bits.test(partition.parent_edges()[v]);
  }
  for (EdgeId c : partition.chord_ids()) {
    const Edge& e = g.edge(c);
    if ((spins[e.u] ^ spins[e.v]) != assignment.bits.test(c)) {
      throw Error(ErrorCode::inconsistent_assignment, "cycle parity violated at chord " + std::to_string(c));
    }
  }
  return spins;
}

PrimalWeight::PrimalWeight(const IsingModel& model, const TreePartition& partition) : partition_(&partition) {
  require_same_graph(model, partition);
  chord_log_factor_.reserve(partition.chord_count());
  for (EdgeId c : partition.chord_ids()) chord_log_factor_.push_back(factor_primal_reduced(model.coupling(c), true).value());
}

double PrimalWeight::operator()(const BitVector& branch_bits) const {
  double log_w = 0;
  for (std::size_t j = 0; j < chord_log_factor_.size(); ++j) {
    if (partition_->cycle_column(j).dot(branch_bits)) log_w += chord_log_factor_[j];
  }
  return log_w;
}

EstimateReport estimate_primal(const IsingModel& model, const TreePartition& partition, const EstimateOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  require_same_graph(model, partition);

  const auto p_one = branch_flip_probabilities(model, partition);
  const PrimalWeight log_weight(model, partition);
  const auto acc = accumulate_log_weights(options, [&](CounterStream& stream) { return log_weight(draw_bits(p_one, stream)); });

  EstimateReport report;
  report.log_reduced_estimate = log_proposal_normalizer_primal(model, partition) + acc.log_mean();
  report.log_estimate = log_prefactor_primal(model) + report.log_reduced_estimate;
  report.std_error_log = acc.std_error_log();
  report.empirical_chi_square = acc.relative_variance();
  report.sample_count = acc.count();
  report.seed = options.seed;
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ising
