#include "ising/exact.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "ising/error.hpp"
#include "ising/log_sum_exp.hpp"
#include "ising/parallel.hpp"

namespace ising {

namespace {

using Mask = std::uint32_t;

constexpr std::size_t kChunkBits = 6;

void require_at_most(std::size_t n, std::size_t limit, const char* what) {
  if (n > limit) {
    throw Error(ErrorCode::too_large, std::string(what) + " = " + std::to_string(n) + " exceeds " + std::to_string(limit));
  }
}

// Streams f(mask) for every mask in [0, 2^bits) into a log-sum-exp.
template <typename LogTerm>
double enumerate(std::size_t bits, unsigned threads, LogTerm&& log_term) {
  const std::size_t chunk_bits = std::min(bits, kChunkBits);
  const std::size_t chunks = std::size_t{1} << chunk_bits;
  const std::uint64_t per_chunk = std::uint64_t{1} << (bits - chunk_bits);
  std::vector<LogSumExp> partial(chunks);
  for_each_chunk(chunks, threads, [&](std::size_t c) {
    LogSumExp acc;
    const std::uint64_t begin = c * per_chunk;
    for (std::uint64_t m = begin; m < begin + per_chunk; ++m) acc.add(log_term(static_cast<Mask>(m)));
    partial[c] = acc;
  });
  LogSumExp total;
  for (const auto& p : partial) total.merge(p);
  return total.value();
}

bool parity(Mask m) { return std::popcount(m) & 1; }

// Branch positions on the tree path between the endpoints of each chord,
// found by walking parent pointers.
std::vector<Mask> chord_path_masks(const TreePartition& partition) {
  const Graph& g = partition.graph();
  std::vector<std::size_t> depth(g.vertex_count(), 0);
  for (VertexId v : partition.traversal_order()) {
    if (v != partition.root()) depth[v] = depth[partition.parent_vertices()[v]] + 1;
  }
  std::vector<Mask> masks;
  masks.reserve(partition.chord_count());
  for (EdgeId c : partition.chord_ids()) {
    VertexId a = g.edge(c).u;
    VertexId b = g.edge(c).v;
    Mask mask = 0;
    auto step_up = [&](VertexId& v) {
      mask ^= Mask{1} << partition.branch_position(partition.parent_edges()[v]);
      v = partition.parent_vertices()[v];
    };
    while (depth[a] > depth[b]) step_up(a);
    while (depth[b] > depth[a]) step_up(b);
    while (a != b) {
      step_up(a);
      step_up(b);
    }
    masks.push_back(mask);
  }
  return masks;
}

}  // namespace

double brute_force_log_Z(const IsingModel& model, unsigned threads) {
  const Graph& g = model.graph();
  require_at_most(g.vertex_count(), kMaxSpinEnumeration, "|V|");
  const auto edges = g.edges();
  const auto couplings = model.couplings();
  return enumerate(g.vertex_count(), threads, [&](Mask x) {
    double log_f = 0;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const bool equal = ((x >> edges[e].u) & 1u) == ((x >> edges[e].v) & 1u);
      log_f += equal ? couplings[e] : -couplings[e];
    }
    return log_f;
  });
}

double brute_force_log_ZM(const IsingModel& model, const TreePartition& partition, unsigned threads) {
  require_same_graph(model, partition);
  require_at_most(partition.branch_count(), kMaxBranchEnumeration, "|T|");
  const auto paths = chord_path_masks(partition);
  const auto branches = partition.branch_ids();
  const auto chords = partition.chord_ids();
  return enumerate(partition.branch_count(), threads, [&](Mask y_tree) {
    double log_upsilon = 0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      log_upsilon += factor_primal(model.coupling(branches[i]), (y_tree >> i) & 1u).value();
    }
    for (std::size_t j = 0; j < chords.size(); ++j) {
      log_upsilon += factor_primal(model.coupling(chords[j]), parity(paths[j] & y_tree)).value();
    }
    return log_upsilon;
  });
}

double brute_force_log_Zd(const IsingModel& model, const TreePartition& partition, unsigned threads) {
  require_same_graph(model, partition);
  require_at_most(partition.chord_count(), kMaxChordEnumeration, "|T-bar|");
  for (double j : model.couplings()) {
    if (j < 0) throw Error(ErrorCode::non_ferromagnetic_dual, "negative coupling " + std::to_string(j));
  }
  const auto branches = partition.branch_ids();
  const auto chords = partition.chord_ids();
  // For each branch: the chords whose cycle passes through it.
  const auto paths = chord_path_masks(partition);
  std::vector<Mask> through(branches.size(), 0);
  for (std::size_t j = 0; j < paths.size(); ++j) {
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if ((paths[j] >> i) & 1u) through[i] |= Mask{1} << j;
    }
  }
  auto log_gamma = [&](EdgeId e, bool ytilde) { return factor_dual(model.coupling(e), ytilde).value(); };
  return enumerate(partition.chord_count(), threads, [&](Mask y_cotree) {
    double log_g = 0;
    for (std::size_t j = 0; j < chords.size(); ++j) log_g += log_gamma(chords[j], (y_cotree >> j) & 1u);
    for (std::size_t i = 0; i < branches.size(); ++i) log_g += log_gamma(branches[i], parity(through[i] & y_cotree));
    return log_g;
  });
}

double closed_form_periodic_chain_log_Z(const IsingModel& model) {
  const Graph& g = model.graph();
  bool is_cycle = g.edge_count() == g.vertex_count() && g.vertex_count() >= 2;
  for (VertexId v = 0; is_cycle && v < g.vertex_count(); ++v) is_cycle = g.incident(v).size() == 2;
  if (!is_cycle) throw Error(ErrorCode::not_a_cycle_graph, "every vertex must have degree 2 and |E| = |V|");

  double log_cosh_product = 0;
  double log_abs_sinh_product = 0;
  bool negative = false;
  bool sinh_vanishes = false;
  for (double j : model.couplings()) {
    log_cosh_product += log_two_cosh(j);
    if (j == 0) {
      sinh_vanishes = true;
    } else {
      log_abs_sinh_product += log_two_sinh(std::abs(j));
      negative ^= j < 0;
    }
  }
  if (sinh_vanishes) return log_cosh_product;
  // |prod sinh| < prod cosh, so the sum stays positive.
  const double ratio = std::exp(log_abs_sinh_product - log_cosh_product);
  return log_cosh_product + std::log1p(negative ? -ratio : ratio);
}

}  // namespace ising
