#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ising/bitvector.hpp"

namespace ising {

using VertexId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable connected multigraph. Edge ids are dense and follow input order.
// Parallel edges are allowed, self-loops are not.
class Graph {
 public:
  // Throws Error{disconnected_graph | self_loop | empty_edge_list | invalid_argument}.
  static Graph build(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> endpoints);
  static Graph build(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const Edge& edge(EdgeId id) const { return edges_.at(id); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Edge ids incident to v, in ascending order.
  std::span<const EdgeId> incident(VertexId v) const { return adjacency_.at(v); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> adjacency_;
};

// Split of the edge set into a spanning tree T (branches) and the cospanning
// tree T-bar (chords), together with the branch x chord incidence matrix:
// entry (b, c) is set iff branch b lies on the fundamental cycle of chord c,
// equivalently iff chord c lies in the fundamental cutset of branch b.
//
// Branch and chord lists are sorted by edge id; "position" refers to the index
// into these lists.
class TreePartition {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  // branch_ids must form a spanning tree of graph. Tree is rooted at vertex 0.
  TreePartition(Graph graph, std::vector<EdgeId> branch_ids);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const EdgeId> branch_ids() const noexcept { return branches_; }
  std::span<const EdgeId> chord_ids() const noexcept { return chords_; }
  std::size_t branch_count() const noexcept { return branches_.size(); }
  std::size_t chord_count() const noexcept { return chords_.size(); }

  bool is_branch(EdgeId e) const { return branch_pos_.at(e) != npos; }
  bool is_chord(EdgeId e) const { return chord_pos_.at(e) != npos; }
  std::size_t branch_position(EdgeId e) const { return branch_pos_.at(e); }
  std::size_t chord_position(EdgeId e) const { return chord_pos_.at(e); }

  VertexId root() const noexcept { return 0; }
  // Parent edge of each vertex in the rooted tree (npos for the root).
  std::span<const EdgeId> parent_edges() const noexcept { return parent_edge_; }
  std::span<const VertexId> parent_vertices() const noexcept { return parent_vertex_; }
  // Vertices in breadth-first order from the root; parents precede children.
  std::span<const VertexId> traversal_order() const noexcept { return order_; }

  // Column of the incidence matrix for the chord at position j, over branch positions.
  const BitVector& cycle_column(std::size_t chord_position) const { return columns_.at(chord_position); }
  // Row of the incidence matrix for the branch at position i, over chord positions.
  const BitVector& cutset_row(std::size_t branch_position) const { return rows_.at(branch_position); }

  bool incidence(std::size_t branch_position, std::size_t chord_position) const {
    return rows_.at(branch_position).test(chord_position);
  }

 private:
  Graph graph_;
  std::vector<EdgeId> branches_;
  std::vector<EdgeId> chords_;
  std::vector<std::size_t> branch_pos_;
  std::vector<std::size_t> chord_pos_;
  std::vector<EdgeId> parent_edge_;
  std::vector<VertexId> parent_vertex_;
  std::vector<VertexId> order_;
  std::vector<BitVector> columns_;
  std::vector<BitVector> rows_;
};

// Greedy selection in descending weight with union-find; ties go to the
// smaller edge id. Weights must be finite, one per edge.
TreePartition maximum_spanning_tree(const Graph& graph, std::span<const double> weights);

// The chord plus the tree path between its endpoints. Throws Error{not_a_chord}.
EdgeSet fundamental_cycle(const TreePartition& partition, EdgeId chord);

// The branch plus every chord whose fundamental cycle contains it.
// Throws Error{not_a_branch}.
EdgeSet fundamental_cutset(const TreePartition& partition, EdgeId branch);

}  // namespace ising
