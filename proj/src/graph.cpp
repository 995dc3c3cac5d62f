#include "ising/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "ising/error.hpp"

namespace ising {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

std::string edge_text(EdgeId id, const Edge& e) {
  return "edge " + std::to_string(id) + " (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    adjacency_[edges_[id].u].push_back(id);
    adjacency_[edges_[id].v].push_back(id);
  }
}

Graph Graph::build(std::size_t vertex_count, std::span<const std::pair<VertexId, VertexId>> endpoints) {
  std::vector<Edge> edges;
  edges.reserve(endpoints.size());
  for (const auto& [u, v] : endpoints) edges.push_back({u, v});
  return build(vertex_count, std::span<const Edge>(edges));
}

Graph Graph::build(std::size_t vertex_count, std::span<const Edge> edges) {
  if (vertex_count == 0) throw Error(ErrorCode::invalid_argument, "vertex_count must be positive");
  if (vertex_count > 1 && edges.empty()) {
    throw Error(ErrorCode::empty_edge_list, std::to_string(vertex_count) + " vertices but no edges");
  }
  DisjointSets components(vertex_count);
  std::size_t component_count = vertex_count;
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge& e = edges[id];
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw Error(ErrorCode::invalid_argument, edge_text(id, e) + " references a vertex >= " + std::to_string(vertex_count));
    }
    if (e.u == e.v) throw Error(ErrorCode::self_loop, edge_text(id, e));
    if (components.unite(e.u, e.v)) --component_count;
  }
  if (component_count > 1) {
    throw Error(ErrorCode::disconnected_graph, std::to_string(component_count) + " components");
  }
  return Graph(vertex_count, std::vector<Edge>(edges.begin(), edges.end()));
}

TreePartition::TreePartition(Graph graph, std::vector<EdgeId> branch_ids)
    : graph_(std::move(graph)), branches_(std::move(branch_ids)) {
  const std::size_t n = graph_.vertex_count();
  const std::size_t m = graph_.edge_count();
  std::sort(branches_.begin(), branches_.end());
  if (branches_.size() + 1 != n) {
    throw Error(ErrorCode::invalid_argument, "a spanning tree needs exactly |V|-1 branches");
  }

  branch_pos_.assign(m, npos);
  chord_pos_.assign(m, npos);
  DisjointSets forest(n);
  for (std::size_t i = 0; i < branches_.size(); ++i) {
    const EdgeId e = branches_[i];
    if (e >= m) throw Error(ErrorCode::invalid_argument, "branch id out of range");
    if (branch_pos_[e] != npos) throw Error(ErrorCode::invalid_argument, "duplicate branch id");
    if (!forest.unite(graph_.edge(e).u, graph_.edge(e).v)) {
      throw Error(ErrorCode::invalid_argument, "branch set contains a cycle");
    }
    branch_pos_[e] = i;
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (branch_pos_[e] == npos) {
      chord_pos_[e] = chords_.size();
      chords_.push_back(e);
    }
  }

  // Root the tree at vertex 0 and record, per vertex, the branches on its root path.
  parent_edge_.assign(n, npos);
  parent_vertex_.assign(n, npos);
  std::vector<BitVector> root_path(n, BitVector(branches_.size()));
  std::vector<bool> seen(n, false);
  std::queue<VertexId> frontier;
  frontier.push(root());
  seen[root()] = true;
  while (!frontier.empty()) {
    const VertexId v = frontier.front();
    frontier.pop();
    order_.push_back(v);
    for (EdgeId e : graph_.incident(v)) {
      if (branch_pos_[e] == npos) continue;
      const Edge& edge = graph_.edge(e);
      const VertexId w = edge.u == v ? edge.v : edge.u;
      if (seen[w]) continue;
      seen[w] = true;
      parent_edge_[w] = e;
      parent_vertex_[w] = v;
      root_path[w] = root_path[v];
      root_path[w].flip(branch_pos_[e]);
      frontier.push(w);
    }
  }

  columns_.reserve(chords_.size());
  for (EdgeId c : chords_) {
    const Edge& edge = graph_.edge(c);
    columns_.push_back(root_path[edge.u] ^ root_path[edge.v]);
  }
  rows_.assign(branches_.size(), BitVector(chords_.size()));
  for (std::size_t j = 0; j < columns_.size(); ++j) {
    for (std::size_t i : columns_[j].indices()) rows_[i].set(j);
  }
}

TreePartition maximum_spanning_tree(const Graph& graph, std::span<const double> weights) {
  if (weights.size() != graph.edge_count()) {
    throw Error(ErrorCode::invalid_argument, "expected one weight per edge");
  }
  for (double w : weights) {
    if (!std::isfinite(w)) throw Error(ErrorCode::invalid_argument, "tree weights must be finite");
  }
  std::vector<EdgeId> order(graph.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) { return weights[a] > weights[b]; });

  DisjointSets forest(graph.vertex_count());
  std::vector<EdgeId> branches;
  branches.reserve(graph.vertex_count() - 1);
  for (EdgeId e : order) {
    if (forest.unite(graph.edge(e).u, graph.edge(e).v)) {
      branches.push_back(e);
      if (branches.size() + 1 == graph.vertex_count()) break;
    }
  }
  return TreePartition(graph, std::move(branches));
}

EdgeSet fundamental_cycle(const TreePartition& partition, EdgeId chord) {
  if (chord >= partition.graph().edge_count() || !partition.is_chord(chord)) {
    throw Error(ErrorCode::not_a_chord, "edge " + std::to_string(chord));
  }
  EdgeSet cycle(partition.graph().edge_count());
  cycle.set(chord);
  for (std::size_t i : partition.cycle_column(partition.chord_position(chord)).indices()) {
    cycle.set(partition.branch_ids()[i]);
  }
  return cycle;
}

EdgeSet fundamental_cutset(const TreePartition& partition, EdgeId branch) {
  if (branch >= partition.graph().edge_count() || !partition.is_branch(branch)) {
    throw Error(ErrorCode::not_a_branch, "edge " + std::to_string(branch));
  }
  EdgeSet cutset(partition.graph().edge_count());
  cutset.set(branch);
  for (std::size_t j : partition.cutset_row(partition.branch_position(branch)).indices()) {
    cutset.set(partition.chord_ids()[j]);
  }
  return cutset;
}

}  // namespace ising
