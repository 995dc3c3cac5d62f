#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ising/graph.hpp"
#include "ising/model.hpp"

namespace ising {

// Vertices are 0-based everywhere.

// Cycle on n >= 3 vertices; edge i joins i and (i + 1) mod n. Throws Error{too_small}.
Graph periodic_chain(std::size_t n);

// rows x cols grid, vertex r * cols + c. For each vertex the edge to the right
// neighbour precedes the edge to the neighbour below. Periodic grids wrap in
// both directions and need rows, cols >= 3; open grids need rows, cols >= 2.
// Throws Error{too_small}.
Graph lattice_2d(std::size_t rows, std::size_t cols, bool periodic);

// All n (n - 1) / 2 pairs in lexicographic order. Throws Error{too_small} for n < 2.
Graph complete_graph(std::size_t n);

std::vector<double> couplings_constant(const Graph& graph, double coupling);

// Independent draws from U[lo, hi], deterministic in seed.
// Throws Error{invalid_argument} for lo > hi or non-finite bounds.
std::vector<double> couplings_uniform(const Graph& graph, double lo, double hi, std::uint64_t seed);

// Edge-list text: one "u v J" line per edge, whitespace separated, '#' starts a
// comment, blank lines are ignored. Line order is edge-id order and the vertex
// count is one more than the largest id.
// Throws Error{malformed_line | non_finite_coupling | empty_edge_list} plus the
// graph construction errors.
IsingModel parse_edge_list(std::string_view text);

// Inverse of parse_edge_list; couplings are written with round-trip precision.
std::string render_edge_list(const IsingModel& model);

}  // namespace ising
