#include "ising/topology.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "ising/error.hpp"
#include "ising/rng.hpp"

namespace ising {

Graph periodic_chain(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::too_small, "periodic chain needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::build(n, edges);
}

Graph lattice_2d(std::size_t rows, std::size_t cols, bool periodic) {
  const std::size_t min_side = periodic ? 3 : 2;
  if (rows < min_side || cols < min_side) {
    throw Error(ErrorCode::too_small, std::string(periodic ? "periodic" : "open") + " lattice needs rows, cols >= " +
                                          std::to_string(min_side));
  }
  auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (periodic || c + 1 < cols) edges.push_back({id(r, c), id(r, (c + 1) % cols)});
      if (periodic || r + 1 < rows) edges.push_back({id(r, c), id((r + 1) % rows, c)});
    }
  }
  return Graph::build(rows * cols, edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::too_small, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::build(n, edges);
}

std::vector<double> couplings_constant(const Graph& graph, double coupling) {
  if (!std::isfinite(coupling)) throw Error(ErrorCode::non_finite_coupling, "constant coupling");
  return std::vector<double>(graph.edge_count(), coupling);
}

std::vector<double> couplings_uniform(const Graph& graph, double lo, double hi, std::uint64_t seed) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw Error(ErrorCode::invalid_argument, "uniform couplings need finite lo <= hi");
  }
  std::vector<double> out;
  out.reserve(graph.edge_count());
  for (EdgeId e = 0; e < graph.edge_count(); ++e) {
    CounterStream stream(seed, e);
    out.push_back(lo == hi ? lo : lo + (hi - lo) * stream.uniform());
  }
  return out;
}

namespace {

[[noreturn]] void malformed(std::size_t line, const std::string& why) {
  throw Error(ErrorCode::malformed_line, "line " + std::to_string(line) + ": " + why);
}

template <typename T>
bool parse_token(std::string_view token, T& value) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t begin = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > begin) tokens.push_back(s.substr(begin, i - begin));
  }
  return tokens;
}

}  // namespace

IsingModel parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<double> couplings;
  std::size_t vertex_count = 0;
  std::size_t line_number = 0;
  while (!text.empty()) {
    ++line_number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    const auto tokens = split_whitespace(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) malformed(line_number, "expected \"u v J\", got " + std::to_string(tokens.size()) + " fields");
    std::size_t u = 0;
    std::size_t v = 0;
    double j = 0;
    if (!parse_token(tokens[0], u) || !parse_token(tokens[1], v)) {
      malformed(line_number, "vertex ids must be non-negative integers");
    }
    // from_chars accepts "inf" and "nan"; report those separately from garbage.
    if (!parse_token(tokens[2], j)) malformed(line_number, "coupling is not a number");
    if (!std::isfinite(j)) throw Error(ErrorCode::non_finite_coupling, "line " + std::to_string(line_number));
    edges.push_back({u, v});
    couplings.push_back(j);
    vertex_count = std::max({vertex_count, u + 1, v + 1});
  }
  if (edges.empty()) throw Error(ErrorCode::empty_edge_list, "edge list contains no edges");
  return IsingModel(Graph::build(vertex_count, edges), std::move(couplings));
}

std::string render_edge_list(const IsingModel& model) {
  std::ostringstream out;
  const Graph& g = model.graph();
  out << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges; columns: u v J\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, model.coupling(e));
    out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << std::string_view(buffer, static_cast<std::size_t>(ptr - buffer))
        << '\n';
  }
  return out.str();
}

}  // namespace ising
