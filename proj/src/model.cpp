#include "ising/model.hpp"

#include <algorithm>
#include <numbers>
#include <string>

#include "ising/error.hpp"

namespace ising {

namespace {

constexpr double kLn2 = std::numbers::ln2;

// ln(1 - e^{-a}) for a > 0.
double log1m_exp_neg(double a) {
  return a < kLn2 ? std::log(-std::expm1(-a)) : std::log1p(-std::exp(-a));
}

void require_ferromagnetic(double coupling) {
  if (coupling < 0) {
    throw Error(ErrorCode::non_ferromagnetic_dual, "coupling " + std::to_string(coupling) + " < 0 in the dual domain");
  }
}

}  // namespace

IsingModel::IsingModel(Graph graph, std::vector<double> couplings)
    : graph_(std::move(graph)), couplings_(std::move(couplings)) {
  if (couplings_.size() != graph_.edge_count()) {
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(graph_.edge_count()) + " couplings, got " +
                                                 std::to_string(couplings_.size()));
  }
  for (std::size_t e = 0; e < couplings_.size(); ++e) {
    if (!std::isfinite(couplings_[e])) {
      throw Error(ErrorCode::non_finite_coupling, "edge " + std::to_string(e));
    }
  }
}

bool IsingModel::is_ferromagnetic() const noexcept {
  return std::all_of(couplings_.begin(), couplings_.end(), [](double j) { return j >= 0; });
}

double log_two_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2 * a));
}

double log_two_sinh(double x) { return x + log1m_exp_neg(2 * x); }

double log_tanh(double x) {
  if (x == 0) return -std::numeric_limits<double>::infinity();
  return log1m_exp_neg(2 * x) - std::log1p(std::exp(-2 * x));
}

double log1p_exp(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

LogWeight factor_primal(double coupling, bool y) { return LogWeight(y ? -coupling : coupling); }

LogWeight factor_primal_reduced(double coupling, bool y) { return y ? LogWeight(-2 * coupling) : LogWeight::one(); }

LogWeight factor_dual(double coupling, bool ytilde) {
  if (!ytilde) return LogWeight(log_two_cosh(coupling));
  require_ferromagnetic(coupling);
  if (coupling == 0) return LogWeight::zero();
  return LogWeight(log_two_sinh(coupling));
}

LogWeight factor_dual_reduced(double coupling, bool ytilde) {
  require_ferromagnetic(coupling);
  return ytilde ? LogWeight(log_tanh(coupling)) : LogWeight::one();
}

double log_prefactor_primal(const IsingModel& model) {
  double sum = 0;
  for (double j : model.couplings()) sum += j;
  return kLn2 + sum;
}

double log_duality_scale(const Graph& graph) {
  return (static_cast<double>(graph.edge_count()) - static_cast<double>(graph.vertex_count())) * kLn2;
}

double log_prefactor_dual(const IsingModel& model, const TreePartition& partition) {
  require_same_graph(model, partition);
  double log_b = 0;
  for (double j : model.couplings()) {
    require_ferromagnetic(j);
    log_b += log_two_cosh(j);
  }
  return log_b - log_duality_scale(model.graph());
}

double log_proposal_normalizer_primal(const IsingModel& model, const TreePartition& partition) {
  require_same_graph(model, partition);
  double sum = 0;
  for (EdgeId b : partition.branch_ids()) sum += log1p_exp(-2 * model.coupling(b));
  return sum;
}

double log_proposal_normalizer_dual(const IsingModel& model, const TreePartition& partition) {
  require_same_graph(model, partition);
  double sum = 0;
  for (EdgeId c : partition.chord_ids()) {
    require_ferromagnetic(model.coupling(c));
    sum += std::log1p(std::tanh(model.coupling(c)));
  }
  return sum;
}

void require_same_graph(const IsingModel& model, const TreePartition& partition) {
  if (!(model.graph() == partition.graph())) {
    throw Error(ErrorCode::invalid_argument, "model and tree partition are built on different graphs");
  }
}

}  // namespace ising
