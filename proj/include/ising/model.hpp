#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "ising/graph.hpp"

namespace ising {

// Natural logarithm of a non-negative weight; weight 0 is -infinity.
class LogWeight {
 public:
  constexpr LogWeight() = default;
  constexpr explicit LogWeight(double value) : value_(value) {}

  static constexpr LogWeight zero() { return LogWeight(-std::numeric_limits<double>::infinity()); }
  static constexpr LogWeight one() { return LogWeight(0.0); }

  constexpr double value() const noexcept { return value_; }
  bool is_zero() const noexcept { return std::isinf(value_) && value_ < 0; }
  double linear() const { return std::exp(value_); }

  // Product of weights.
  friend constexpr LogWeight operator+(LogWeight a, LogWeight b) { return LogWeight(a.value_ + b.value_); }
  friend constexpr auto operator<=>(LogWeight, LogWeight) = default;

 private:
  double value_ = 0.0;
};

// A connected graph with one finite real coupling per edge. Couplings absorb
// the inverse temperature; J > 0 is ferromagnetic.
class IsingModel {
 public:
  // Throws Error{non_finite_coupling | invalid_argument}.
  IsingModel(Graph graph, std::vector<double> couplings);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const double> couplings() const noexcept { return couplings_; }
  double coupling(EdgeId e) const { return couplings_.at(e); }
  // All couplings >= 0.
  bool is_ferromagnetic() const noexcept;

 private:
  Graph graph_;
  std::vector<double> couplings_;
};

// Edge factor as a function of y = x_u XOR x_v: exp(J) if y = 0, exp(-J) if y = 1.
LogWeight factor_primal(double coupling, bool y);
// exp(-2 J y), the primal factor with exp(J) pulled out.
LogWeight factor_primal_reduced(double coupling, bool y);
// Two-point DFT of the primal factor: 2 cosh J if ytilde = 0, 2 sinh J if ytilde = 1.
// Throws Error{non_ferromagnetic_dual} for J < 0 with ytilde = 1.
LogWeight factor_dual(double coupling, bool ytilde);
// tanh(J)^ytilde. Throws Error{non_ferromagnetic_dual} for J < 0.
LogWeight factor_dual_reduced(double coupling, bool ytilde);

// ln(2A) with A = exp(sum J), so that ln Z = ln(2A) + ln Z'_M.
double log_prefactor_primal(const IsingModel& model);
// ln B - (|E| - |V|) ln 2 with B = prod 2 cosh J, so that ln Z = this + ln Z'_d.
double log_prefactor_dual(const IsingModel& model, const TreePartition& partition);
// (|E| - |V|) ln 2, the log of the primal/dual scale Z_d / Z.
double log_duality_scale(const Graph& graph);

// sum over branches of ln(1 + exp(-2 J)).
double log_proposal_normalizer_primal(const IsingModel& model, const TreePartition& partition);
// sum over chords of ln(1 + tanh J). Throws Error{non_ferromagnetic_dual}.
double log_proposal_normalizer_dual(const IsingModel& model, const TreePartition& partition);

// Numerically stable scalar helpers shared by the samplers.
double log_two_cosh(double x);
double log_two_sinh(double x);  // x > 0
double log_tanh(double x);      // x >= 0; -inf at 0
double log1p_exp(double x);     // ln(1 + e^x)

// Throws Error{invalid_argument} unless model and partition share the same graph.
void require_same_graph(const IsingModel& model, const TreePartition& partition);

}  // namespace ising
