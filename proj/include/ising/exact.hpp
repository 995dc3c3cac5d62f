#pragma once

#include <cstddef>

#include "ising/graph.hpp"
#include "ising/model.hpp"

namespace ising {

inline constexpr std::size_t kMaxSpinEnumeration = 26;
inline constexpr std::size_t kMaxBranchEnumeration = 26;  // |T| <= 26, i.e. |V| <= 27
inline constexpr std::size_t kMaxChordEnumeration = 26;

// Exhaustive references. Every enumeration uses plain binary counting with a
// full weight recompute per configuration and a streaming log-sum-exp. Work is
// split into a fixed number of contiguous ranges, so the result is the same
// for every `threads` value.

// ln Z by summing over all 2^|V| spin configurations. Throws Error{too_large}.
double brute_force_log_Z(const IsingModel& model, unsigned threads = 1);

// ln Z_M: sum over all 2^|T| branch assignments, chords completed along
// their tree paths (cycle parity), unreduced edge factors. Throws Error{too_large}.
double brute_force_log_ZM(const IsingModel& model, const TreePartition& partition, unsigned threads = 1);

// ln Z_d: sum over all 2^|T-bar| chord assignments, branches completed as the
// sum of the chosen chords' fundamental cycles (cutset parity), DFT factors.
// Throws Error{too_large | non_ferromagnetic_dual}.
double brute_force_log_Zd(const IsingModel& model, const TreePartition& partition, unsigned threads = 1);

// ln(prod 2 cosh J + prod 2 sinh J) on a graph that is a single cycle through
// every vertex. Valid for couplings of any sign. Throws Error{not_a_cycle_graph}.
double closed_form_periodic_chain_log_Z(const IsingModel& model);

}  // namespace ising
