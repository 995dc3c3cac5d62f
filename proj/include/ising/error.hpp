#pragma once

#include <stdexcept>
#include <string>

namespace ising {

enum class ErrorCode {
  invalid_argument,
  disconnected_graph,
  self_loop,
  empty_edge_list,
  not_a_chord,
  not_a_branch,
  non_ferromagnetic_dual,
  too_large,
  not_a_cycle_graph,
  inconsistent_assignment,
  too_small,
  malformed_line,
  non_finite_coupling,
};

const char* to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// front ends (cli, python) can map them without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "InvalidArgument";
    case ErrorCode::disconnected_graph: return "DisconnectedGraph";
    case ErrorCode::self_loop: return "SelfLoop";
    case ErrorCode::empty_edge_list: return "EmptyEdgeList";
    case ErrorCode::not_a_chord: return "NotAChord";
    case ErrorCode::not_a_branch: return "NotABranch";
    case ErrorCode::non_ferromagnetic_dual: return "NonFerromagneticDual";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::not_a_cycle_graph: return "NotACycleGraph";
    case ErrorCode::inconsistent_assignment: return "InconsistentAssignment";
    case ErrorCode::too_small: return "TooSmall";
    case ErrorCode::malformed_line: return "MalformedLine";
    case ErrorCode::non_finite_coupling: return "NonFiniteCoupling";
  }
  return "Unknown";
}

}  // namespace ising
