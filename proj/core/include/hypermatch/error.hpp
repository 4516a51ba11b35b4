#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypermatch {

enum class ErrorCode {
  invalid_argument,
  edge_arity,
  vertex_out_of_range,
  duplicate_edge,
  parse_error,
  domain,
  infeasible_size,
  solver_failure,
  no_sign_change,
};

/// Stable machine-readable name, used in CLI error payloads.
std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hypermatch
