#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gensmooth {

enum class ErrorCode {
  invalid_order,
  invalid_parameter,
  invalid_p,
  invalid_params,  // (p, alpha) outside the admissible table
  non_finite_sample,
  non_convergence,
  domain_error,
  near_endpoint,
  not_found,
  irls_divergence,
  exchange_stagnation,
  degenerate_report,
  empty_input,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// True for failures of a numerical procedure, as opposed to bad input.
inline bool is_numerical_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_finite_sample:
    case ErrorCode::non_convergence:
    case ErrorCode::irls_divergence:
    case ErrorCode::exchange_stagnation:
      return true;
    default:
      return false;
  }
}

}  // namespace gensmooth
