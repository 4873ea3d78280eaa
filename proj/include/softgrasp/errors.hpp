#pragma once

#include <stdexcept>
#include <string>

namespace softgrasp {

enum class ErrorCode {
  invalid_field,
  unknown_field,
  missing_field,
  malformed_row,
  missing_column,
  non_monotone_time,
  non_monotone_displacement,
  segmentation_failure,
  fit_failure,
  invalid_normal_force,
  zero_displacement,
  incomplete_probe_group,
  negative_stiffness,
  duplicate_key,
  non_rectangular_grid,
  out_of_hull,
  precondition,
  io_error,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_field: return "invalid-field";
    case ErrorCode::unknown_field: return "unknown-field";
    case ErrorCode::missing_field: return "missing-field";
    case ErrorCode::malformed_row: return "malformed-row";
    case ErrorCode::missing_column: return "missing-column";
    case ErrorCode::non_monotone_time: return "non-monotone-time";
    case ErrorCode::non_monotone_displacement: return "non-monotone-displacement";
    case ErrorCode::segmentation_failure: return "segmentation-failure";
    case ErrorCode::fit_failure: return "fit-failure";
    case ErrorCode::invalid_normal_force: return "invalid-normal-force";
    case ErrorCode::zero_displacement: return "zero-displacement";
    case ErrorCode::incomplete_probe_group: return "incomplete-probe-group";
    case ErrorCode::negative_stiffness: return "negative-stiffness";
    case ErrorCode::duplicate_key: return "duplicate-key";
    case ErrorCode::non_rectangular_grid: return "non-rectangular-grid";
    case ErrorCode::out_of_hull: return "out-of-hull";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

/// Library-wide exception. code() lets callers branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace softgrasp
