#pragma once

#include <stdexcept>
#include <string>

namespace projshape {

/// Stable process exit codes, one per error class (0 = success).
enum class ErrorCode : int {
  ok = 0,
  argument = 2,
  parse = 3,
  validation = 4,
  degenerate_frame = 5,
  not_concentrated = 6,
  mean_not_unique = 7,
  singular_covariance = 8,
  bootstrap_unstable = 9,
  point_at_infinity = 10,
  insufficient_data = 11,
  undefined_mean_direction = 12,
  io = 13,
  internal = 14,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  ErrorCode code_;
};

#define PROJSHAPE_DEFINE_ERROR(NAME, CODE)                                    \
  class NAME : public Error {                                                 \
   public:                                                                    \
    explicit NAME(const std::string& what) : Error(ErrorCode::CODE, what) {}  \
  }

PROJSHAPE_DEFINE_ERROR(ArgumentError, argument);
PROJSHAPE_DEFINE_ERROR(ParseError, parse);
PROJSHAPE_DEFINE_ERROR(ValidationError, validation);
PROJSHAPE_DEFINE_ERROR(DegenerateFrame, degenerate_frame);
PROJSHAPE_DEFINE_ERROR(NotConcentrated, not_concentrated);
PROJSHAPE_DEFINE_ERROR(MeanNotUnique, mean_not_unique);
PROJSHAPE_DEFINE_ERROR(SingularCovariance, singular_covariance);
PROJSHAPE_DEFINE_ERROR(BootstrapUnstable, bootstrap_unstable);
PROJSHAPE_DEFINE_ERROR(PointAtInfinity, point_at_infinity);
PROJSHAPE_DEFINE_ERROR(InsufficientData, insufficient_data);
PROJSHAPE_DEFINE_ERROR(UndefinedMeanDirection, undefined_mean_direction);
PROJSHAPE_DEFINE_ERROR(IoError, io);
PROJSHAPE_DEFINE_ERROR(InternalError, internal);

#undef PROJSHAPE_DEFINE_ERROR

}  // namespace projshape
