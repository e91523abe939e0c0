#pragma once

#include <stdexcept>
#include <string>

namespace movingload {

/// Broad class of a failure; the CLI maps it onto its exit code.
enum class ErrorCategory {
  config,         // bad user input
  numerical_gate  // a numerical validity check tripped
};

/// Base of every error raised by the library. `name()` is the stable,
/// machine-readable identifier (e.g. "SubsonicViolation").
class Error : public std::runtime_error {
 public:
  Error(std::string name, ErrorCategory category, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)), category_(category) {}

  const std::string& name() const noexcept { return name_; }
  ErrorCategory category() const noexcept { return category_; }

 private:
  std::string name_;
  ErrorCategory category_;
};

#define MOVINGLOAD_DEFINE_ERROR(Type, category)                      \
  class Type : public Error {                                        \
   public:                                                           \
    explicit Type(const std::string& what)                           \
        : Error(#Type, ErrorCategory::category, what) {}             \
  }

MOVINGLOAD_DEFINE_ERROR(ConfigError, config);
MOVINGLOAD_DEFINE_ERROR(SubsonicViolation, config);
MOVINGLOAD_DEFINE_ERROR(OscillationRegimeError, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(PoleError, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(DomainError, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(SingularMatrixError, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(DegenerateDeterminant, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(ExpansionRangeError, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(SingularPointError, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(RealnessViolation, numerical_gate);
MOVINGLOAD_DEFINE_ERROR(ExponentIdentityError, numerical_gate);

#undef MOVINGLOAD_DEFINE_ERROR

}  // namespace movingload
