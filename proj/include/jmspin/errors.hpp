#pragma once

#include <stdexcept>
#include <string>

namespace jmspin {

// Error categories, each mapped to a CLI exit code by the tool.
enum class ErrorKind {
  OutOfEffectCone,
  NotUnitVector,
  InvalidState,
  NegativeRadicand,
  BiasedObservable,
  NotJointlyMeasurable,
  DistanceOutOfRange,
  InvalidArgument,
  SolverDidNotConverge,
  IoFailure,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jmspin
