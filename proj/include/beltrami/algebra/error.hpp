#pragma once

#include <stdexcept>
#include <string>

namespace beltrami {

enum class ErrorKind {
  MalformedExpression,
  UnboundSymbol,
  EvaluationPole,
  ExtensionMismatch,
  Usage,
  DegenerateChart,
  DegenerateForm,
  FlatChart,
  InvalidRuledParametrization,
  ParameterConstraint,
  ResidualRadical,
  Unsupported,
  Parse,
};

const char* to_string(ErrorKind kind);

// Single exception type for every failure the engine reports; the kind
// tells callers (and the CLI exit-code logic) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace beltrami
