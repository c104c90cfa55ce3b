#pragma once

#include <stdexcept>
#include <string>

namespace splitcircle {

enum class ErrorKind {
  InvalidVertex,
  NotAnEdge,
  FactorTooSmall,
  NotSplit,
  NotDecomposable,
  WrongCase,
  InvalidParameter,
  NotDoubleOccurrence,
  TooLarge,
  InvalidState,
  InternalInconsistency,
  NoScript,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace splitcircle
