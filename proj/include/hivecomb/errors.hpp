#pragma once

#include <stdexcept>
#include <string>

namespace hivecomb {

/// Base of every error raised by the library. The CLI maps subclasses to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ZeroSumViolation : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotDominant : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SizeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class RhombusViolation : public Error {
 public:
  RhombusViolation(std::size_t rhombus_index, const std::string& what)
      : Error(what), rhombus_index_(rhombus_index) {}
  std::size_t rhombus_index() const { return rhombus_index_; }

 private:
  std::size_t rhombus_index_;
};

class DirectionViolation : public Error {
 public:
  DirectionViolation(std::size_t edge_index, const std::string& what)
      : Error(what), edge_index_(edge_index) {}
  std::size_t edge_index() const { return edge_index_; }

 private:
  std::size_t edge_index_;
};

class TypeDoesNotClose : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class TensionViolation : public Error {
 public:
  using Error::Error;
};

class UnknownPattern : public Error {
 public:
  using Error::Error;
};

enum class NotADiagramReason { Tension, Disconnected, ParallelLines, NonintegralMultiplicity, Monodromy };

const char* to_string(NotADiagramReason reason);

class NotADiagram : public Error {
 public:
  NotADiagram(NotADiagramReason reason, const std::string& detail)
      : Error(std::string("not a honeycomb diagram (") + to_string(reason) + "): " + detail),
        reason_(reason) {}
  NotADiagramReason reason() const { return reason_; }

 private:
  NotADiagramReason reason_;
};

class ParallelLinesOnly : public Error {
 public:
  using Error::Error;
};

class NotSimplyDegenerate : public Error {
 public:
  using Error::Error;
};

class EpsilonTooLarge : public Error {
 public:
  EpsilonTooLarge(std::string bound, const std::string& what) : Error(what), bound_(std::move(bound)) {}
  /// Largest legal step, as a "p/q" string.
  const std::string& bound() const { return bound_; }

 private:
  std::string bound_;
};

class NotDegenerate : public Error {
 public:
  using Error::Error;
};

class Infeasible : public Error {
 public:
  using Error::Error;
};

class Unbounded : public Error {
 public:
  using Error::Error;
};

class DegenerateOptimum : public Error {
 public:
  using Error::Error;
};

class HasCycle : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace hivecomb
