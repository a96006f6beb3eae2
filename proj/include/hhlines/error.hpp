#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hhlines/vertex_set.hpp"

namespace hhlines {

enum class ErrorKind {
  MalformedEncoding,
  TooLarge,
  SelfLoop,
  NonInteger,
  Disconnected,
  EmptySet,
  DegeneratePair,
  NotDistinct,
  ScaleLimit,
  PreconditionUnmet,
  DisconnectedAfterRemoval,
  StructureViolation,
  NoCommonVertex,
  TwoOutsideC,
};

std::string_view to_string(ErrorKind kind);

/// Contract or input error. Thrown for malformed input and broken preconditions.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// A structural claim that failed on a concrete graph. Returned, never thrown:
/// the harness hunts for these.
struct Violation {
  ErrorKind kind;
  std::string detail;
  std::vector<Vertex> witness;
};

/// Either a value or the Violation that prevented computing it.
template <class T>
class Checked {
 public:
  Checked(T value) : state_(std::move(value)) {}
  Checked(Violation violation) : state_(std::move(violation)) {}

  bool ok() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return ok(); }

  const T& value() const { return std::get<T>(state_); }
  T& value() { return std::get<T>(state_); }
  const Violation& violation() const { return std::get<Violation>(state_); }

 private:
  std::variant<T, Violation> state_;
};

}  // namespace hhlines
