#pragma once

#include <stdexcept>
#include <string>

namespace zipk {

/// Malformed user input (bad vectors, unknown preset, unparsable file).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but violates a mathematical precondition.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    PairingViolation,
    ReflectionNotPermuting,
    NonFiniteCartan,
    InvalidSimpleSystem,
    TwistNotPreservingBase,
    NotSimplyConnected,
    NotPrime,
    DimensionMismatch,
    NotInvariant,
    NotDominant,
    NotReduced,
  };

  ValidationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A configured size or degree cap was exceeded. Never silently truncated.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebraic identity that must hold did not; indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace zipk
