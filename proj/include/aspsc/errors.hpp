// Copyright (c) 2026 the aspsc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aspsc {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Lexical or grammatical defect in program or formula text.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

/// A structural admissibility condition does not hold (well-formed text,
/// inadmissible object).
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// An enumeration was refused because the universe exceeds the configured
/// atom guard (or the 32-atom bit-vector capacity).
class GuardExceeded : public Error {
 public:
  GuardExceeded(std::uint32_t required, std::uint32_t allowed)
      : Error("universe of " + std::to_string(required) +
              " atoms exceeds the enumeration guard of " + std::to_string(allowed)),
        required_(required),
        allowed_(allowed) {}

  std::uint32_t required() const { return required_; }
  std::uint32_t allowed() const { return allowed_; }

 private:
  std::uint32_t required_;
  std::uint32_t allowed_;
};

/// An interpretation was paired with a program over a different universe.
class UniverseMismatch : public Error {
 public:
  using Error::Error;
};

/// A query atom is not part of the relevant universe.
class UnknownAtom : public Error {
 public:
  using Error::Error;
};

/// A transformation that requires a normal program was given a disjunctive one.
class NotNormal : public Error {
 public:
  using Error::Error;
};

/// A transformation that requires a constraint-free program was given
/// constraints with auto-elimination disabled.
class ConstraintPresent : public Error {
 public:
  using Error::Error;
};

}  // namespace aspsc
