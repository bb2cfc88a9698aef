// Copyright (c) 2026 The minhit authors
// SPDX-License-Identifier: MIT

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace minhit {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An input set is empty; the instance has no hitting set and is rejected.
class EmptySetError : public Error {
 public:
  explicit EmptySetError(std::size_t set_index)
      : Error("set " + std::to_string(set_index) + " is empty"),
        set_index_(set_index) {}
  std::size_t set_index() const { return set_index_; }

 private:
  std::size_t set_index_;
};

/// Positional parse failure (1-based line and column).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// The exhaustive oracle refuses universes above its cap.
class OracleTooLargeError : public Error {
 public:
  OracleTooLargeError(std::size_t universe, std::size_t cap)
      : Error("universe of " + std::to_string(universe) +
              " elements exceeds oracle cap " + std::to_string(cap)) {}
};

/// Berge's intermediate transversal collection exceeded its memory cap.
class BergeCapError : public Error {
 public:
  explicit BergeCapError(std::size_t cap)
      : Error("intermediate transversal count exceeded cap " +
              std::to_string(cap)) {}
};

/// The answer-set checker only handles negation-free, body-free programs.
class UnsupportedProgramError : public Error {
 public:
  explicit UnsupportedProgramError(const std::string& msg) : Error(msg) {}
};

/// A precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

}  // namespace minhit
