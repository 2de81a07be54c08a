#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gasp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input text (or a constructed AST) violates the surface grammar or a
/// structural invariant.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string &message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string> &expected() const { return expected_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// An input atom uses the `__aux` prefix reserved for compilation output.
class ReservedAtom : public ParseError {
public:
  ReservedAtom(std::size_t line, std::size_t column, const std::string &name);
};

/// Structural invariant violation outside of parsing (bad atom name,
/// overlapping conjunct, truth table entry outside its domain, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A body with no satisfying subset of its domain cannot be put in DNF.
class UnsatisfiableBody : public Error {
public:
  using Error::Error;
};

class TooManyAtoms : public Error {
public:
  TooManyAtoms(std::size_t atoms, std::size_t limit);

  std::size_t atoms() const { return atoms_; }
  std::size_t limit() const { return limit_; }

private:
  std::size_t atoms_;
  std::size_t limit_;
};

class UnknownAtom : public Error {
public:
  explicit UnknownAtom(const std::string &name);
};

class IndexOutOfRange : public Error {
public:
  using Error::Error;
};

/// Compilation only accepts rules with at most one head atom.
class DisjunctiveHead : public Error {
public:
  using Error::Error;
};

} // namespace gasp
