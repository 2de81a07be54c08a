#include "gasp/error.hpp"

namespace gasp {

namespace {

std::string location_message(std::size_t line, std::size_t column, const std::string &message) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
}

} // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string &message)
    : Error(location_message(line, column, message)), line_(line), column_(column),
      expected_(std::move(expected)) {}

ReservedAtom::ReservedAtom(std::size_t line, std::size_t column, const std::string &name)
    : ParseError(line, column, {}, "atom '" + name + "' uses the reserved prefix __aux") {}

TooManyAtoms::TooManyAtoms(std::size_t atoms, std::size_t limit)
    : Error("program has " + std::to_string(atoms) + " atoms, limit is " + std::to_string(limit)),
      atoms_(atoms), limit_(limit) {}

UnknownAtom::UnknownAtom(const std::string &name)
    : Error("atom '" + name + "' does not occur in the program") {}

} // namespace gasp
