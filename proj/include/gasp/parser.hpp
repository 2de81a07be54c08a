#pragma once

#include <string>
#include <string_view>

#include "gasp/program.hpp"

namespace gasp {

struct SourceProgram {
  std::string text;
  std::string origin = "<stdin>";
};

struct ParseOptions {
  /// Accept `__aux*` atoms, as produced by compilation. Programs that are
  /// going to be compiled must be parsed with this off.
  bool allow_reserved = false;
};

/// Parses the `.gasp` surface language:
///
///   statement := rule "." ;
///   rule      := head? (":-" body)? ;
///   head      := atom ("|" atom)* ;
///   body      := litconj | aggregate | dnfexpr ;
///   litconj   := literal ("," literal)* | ε ;
///   literal   := "not" atom | atom ;
///   aggregate := "count" "{" atom ("," atom)* "}" cmp integer ;
///   dnfexpr   := "dnf" "{" conj ("|" conj)* "}" ;
///   conj      := ("~"? atom) ("&" "~"? atom)* ;
///
/// `%` starts a comment running to the end of the line. Throws ParseError
/// (or ReservedAtom) on the first error.
Program parse_program(const SourceProgram &src, const ParseOptions &options = {});
Program parse_program(std::string_view text, const ParseOptions &options = {});

/// Canonical text, one statement per line; parse_program(render(p)) == p.
std::string render(const Program &program);
std::string render(const Rule &rule);
std::string render(const Body &body);

} // namespace gasp
