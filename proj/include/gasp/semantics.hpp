#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "gasp/program.hpp"

namespace gasp {

enum class SemanticsKind { Classical, Supported, FLP, SFLP };

std::string_view to_string(SemanticsKind kind);

inline constexpr std::size_t kDefaultAtomLimit = 20;

bool satisfies_rule(const Interpretation &interp, const Rule &rule);
bool is_model(const Interpretation &interp, const Program &program);

/// A model in which every true atom is the only true head atom of some rule
/// with a true body.
bool is_supported_model(const Interpretation &interp, const Program &program);

/// Rules whose body is true under `interp`, in program order.
Program flp_reduct(const Program &program, const Interpretation &interp);

bool is_flp_answer_set(const Interpretation &interp, const Program &program);
bool is_sflp_answer_set(const Interpretation &interp, const Program &program);

struct EnumerateOptions {
  std::size_t limit = kDefaultAtomLimit;
  /// Worker threads over the candidate space; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// Every I ⊆ atoms(P) accepted by the predicate of `kind`, in canonical
/// subset order. Throws TooManyAtoms above the limit.
std::vector<Interpretation> enumerate(const Program &program, SemanticsKind kind,
                                      const EnumerateOptions &options = {});

/// comp(a, P) realized as a truth table over atoms(P): true on I iff a ∈ I
/// and no rule with a true body has I ∩ H(r) = {a}.
struct CompletionAtom {
  Atom target;
  Program program_snapshot;
  Body realized;
};

CompletionAtom completion_atom(const Atom &atom, const Program &program,
                               std::size_t limit = kDefaultAtomLimit);

/// P extended with `:- comp(a, P)` for every atom a of P, in atom order.
Program completion(const Program &program, std::size_t limit = kDefaultAtomLimit);

/// SFLP membership decided by model checks against completions only.
bool sflp_via_completion(const Interpretation &interp, const Program &program,
                         std::size_t limit = kDefaultAtomLimit);

/// FLP answer sets of a program whose bodies are all literal conjunctions,
/// found by backtracking search over supported models instead of scanning
/// all 2^n candidates. Throws InvalidArgument on any other body shape.
std::vector<Interpretation> solve_flp_literal(const Program &program);

} // namespace gasp
