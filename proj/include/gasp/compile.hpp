#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gasp/program.hpp"
#include "gasp/semantics.hpp"

namespace gasp {

/// Fresh atoms of one rewritten generalized atom A: `__aux_t_<idx>` for Aᵀ
/// and `__aux_f_<idx>_<i>` for A^{F_i}, i = 0..k.
struct AuxNames {
  std::size_t index = 0;
  Atom t;
  std::vector<Atom> f;

  AuxNames(std::size_t index, std::size_t disjuncts);
};

enum class TargetSemantics { FLP, SFLP };

std::string_view to_string(TargetSemantics semantics);
SemanticsKind to_kind(TargetSemantics semantics);

/// Canonical DNF body → aux family, in first-occurrence order.
struct CompilationMap {
  std::vector<std::pair<Body, AuxNames>> entries;
  TargetSemantics semantics = TargetSemantics::FLP;

  /// nullptr when the body was not rewritten.
  const AuxNames *find(const Body &dnf) const;
};

struct CompileOptions {
  /// Rewrite every body, including single literals left in place by default.
  bool rewrite_all = false;
};

/// `Aᵀ ∨ negatives_i ← positives_i, not A^{F_0}` for disjunct i (1-based).
Rule tr(const Dnf &dnf, std::size_t i, const AuxNames &names);

/// Literal j (1-based; positives first, then negatives, each sorted) of
/// disjunct i: `A^{F_i} ← not a, not Aᵀ` for a positive literal a and
/// `A^{F_i} ← a, not Aᵀ` for a negative one.
Rule fls_literal(const Dnf &dnf, std::size_t i, std::size_t j, const AuxNames &names);

/// `A^{F_0} ← A^{F_1}, ..., A^{F_k}, not Aᵀ`.
Rule fls_final(const Dnf &dnf, const AuxNames &names);

/// All tr rules, then all fls_literal rules, then fls_final.
std::vector<Rule> rew_atom(const Dnf &dnf, const AuxNames &names);

/// Canonical DNF used as the sharing key: Dnf bodies sorted, everything
/// else through to_dnf.
Body compilation_key(const Body &body);

/// Whether `rule` keeps its body unchanged during compilation.
bool keeps_body(const Rule &rule, const CompileOptions &options = {});

std::pair<Program, CompilationMap> rew_flp(const Program &program,
                                           const CompileOptions &options = {});

/// `Aᵀ_1 ∨ ... ∨ Aᵀ_n ← a` over the rules of P with head {a}; a kept body
/// contributes its single positive atom instead.
Rule supp_rule(const Atom &atom, const Program &program, const CompilationMap &map,
               const CompileOptions &options = {});

std::pair<Program, CompilationMap> rew_sflp(const Program &program,
                                            const CompileOptions &options = {});

std::pair<Program, CompilationMap> rewrite(const Program &program, TargetSemantics semantics,
                                           const CompileOptions &options = {});

/// I plus Aᵀ for each mapped A true under I, plus every A^{F_i} for each A
/// false under I.
Interpretation expansion(const Interpretation &interp, const Program &program,
                         const CompilationMap &map);

/// I ∩ atoms(P).
Interpretation contraction(const Interpretation &interp, const Program &program);

struct CompilationViolation {
  enum class Kind {
    ExpansionNotAnswerSet,    // I in F(P), exp(I) not in FLP(rew(P))
    ExpansionNotInverted,     // exp(I)|P != I
    ContractionNotAnswerSet,  // J in FLP(rew(P)), J|P not in F(P)
    NotAnExpansion,           // J in FLP(rew(P)), exp(J|P) != J
  };
  Kind kind;
  std::string description;
  Interpretation witness;
};

struct CompilationReport {
  TargetSemantics semantics = TargetSemantics::FLP;
  std::vector<Interpretation> source_answer_sets;
  std::vector<Interpretation> target_answer_sets;
  std::vector<CompilationViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks that expansion maps the answer sets of P onto the FLP answer sets
/// of its rewriting and that contraction maps them back.
CompilationReport verify_compilation(const Program &program, TargetSemantics semantics,
                                     const CompileOptions &options = {},
                                     std::size_t limit = kDefaultAtomLimit);

} // namespace gasp
