#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "gasp/program.hpp"
#include "gasp/semantics.hpp"

namespace gasp {

enum class BodyKind { Literals, Count, Dnf, TruthTable };

struct GenConfig {
  std::size_t atom_count = 3;  // 1..8
  std::size_t rule_count = 4;  // 0..10
  /// Relative weights of literal conjunctions, count aggregates, dnf and
  /// truth-table bodies.
  std::array<double, 4> body_mix{1.0, 1.0, 1.0, 1.0};
  bool allow_disjunctive_heads = false;
  bool allow_constraints = true;
  /// Upper bound on the atoms a single body mentions.
  std::size_t max_body_domain = 3;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument when out of bounds.
  void validate() const;
};

/// Deterministic in the whole config (seed included). Atoms are named
/// a, b, c, ... in order.
Program generate(const GenConfig &cfg);

struct TheoremCheck {
  std::string name;
  bool applicable = true;
  bool passed = true;
  /// Canonical program text plus witnessing interpretation(s) on failure.
  std::string witness;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;

  bool ok() const;
  const TheoremCheck *find(const std::string &name) const;
};

namespace theorem {
inline const std::string kFlpInSflp = "FLP subset of SFLP";
inline const std::string kConvexEquivalence = "convex => FLP = SFLP";
inline const std::string kCompletionModels = "supported = completion models";
inline const std::string kCompletionSflp = "SFLP = completion characterization";
inline const std::string kCompileFlp = "compilation bijection (FLP)";
inline const std::string kCompileSflp = "compilation bijection (SFLP)";
} // namespace theorem

/// Runs every check by exhaustive enumeration over atoms(P). The
/// compilation checks are applicable only to programs with atomic heads.
TheoremReport check_theorems(const Program &program, std::size_t limit = kDefaultAtomLimit);

struct RandomRun {
  std::uint64_t seed;
  Program program;
  TheoremReport report;
};

/// check_theorems over generate(cfg) for seeds first..first+count-1,
/// `threads` workers, results in seed order.
std::vector<RandomRun> check_random(GenConfig cfg, std::uint64_t first, std::size_t count,
                                    unsigned threads = 0);

} // namespace gasp
