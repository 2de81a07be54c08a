#pragma once

#include <vector>

#include "gasp/body.hpp"
#include "gasp/program.hpp"

namespace gasp::detail {

using Mask = MaskedBody::Mask;

/// Program over a fixed sorted atom table with interpretations as bitmasks.
/// Rule filters are per-rule flags; an empty filter means every rule.
class IndexedProgram {
public:
  using Filter = std::vector<char>;

  IndexedProgram(const Program &program, std::vector<Atom> table);

  const std::vector<Atom> &table() const { return table_; }
  std::size_t rule_count() const { return rules_.size(); }

  bool body_true(std::size_t rule, Mask interp) const { return rules_[rule].body.eval(interp); }

  /// Filter selecting the rules of the FLP reduct at `interp`.
  Filter reduct(Mask interp) const;

  bool is_model(Mask interp, const Filter &filter = {}) const;
  bool is_supported_model(Mask interp, const Filter &filter = {}) const;
  bool is_flp(Mask interp) const;
  bool is_sflp(Mask interp) const;

private:
  struct IndexedRule {
    Mask head;
    MaskedBody body;
  };

  std::vector<Atom> table_;
  std::vector<IndexedRule> rules_;
};

/// atoms(P) ∪ extra, sorted.
std::vector<Atom> atom_table(const Program &program, const Interpretation &extra = {});

} // namespace gasp::detail
