#pragma once

#include <vector>

#include "gasp/atom.hpp"
#include "gasp/body.hpp"

namespace gasp {

/// `H(r) <- B(r)`. An empty head is a constraint.
struct Rule {
  AtomSet head;
  Body body;

  bool is_constraint() const { return head.empty(); }

  friend bool operator==(const Rule &, const Rule &) = default;
  friend auto operator<=>(const Rule &, const Rule &) = default;
};

/// A finite sequence of rules, compared as a set after canonicalization.
class Program {
public:
  Program() = default;
  explicit Program(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  const std::vector<Rule> &rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool empty() const { return rules_.empty(); }

  /// Union of head atoms and body domains.
  AtomSet atoms() const;

  bool has_atomic_heads() const;

  /// Canonical bodies, duplicates removed keeping first occurrences.
  Program canonical() const;

  /// Rule-set equality of the canonical forms.
  friend bool operator==(const Program &a, const Program &b);

private:
  std::vector<Rule> rules_;
};

Rule canonical(const Rule &rule);

bool is_convex_program(const Program &program);

} // namespace gasp
