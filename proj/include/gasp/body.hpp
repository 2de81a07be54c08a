#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gasp/atom.hpp"

namespace gasp {

/// Builds an atom set from names; convenient in tests and generators.
AtomSet atoms(std::initializer_list<std::string_view> names);

/// One conjunction of literals. Positive and negative atoms are disjoint.
struct Conjunct {
  AtomSet positives;
  AtomSet negatives;

  Conjunct() = default;
  /// Throws InvalidArgument if an atom occurs with both signs.
  Conjunct(AtomSet pos, AtomSet neg);

  bool holds(const Interpretation &interp) const;
  bool empty() const { return positives.empty() && negatives.empty(); }
  std::size_t literal_count() const { return positives.size() + negatives.size(); }

  friend bool operator==(const Conjunct &, const Conjunct &) = default;
  friend std::strong_ordering operator<=>(const Conjunct &, const Conjunct &);
};

enum class Comparator { Eq, Ne, Le, Ge, Lt, Gt };

std::string_view to_string(Comparator cmp);
bool compare(std::size_t lhs, Comparator cmp, std::size_t rhs);

struct LiteralConjunction {
  Conjunct conjunct;

  friend bool operator==(const LiteralConjunction &, const LiteralConjunction &) = default;
  friend auto operator<=>(const LiteralConjunction &, const LiteralConjunction &) = default;
};

struct CountAggregate {
  AtomSet atoms;
  Comparator comparator = Comparator::Eq;
  std::size_t bound = 0;

  friend bool operator==(const CountAggregate &, const CountAggregate &) = default;
  friend auto operator<=>(const CountAggregate &, const CountAggregate &) = default;
};

struct Dnf {
  std::vector<Conjunct> disjuncts;

  friend bool operator==(const Dnf &, const Dnf &) = default;
  friend auto operator<=>(const Dnf &, const Dnf &) = default;
};

struct TruthTable {
  AtomSet domain;
  std::set<Interpretation> satisfying;

  friend bool operator==(const TruthTable &, const TruthTable &) = default;
  friend auto operator<=>(const TruthTable &, const TruthTable &) = default;
};

/// A generalized atom used as a rule body: a Boolean function over the
/// subsets of a finite domain. Immutable once built; the factories enforce
/// the per-variant invariants.
class Body {
public:
  using Variant = std::variant<LiteralConjunction, CountAggregate, Dnf, TruthTable>;

  /// The always-true empty conjunction.
  Body() : value_(LiteralConjunction{}) {}

  static Body literals(AtomSet positives, AtomSet negatives = {});
  static Body literals(Conjunct conjunct);
  static Body count(AtomSet atoms, Comparator cmp, std::size_t bound);
  /// Requires at least one disjunct.
  static Body dnf(std::vector<Conjunct> disjuncts);
  /// Every satisfying set must be a subset of the domain, and an empty
  /// domain needs the (single) empty satisfying set.
  static Body truth_table(AtomSet domain, std::set<Interpretation> satisfying);

  const Variant &value() const { return value_; }

  template <typename T> bool is() const { return std::holds_alternative<T>(value_); }
  template <typename T> const T &as() const { return std::get<T>(value_); }

  friend bool operator==(const Body &, const Body &) = default;
  friend auto operator<=>(const Body &, const Body &) = default;

private:
  explicit Body(Variant v) : value_(std::move(v)) {}

  Variant value_;
};

bool eval(const Body &body, const Interpretation &interp);

/// All atoms the body mentions (the declared domain for truth tables).
AtomSet domain(const Body &body);

/// Satisfying subsets of the domain, in canonical subset order.
std::vector<Interpretation> satisfying_subsets(const Body &body);

bool is_satisfiable(const Body &body);

/// Minterm DNF: one full conjunct per satisfying subset of the domain, in
/// canonical subset order. Throws UnsatisfiableBody.
Body to_dnf(const Body &body);

/// Exhaustive scan: no J with a false value sandwiched between a true
/// subset and a true superset.
bool is_convex(const Body &body);

/// Representative used for equality and rendering: truth tables become
/// their minterm DNF (or `count{D} < 0` when unsatisfiable), Dnf disjuncts
/// are sorted and deduplicated.
Body canonical(const Body &body);

/// True for the bodies compilation leaves in place: exactly one positive
/// literal and nothing else.
bool is_single_positive_literal(const Body &body);
bool is_single_literal(const Body &body);

/// Integer view of a body over an indexed atom table: each atom of the
/// table maps to a bit. Used by the enumeration engines.
class MaskedBody {
public:
  using Mask = std::uint64_t;

  MaskedBody(const Body &body, const std::vector<Atom> &table);

  bool eval(Mask interp) const;
  Mask domain() const { return domain_; }

private:
  enum class Kind { Literals, Count, Dnf, Table };

  Kind kind_;
  Mask domain_ = 0;
  Mask pos_ = 0;
  Mask neg_ = 0;
  Comparator cmp_ = Comparator::Eq;
  std::size_t bound_ = 0;
  std::vector<std::pair<Mask, Mask>> disjuncts_;
  std::vector<Mask> table_; // sorted projections onto domain_
};

/// Index of `atom` in a sorted atom table, or -1.
int index_of(const std::vector<Atom> &table, const Atom &atom);
MaskedBody::Mask to_mask(const Interpretation &interp, const std::vector<Atom> &table);
Interpretation from_mask(MaskedBody::Mask mask, const std::vector<Atom> &table);

} // namespace gasp
