#pragma once

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gasp {

inline constexpr std::string_view kReservedPrefix = "__aux";

/// A propositional atom. Ordinary atoms match `[a-z][A-Za-z0-9_]*`;
/// names starting with `__aux` are reserved for compilation output and
/// can only be created through Atom::reserved.
class Atom {
public:
  /// Throws InvalidArgument on a lexically invalid or reserved name.
  explicit Atom(std::string name);

  static Atom reserved(std::string name);

  const std::string &name() const { return name_; }
  bool is_reserved() const;

  friend bool operator==(const Atom &, const Atom &) = default;
  friend std::strong_ordering operator<=>(const Atom &a, const Atom &b) {
    return a.name_ <=> b.name_;
  }

private:
  struct Unchecked {};
  Atom(Unchecked, std::string name) : name_(std::move(name)) {}

  std::string name_;
};

bool is_valid_atom_name(std::string_view name);
bool is_reserved_atom_name(std::string_view name);

using AtomSet = std::set<Atom>;

/// A finite set of atoms taken to be true.
using Interpretation = AtomSet;

/// Canonical subset order: smaller sets first, equal sizes compared
/// lexicographically over their sorted atoms.
struct ShortlexLess {
  bool operator()(const AtomSet &a, const AtomSet &b) const;
};

/// Sorts and deduplicates interpretations into canonical order.
void sort_canonical(std::vector<Interpretation> &sets);

/// `{a, b}` rendering used by the CLI and diagnostics.
std::string to_string(const Interpretation &interp);

} // namespace gasp
