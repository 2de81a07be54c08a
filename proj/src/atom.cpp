#include "gasp/atom.hpp"

#include <algorithm>

#include "gasp/error.hpp"

namespace gasp {

namespace {

bool is_tail_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

} // namespace

bool is_valid_atom_name(std::string_view name) {
  if (name.empty() || name.front() < 'a' || name.front() > 'z')
    return false;
  return std::all_of(name.begin() + 1, name.end(), is_tail_char);
}

bool is_reserved_atom_name(std::string_view name) {
  return name.starts_with(kReservedPrefix) &&
         std::all_of(name.begin(), name.end(), is_tail_char);
}

Atom::Atom(std::string name) : name_(std::move(name)) {
  if (!is_valid_atom_name(name_))
    throw InvalidArgument("invalid atom name '" + name_ + "'");
}

Atom Atom::reserved(std::string name) {
  if (!is_reserved_atom_name(name))
    throw InvalidArgument("'" + name + "' is not a reserved atom name");
  return Atom(Unchecked{}, std::move(name));
}

bool Atom::is_reserved() const { return name_.starts_with(kReservedPrefix); }

bool ShortlexLess::operator()(const AtomSet &a, const AtomSet &b) const {
  if (a.size() != b.size())
    return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_canonical(std::vector<Interpretation> &sets) {
  std::sort(sets.begin(), sets.end(), ShortlexLess{});
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::string to_string(const Interpretation &interp) {
  std::string out = "{";
  bool first = true;
  for (const auto &atom : interp) {
    if (!first)
      out += ", ";
    out += atom.name();
    first = false;
  }
  out += "}";
  return out;
}

} // namespace gasp
