#include "gasp/body.hpp"

#include <algorithm>
#include <bit>

#include "gasp/error.hpp"

namespace gasp {

namespace {

constexpr std::size_t kMaxMaskAtoms = 62;

std::strong_ordering shortlex(const AtomSet &a, const AtomSet &b) {
  if (a.size() != b.size())
    return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

template <class... Ts> struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Atom> domain_table(const Body &body) {
  auto dom = domain(body);
  if (dom.size() > kMaxMaskAtoms)
    throw TooManyAtoms(dom.size(), kMaxMaskAtoms);
  return {dom.begin(), dom.end()};
}

// Truth value of the body on every subset of its domain, indexed by mask.
std::vector<bool> truth_vector(const Body &body, const std::vector<Atom> &table) {
  MaskedBody masked(body, table);
  const std::uint64_t n = std::uint64_t{1} << table.size();
  std::vector<bool> truth(n);
  for (std::uint64_t m = 0; m < n; ++m)
    truth[m] = masked.eval(m);
  return truth;
}

} // namespace

AtomSet atoms(std::initializer_list<std::string_view> names) {
  AtomSet out;
  for (auto name : names)
    out.emplace(std::string(name));
  return out;
}

Conjunct::Conjunct(AtomSet pos, AtomSet neg) : positives(std::move(pos)), negatives(std::move(neg)) {
  for (const auto &atom : positives)
    if (negatives.count(atom))
      throw InvalidArgument("atom '" + atom.name() + "' occurs both positively and negatively");
}

bool Conjunct::holds(const Interpretation &interp) const {
  for (const auto &atom : positives)
    if (!interp.count(atom))
      return false;
  for (const auto &atom : negatives)
    if (interp.count(atom))
      return false;
  return true;
}

std::strong_ordering operator<=>(const Conjunct &a, const Conjunct &b) {
  if (auto c = shortlex(a.positives, b.positives); c != 0)
    return c;
  return shortlex(a.negatives, b.negatives);
}

std::string_view to_string(Comparator cmp) {
  switch (cmp) {
  case Comparator::Eq: return "=";
  case Comparator::Ne: return "!=";
  case Comparator::Le: return "<=";
  case Comparator::Ge: return ">=";
  case Comparator::Lt: return "<";
  case Comparator::Gt: return ">";
  }
  return "?";
}

bool compare(std::size_t lhs, Comparator cmp, std::size_t rhs) {
  switch (cmp) {
  case Comparator::Eq: return lhs == rhs;
  case Comparator::Ne: return lhs != rhs;
  case Comparator::Le: return lhs <= rhs;
  case Comparator::Ge: return lhs >= rhs;
  case Comparator::Lt: return lhs < rhs;
  case Comparator::Gt: return lhs > rhs;
  }
  return false;
}

Body Body::literals(AtomSet positives, AtomSet negatives) {
  return Body(LiteralConjunction{Conjunct(std::move(positives), std::move(negatives))});
}

Body Body::literals(Conjunct conjunct) { return Body(LiteralConjunction{std::move(conjunct)}); }

Body Body::count(AtomSet atoms, Comparator cmp, std::size_t bound) {
  if (atoms.empty())
    throw InvalidArgument("count aggregate needs at least one atom");
  return Body(CountAggregate{std::move(atoms), cmp, bound});
}

Body Body::dnf(std::vector<Conjunct> disjuncts) {
  if (disjuncts.empty())
    throw InvalidArgument("dnf needs at least one disjunct");
  return Body(Dnf{std::move(disjuncts)});
}

Body Body::truth_table(AtomSet domain, std::set<Interpretation> satisfying) {
  for (const auto &set : satisfying)
    for (const auto &atom : set)
      if (!domain.count(atom))
        throw InvalidArgument("truth table entry " + to_string(set) + " leaves the domain");
  if (domain.empty() && satisfying.empty())
    throw InvalidArgument("truth table with empty domain must be satisfiable");
  return Body(TruthTable{std::move(domain), std::move(satisfying)});
}

bool eval(const Body &body, const Interpretation &interp) {
  return std::visit(
      Overloaded{
          [&](const LiteralConjunction &lc) { return lc.conjunct.holds(interp); },
          [&](const CountAggregate &ca) {
            std::size_t n = 0;
            for (const auto &atom : ca.atoms)
              n += interp.count(atom);
            return compare(n, ca.comparator, ca.bound);
          },
          [&](const Dnf &dnf) {
            return std::any_of(dnf.disjuncts.begin(), dnf.disjuncts.end(),
                               [&](const Conjunct &c) { return c.holds(interp); });
          },
          [&](const TruthTable &tt) {
            Interpretation projected;
            for (const auto &atom : interp)
              if (tt.domain.count(atom))
                projected.insert(atom);
            return tt.satisfying.count(projected) > 0;
          },
      },
      body.value());
}

AtomSet domain(const Body &body) {
  return std::visit(Overloaded{
                        [](const LiteralConjunction &lc) {
                          AtomSet out = lc.conjunct.positives;
                          out.insert(lc.conjunct.negatives.begin(), lc.conjunct.negatives.end());
                          return out;
                        },
                        [](const CountAggregate &ca) { return ca.atoms; },
                        [](const Dnf &dnf) {
                          AtomSet out;
                          for (const auto &c : dnf.disjuncts) {
                            out.insert(c.positives.begin(), c.positives.end());
                            out.insert(c.negatives.begin(), c.negatives.end());
                          }
                          return out;
                        },
                        [](const TruthTable &tt) { return tt.domain; },
                    },
                    body.value());
}

std::vector<Interpretation> satisfying_subsets(const Body &body) {
  const auto table = domain_table(body);
  const auto truth = truth_vector(body, table);
  std::vector<Interpretation> out;
  for (std::uint64_t m = 0; m < truth.size(); ++m)
    if (truth[m])
      out.push_back(from_mask(m, table));
  sort_canonical(out);
  return out;
}

bool is_satisfiable(const Body &body) {
  if (body.is<LiteralConjunction>() || body.is<Dnf>())
    return true;
  if (const auto *ca = std::get_if<CountAggregate>(&body.value())) {
    for (std::size_t n = 0; n <= ca->atoms.size(); ++n)
      if (compare(n, ca->comparator, ca->bound))
        return true;
    return false;
  }
  return !body.as<TruthTable>().satisfying.empty();
}

Body to_dnf(const Body &body) {
  const auto dom = domain(body);
  const auto sats = satisfying_subsets(body);
  if (sats.empty())
    throw UnsatisfiableBody("body has no satisfying subset of its domain");
  std::vector<Conjunct> disjuncts;
  disjuncts.reserve(sats.size());
  for (const auto &s : sats) {
    AtomSet neg;
    std::set_difference(dom.begin(), dom.end(), s.begin(), s.end(), std::inserter(neg, neg.end()));
    disjuncts.emplace_back(s, std::move(neg));
  }
  return Body::dnf(std::move(disjuncts));
}

bool is_convex(const Body &body) {
  const auto table = domain_table(body);
  const auto truth = truth_vector(body, table);
  const std::uint64_t n = truth.size();
  // below[m]: some subset of m is satisfying; above[m]: some superset is.
  std::vector<bool> below = truth, above = truth;
  for (std::size_t bit = 0; bit < table.size(); ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t m = 0; m < n; ++m) {
      if (m & b) {
        if (below[m ^ b])
          below[m] = true;
      }
    }
    for (std::uint64_t m = n; m-- > 0;) {
      if (!(m & b) && above[m | b])
        above[m] = true;
    }
  }
  for (std::uint64_t m = 0; m < n; ++m)
    if (!truth[m] && below[m] && above[m])
      return false;
  return true;
}

Body canonical(const Body &body) {
  if (const auto *dnf = std::get_if<Dnf>(&body.value())) {
    auto disjuncts = dnf->disjuncts;
    std::sort(disjuncts.begin(), disjuncts.end());
    disjuncts.erase(std::unique(disjuncts.begin(), disjuncts.end()), disjuncts.end());
    return Body::dnf(std::move(disjuncts));
  }
  if (const auto *tt = std::get_if<TruthTable>(&body.value())) {
    if (tt->domain.empty())
      return Body();
    if (tt->satisfying.empty())
      return Body::count(tt->domain, Comparator::Lt, 0);
    return to_dnf(body);
  }
  return body;
}

bool is_single_positive_literal(const Body &body) {
  const auto *lc = std::get_if<LiteralConjunction>(&body.value());
  return lc && lc->conjunct.positives.size() == 1 && lc->conjunct.negatives.empty();
}

bool is_single_literal(const Body &body) {
  const auto *lc = std::get_if<LiteralConjunction>(&body.value());
  return lc && lc->conjunct.literal_count() == 1;
}

int index_of(const std::vector<Atom> &table, const Atom &atom) {
  auto it = std::lower_bound(table.begin(), table.end(), atom);
  if (it == table.end() || *it != atom)
    return -1;
  return static_cast<int>(it - table.begin());
}

MaskedBody::Mask to_mask(const Interpretation &interp, const std::vector<Atom> &table) {
  MaskedBody::Mask mask = 0;
  for (const auto &atom : interp) {
    int i = index_of(table, atom);
    if (i < 0)
      throw UnknownAtom(atom.name());
    mask |= MaskedBody::Mask{1} << i;
  }
  return mask;
}

Interpretation from_mask(MaskedBody::Mask mask, const std::vector<Atom> &table) {
  Interpretation out;
  for (std::size_t i = 0; i < table.size(); ++i)
    if (mask & (MaskedBody::Mask{1} << i))
      out.insert(out.end(), table[i]);
  return out;
}

MaskedBody::MaskedBody(const Body &body, const std::vector<Atom> &table) {
  if (table.size() > kMaxMaskAtoms)
    throw TooManyAtoms(table.size(), kMaxMaskAtoms);
  domain_ = to_mask(gasp::domain(body), table);
  std::visit(Overloaded{
                 [&](const LiteralConjunction &lc) {
                   kind_ = Kind::Literals;
                   pos_ = to_mask(lc.conjunct.positives, table);
                   neg_ = to_mask(lc.conjunct.negatives, table);
                 },
                 [&](const CountAggregate &ca) {
                   kind_ = Kind::Count;
                   cmp_ = ca.comparator;
                   bound_ = ca.bound;
                 },
                 [&](const Dnf &dnf) {
                   kind_ = Kind::Dnf;
                   for (const auto &c : dnf.disjuncts)
                     disjuncts_.emplace_back(to_mask(c.positives, table),
                                             to_mask(c.negatives, table));
                 },
                 [&](const TruthTable &tt) {
                   kind_ = Kind::Table;
                   for (const auto &s : tt.satisfying)
                     table_.push_back(to_mask(s, table));
                   std::sort(table_.begin(), table_.end());
                 },
             },
             body.value());
}

bool MaskedBody::eval(Mask interp) const {
  switch (kind_) {
  case Kind::Literals:
    return (interp & pos_) == pos_ && (interp & neg_) == 0;
  case Kind::Count:
    return compare(static_cast<std::size_t>(std::popcount(interp & domain_)), cmp_, bound_);
  case Kind::Dnf:
    return std::any_of(disjuncts_.begin(), disjuncts_.end(), [&](const auto &d) {
      return (interp & d.first) == d.first && (interp & d.second) == 0;
    });
  case Kind::Table:
    return std::binary_search(table_.begin(), table_.end(), interp & domain_);
  }
  return false;
}

} // namespace gasp
