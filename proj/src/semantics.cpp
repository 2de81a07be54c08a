#include "gasp/semantics.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "gasp/error.hpp"
#include "indexed_program.hpp"

namespace gasp {

namespace detail {

std::vector<Atom> atom_table(const Program &program, const Interpretation &extra) {
  AtomSet all = program.atoms();
  all.insert(extra.begin(), extra.end());
  return {all.begin(), all.end()};
}

IndexedProgram::IndexedProgram(const Program &program, std::vector<Atom> table)
    : table_(std::move(table)) {
  rules_.reserve(program.size());
  for (const auto &rule : program.rules())
    rules_.push_back({to_mask(rule.head, table_), MaskedBody(rule.body, table_)});
}

IndexedProgram::Filter IndexedProgram::reduct(Mask interp) const {
  Filter filter(rules_.size());
  for (std::size_t r = 0; r < rules_.size(); ++r)
    filter[r] = rules_[r].body.eval(interp);
  return filter;
}

bool IndexedProgram::is_model(Mask interp, const Filter &filter) const {
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (!filter.empty() && !filter[r])
      continue;
    if ((rules_[r].head & interp) == 0 && rules_[r].body.eval(interp))
      return false;
  }
  return true;
}

bool IndexedProgram::is_supported_model(Mask interp, const Filter &filter) const {
  if (!is_model(interp, filter))
    return false;
  Mask supported = 0;
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    if (!filter.empty() && !filter[r])
      continue;
    const Mask true_head = rules_[r].head & interp;
    if (std::has_single_bit(true_head) && rules_[r].body.eval(interp))
      supported |= true_head;
  }
  return (interp & ~supported) == 0;
}

bool IndexedProgram::is_flp(Mask interp) const {
  if (!is_model(interp))
    return false;
  const Filter filter = reduct(interp);
  // Proper subsets of interp, largest mask first; stops at the first witness.
  for (Mask sub = (interp - 1) & interp; sub != interp; sub = (sub - 1) & interp) {
    if (is_model(sub, filter))
      return false;
    if (sub == 0)
      break;
  }
  return true;
}

bool IndexedProgram::is_sflp(Mask interp) const {
  if (!is_supported_model(interp))
    return false;
  const Filter filter = reduct(interp);
  for (Mask sub = (interp - 1) & interp; sub != interp; sub = (sub - 1) & interp) {
    if (is_supported_model(sub, filter))
      return false;
    if (sub == 0)
      break;
  }
  return true;
}

} // namespace detail

namespace {

using detail::IndexedProgram;
using detail::Mask;

void check_limit(std::size_t atoms, std::size_t limit) {
  if (atoms > limit)
    throw TooManyAtoms(atoms, limit);
}

bool accepts(const IndexedProgram &ip, SemanticsKind kind, Mask interp) {
  switch (kind) {
  case SemanticsKind::Classical: return ip.is_model(interp);
  case SemanticsKind::Supported: return ip.is_supported_model(interp);
  case SemanticsKind::FLP: return ip.is_flp(interp);
  case SemanticsKind::SFLP: return ip.is_sflp(interp);
  }
  return false;
}

IndexedProgram index_with(const Program &program, const Interpretation &interp) {
  return IndexedProgram(program, detail::atom_table(program, interp));
}

} // namespace

std::string_view to_string(SemanticsKind kind) {
  switch (kind) {
  case SemanticsKind::Classical: return "models";
  case SemanticsKind::Supported: return "supported";
  case SemanticsKind::FLP: return "flp";
  case SemanticsKind::SFLP: return "sflp";
  }
  return "?";
}

bool satisfies_rule(const Interpretation &interp, const Rule &rule) {
  if (!eval(rule.body, interp))
    return true;
  return std::any_of(rule.head.begin(), rule.head.end(),
                     [&](const Atom &a) { return interp.count(a) > 0; });
}

bool is_model(const Interpretation &interp, const Program &program) {
  return std::all_of(program.rules().begin(), program.rules().end(),
                     [&](const Rule &r) { return satisfies_rule(interp, r); });
}

bool is_supported_model(const Interpretation &interp, const Program &program) {
  auto ip = index_with(program, interp);
  return ip.is_supported_model(to_mask(interp, ip.table()));
}

Program flp_reduct(const Program &program, const Interpretation &interp) {
  std::vector<Rule> kept;
  for (const auto &rule : program.rules())
    if (eval(rule.body, interp))
      kept.push_back(rule);
  return Program(std::move(kept));
}

bool is_flp_answer_set(const Interpretation &interp, const Program &program) {
  auto ip = index_with(program, interp);
  return ip.is_flp(to_mask(interp, ip.table()));
}

bool is_sflp_answer_set(const Interpretation &interp, const Program &program) {
  auto ip = index_with(program, interp);
  return ip.is_sflp(to_mask(interp, ip.table()));
}

std::vector<Interpretation> enumerate(const Program &program, SemanticsKind kind,
                                      const EnumerateOptions &options) {
  const auto table = detail::atom_table(program);
  check_limit(table.size(), options.limit);
  const IndexedProgram ip(program, table);
  const Mask total = Mask{1} << table.size();

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total / 1024 + 1)));

  std::vector<std::vector<Mask>> found(threads);
  auto work = [&](unsigned worker) {
    for (Mask m = worker; m < total; m += threads)
      if (accepts(ip, kind, m))
        found[worker].push_back(m);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(work, w);
    for (auto &t : pool)
      t.join();
  }

  std::vector<Interpretation> out;
  for (const auto &part : found)
    for (Mask m : part)
      out.push_back(from_mask(m, table));
  sort_canonical(out);
  return out;
}

CompletionAtom completion_atom(const Atom &atom, const Program &program, std::size_t limit) {
  const auto table = detail::atom_table(program);
  const int index = index_of(table, atom);
  if (index < 0)
    throw UnknownAtom(atom.name());
  check_limit(table.size(), limit);
  const IndexedProgram ip(program, table);
  const Mask bit = Mask{1} << index;

  std::vector<Mask> support_heads;
  std::vector<std::size_t> supporters;
  for (std::size_t r = 0; r < program.size(); ++r) {
    if (program.rules()[r].head.count(atom)) {
      supporters.push_back(r);
      support_heads.push_back(to_mask(program.rules()[r].head, table));
    }
  }

  std::set<Interpretation> satisfying;
  const Mask total = Mask{1} << table.size();
  for (Mask m = 0; m < total; ++m) {
    if (!(m & bit))
      continue;
    bool supported = false;
    for (std::size_t s = 0; s < supporters.size() && !supported; ++s)
      supported = (support_heads[s] & m) == bit && ip.body_true(supporters[s], m);
    if (!supported)
      satisfying.insert(from_mask(m, table));
  }
  AtomSet domain(table.begin(), table.end());
  return {atom, program, Body::truth_table(std::move(domain), std::move(satisfying))};
}

Program completion(const Program &program, std::size_t limit) {
  std::vector<Rule> rules = program.rules();
  for (const auto &atom : program.atoms())
    rules.push_back(Rule{{}, completion_atom(atom, program, limit).realized});
  return Program(std::move(rules));
}

bool sflp_via_completion(const Interpretation &interp, const Program &program, std::size_t limit) {
  const Program completed = completion(program, limit);
  auto ip = index_with(completed, interp);
  const Mask whole = to_mask(interp, ip.table());
  if (!ip.is_model(whole))
    return false;
  const Program reduced = completion(flp_reduct(program, interp), limit);
  const IndexedProgram reduced_ip(reduced, ip.table());
  for (Mask sub = (whole - 1) & whole; sub != whole; sub = (sub - 1) & whole) {
    if (reduced_ip.is_model(sub))
      return false;
    if (sub == 0)
      break;
  }
  return true;
}

} // namespace gasp
