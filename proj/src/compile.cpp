#include "gasp/compile.hpp"

#include <algorithm>

#include "gasp/error.hpp"
#include "gasp/parser.hpp"

namespace gasp {

namespace {

std::vector<std::pair<Atom, bool>> literals_of(const Conjunct &c) {
  std::vector<std::pair<Atom, bool>> out;
  for (const auto &a : c.positives)
    out.emplace_back(a, true);
  for (const auto &a : c.negatives)
    out.emplace_back(a, false);
  return out;
}

const Conjunct &disjunct(const Dnf &dnf, std::size_t i) {
  if (i < 1 || i > dnf.disjuncts.size())
    throw IndexOutOfRange("disjunct " + std::to_string(i) + " out of 1.." +
                          std::to_string(dnf.disjuncts.size()));
  return dnf.disjuncts[i - 1];
}

void require_compilable(const Program &program) {
  for (const auto &rule : program.rules())
    if (rule.head.size() > 1)
      throw DisjunctiveHead("compilation needs atomic heads: " + render(rule));
  for (const auto &atom : program.atoms())
    if (atom.is_reserved())
      throw InvalidArgument("input program uses reserved atom '" + atom.name() + "'");
}

} // namespace

AuxNames::AuxNames(std::size_t idx, std::size_t disjuncts)
    : index(idx), t(Atom::reserved("__aux_t_" + std::to_string(idx))) {
  for (std::size_t i = 0; i <= disjuncts; ++i)
    f.push_back(Atom::reserved("__aux_f_" + std::to_string(idx) + "_" + std::to_string(i)));
}

std::string_view to_string(TargetSemantics semantics) {
  return semantics == TargetSemantics::FLP ? "flp" : "sflp";
}

SemanticsKind to_kind(TargetSemantics semantics) {
  return semantics == TargetSemantics::FLP ? SemanticsKind::FLP : SemanticsKind::SFLP;
}

const AuxNames *CompilationMap::find(const Body &dnf) const {
  for (const auto &[body, names] : entries)
    if (body == dnf)
      return &names;
  return nullptr;
}

Rule tr(const Dnf &dnf, std::size_t i, const AuxNames &names) {
  const auto &c = disjunct(dnf, i);
  AtomSet head = c.negatives;
  head.insert(names.t);
  return Rule{std::move(head), Body::literals(c.positives, {names.f.at(0)})};
}

Rule fls_literal(const Dnf &dnf, std::size_t i, std::size_t j, const AuxNames &names) {
  const auto lits = literals_of(disjunct(dnf, i));
  if (j < 1 || j > lits.size())
    throw IndexOutOfRange("literal " + std::to_string(j) + " out of 1.." +
                          std::to_string(lits.size()));
  const auto &[atom, positive] = lits[j - 1];
  AtomSet head{names.f.at(i)};
  if (positive)
    return Rule{std::move(head), Body::literals({}, {atom, names.t})};
  return Rule{std::move(head), Body::literals({atom}, {names.t})};
}

Rule fls_final(const Dnf &dnf, const AuxNames &names) {
  AtomSet pos;
  for (std::size_t i = 1; i <= dnf.disjuncts.size(); ++i)
    pos.insert(names.f.at(i));
  return Rule{{names.f.at(0)}, Body::literals(std::move(pos), {names.t})};
}

std::vector<Rule> rew_atom(const Dnf &dnf, const AuxNames &names) {
  std::vector<Rule> out;
  const std::size_t k = dnf.disjuncts.size();
  for (std::size_t i = 1; i <= k; ++i)
    out.push_back(tr(dnf, i, names));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; j <= dnf.disjuncts[i - 1].literal_count(); ++j)
      out.push_back(fls_literal(dnf, i, j, names));
  out.push_back(fls_final(dnf, names));
  return out;
}

Body compilation_key(const Body &body) {
  return body.is<Dnf>() ? canonical(body) : to_dnf(body);
}

bool keeps_body(const Rule &rule, const CompileOptions &options) {
  if (options.rewrite_all)
    return false;
  return rule.is_constraint() ? is_single_literal(rule.body)
                              : is_single_positive_literal(rule.body);
}

std::pair<Program, CompilationMap> rew_flp(const Program &program, const CompileOptions &options) {
  require_compilable(program);
  const Program input = program.canonical();
  CompilationMap map;
  map.semantics = TargetSemantics::FLP;
  std::vector<Rule> rules;
  for (const auto &rule : input.rules()) {
    if (keeps_body(rule, options)) {
      rules.push_back(rule);
      continue;
    }
    if (!is_satisfiable(rule.body))
      continue;
    Body key = compilation_key(rule.body);
    const AuxNames *names = map.find(key);
    if (!names) {
      const std::size_t k = key.as<Dnf>().disjuncts.size();
      map.entries.emplace_back(std::move(key), AuxNames(map.entries.size() + 1, k));
      names = &map.entries.back().second;
    }
    rules.push_back(Rule{rule.head, Body::literals({names->t})});
  }
  for (const auto &[body, names] : map.entries)
    for (auto &r : rew_atom(body.as<Dnf>(), names))
      rules.push_back(std::move(r));
  return {Program(std::move(rules)), std::move(map)};
}

Rule supp_rule(const Atom &atom, const Program &program, const CompilationMap &map,
               const CompileOptions &options) {
  if (!program.atoms().count(atom))
    throw UnknownAtom(atom.name());
  AtomSet head;
  const Program canon = program.canonical();
  for (const auto &rule : canon.rules()) {
    if (rule.head != AtomSet{atom})
      continue;
    if (keeps_body(rule, options)) {
      head.insert(*rule.body.as<LiteralConjunction>().conjunct.positives.begin());
      continue;
    }
    if (!is_satisfiable(rule.body))
      continue;
    const AuxNames *names = map.find(compilation_key(rule.body));
    if (!names)
      throw InvalidArgument("compilation map has no entry for the body of " + render(rule));
    head.insert(names->t);
  }
  return Rule{std::move(head), Body::literals({atom})};
}

std::pair<Program, CompilationMap> rew_sflp(const Program &program, const CompileOptions &options) {
  auto [flp, map] = rew_flp(program, options);
  map.semantics = TargetSemantics::SFLP;
  std::vector<Rule> rules = flp.rules();
  for (const auto &atom : program.atoms())
    rules.push_back(supp_rule(atom, program, map, options));
  return {Program(std::move(rules)), std::move(map)};
}

std::pair<Program, CompilationMap> rewrite(const Program &program, TargetSemantics semantics,
                                           const CompileOptions &options) {
  return semantics == TargetSemantics::FLP ? rew_flp(program, options)
                                           : rew_sflp(program, options);
}

Interpretation expansion(const Interpretation &interp, const Program &program,
                         const CompilationMap &map) {
  const AtomSet known = program.atoms();
  for (const auto &atom : interp)
    if (!known.count(atom))
      throw UnknownAtom(atom.name());
  Interpretation out = interp;
  for (const auto &[body, names] : map.entries) {
    if (eval(body, interp))
      out.insert(names.t);
    else
      out.insert(names.f.begin(), names.f.end());
  }
  return out;
}

Interpretation contraction(const Interpretation &interp, const Program &program) {
  const AtomSet known = program.atoms();
  Interpretation out;
  std::set_intersection(interp.begin(), interp.end(), known.begin(), known.end(),
                        std::inserter(out, out.end()));
  return out;
}

CompilationReport verify_compilation(const Program &program, TargetSemantics semantics,
                                     const CompileOptions &options, std::size_t limit) {
  CompilationReport report;
  report.semantics = semantics;
  const auto [rewritten, map] = rewrite(program, semantics, options);
  report.source_answer_sets = enumerate(program, to_kind(semantics), {limit});
  report.target_answer_sets = solve_flp_literal(rewritten);

  auto contains = [](const std::vector<Interpretation> &sets, const Interpretation &i) {
    return std::binary_search(sets.begin(), sets.end(), i, ShortlexLess{});
  };
  const std::string kind(to_string(to_kind(semantics)));
  for (const auto &interp : report.source_answer_sets) {
    const auto expanded = expansion(interp, program, map);
    if (!contains(report.target_answer_sets, expanded))
      report.violations.push_back(
          {CompilationViolation::Kind::ExpansionNotAnswerSet, "expansion of " + kind + " answer set is not an FLP answer set of the rewriting",
           interp});
    if (contraction(expanded, program) != interp)
      report.violations.push_back({CompilationViolation::Kind::ExpansionNotInverted,
                                   "contraction does not invert expansion", interp});
  }
  for (const auto &interp : report.target_answer_sets) {
    const auto contracted = contraction(interp, program);
    if (!contains(report.source_answer_sets, contracted))
      report.violations.push_back(
          {CompilationViolation::Kind::ContractionNotAnswerSet, "contraction of rewriting answer set is not a " + kind + " answer set", interp});
    else if (expansion(contracted, program, map) != interp)
      report.violations.push_back({CompilationViolation::Kind::NotAnExpansion,
                                   "answer set of the rewriting is not an expansion", interp});
  }
  return report;
}

} // namespace gasp
