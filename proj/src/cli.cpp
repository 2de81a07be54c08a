#include "gasp/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gasp/compile.hpp"
#include "gasp/error.hpp"
#include "gasp/harness.hpp"
#include "gasp/parser.hpp"
#include "gasp/semantics.hpp"

namespace gasp::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input = "-";
  bool json = false;
  std::size_t limit = kDefaultAtomLimit;
  bool limit_given = false;
  std::string semantics = "flp";
  bool rewrite_all = false;
  std::string emit = "text";
  bool random = false;
  std::size_t seeds = 100;
  std::size_t atoms = 3;
  std::size_t rules = 4;
  std::uint64_t seed_start = 0;
};

class UsageError : public Error {
public:
  using Error::Error;
};

std::size_t effective_limit(const Options &opts) {
  if (opts.limit_given)
    return opts.limit;
  if (const char *env = std::getenv("GASP_LIMIT")) {
    try {
      std::size_t used = 0;
      const unsigned long value = std::stoul(env, &used);
      if (used == std::string_view(env).size())
        return value;
    } catch (const std::exception &) {
    }
    throw UsageError("GASP_LIMIT must be a non-negative integer, got '" + std::string(env) + "'");
  }
  return kDefaultAtomLimit;
}

Program read_program(const Options &opts, std::istream &in, bool allow_reserved) {
  SourceProgram src;
  if (opts.input == "-") {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    src.text = buffer.str();
  } else {
    std::ifstream file(opts.input, std::ios::binary);
    if (!file)
      throw UsageError("cannot open '" + opts.input + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    src.text = buffer.str();
    src.origin = opts.input;
  }
  try {
    return parse_program(src, ParseOptions{allow_reserved});
  } catch (const ParseError &e) {
    throw ParseError(e.line(), e.column(), e.expected(), src.origin + ":" + e.what());
  }
}

Json atom_array(const AtomSet &set) {
  Json out = Json::array();
  for (const auto &atom : set)
    out.push_back(atom.name());
  return out;
}

int enumerate_command(SemanticsKind kind, const Options &opts, std::istream &in,
                      std::ostream &out) {
  const Program program = read_program(opts, in, true);
  // Literal bodies are convex, so FLP and SFLP coincide and the search
  // solver applies without an atom cap.
  const bool literal = std::all_of(program.rules().begin(), program.rules().end(),
                                   [](const Rule &r) { return r.body.is<LiteralConjunction>(); });
  const bool searchable = literal && (kind == SemanticsKind::FLP || kind == SemanticsKind::SFLP);
  const auto sets = searchable ? solve_flp_literal(program)
                               : enumerate(program, kind, {effective_limit(opts), 0});
  if (opts.json) {
    Json doc;
    doc["semantics"] = std::string(to_string(kind));
    doc["atoms"] = atom_array(program.atoms());
    doc["answer_sets"] = Json::array();
    for (const auto &s : sets)
      doc["answer_sets"].push_back(atom_array(s));
    out << doc.dump() << "\n";
  } else {
    for (const auto &s : sets)
      out << to_string(s) << "\n";
  }
  return kOk;
}

int completion_command(const Options &opts, std::istream &in, std::ostream &out) {
  const Program program = read_program(opts, in, true);
  out << render(completion(program, effective_limit(opts)));
  return kOk;
}

int convexity_command(const Options &opts, std::istream &in, std::ostream &out) {
  const Program program = read_program(opts, in, true).canonical();
  const bool convex = is_convex_program(program);
  if (opts.json) {
    Json doc;
    doc["rules"] = Json::array();
    for (const auto &rule : program.rules())
      doc["rules"].push_back({{"rule", render(rule)}, {"convex", is_convex(rule.body)}});
    doc["convex"] = convex;
    out << doc.dump() << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < program.size(); ++i) {
    const auto &rule = program.rules()[i];
    out << "rule " << i + 1 << ": " << (is_convex(rule.body) ? "convex" : "non-convex") << "  "
        << render(rule) << "\n";
  }
  out << "program: " << (convex ? "convex" : "non-convex") << "\n";
  return kOk;
}

TargetSemantics parse_target(const std::string &name) {
  if (name == "flp")
    return TargetSemantics::FLP;
  if (name == "sflp")
    return TargetSemantics::SFLP;
  throw UsageError("--semantics must be flp or sflp");
}

int compile_command(const Options &opts, std::istream &in, std::ostream &out) {
  const Program program = read_program(opts, in, false);
  const auto semantics = parse_target(opts.semantics);
  const auto [rewritten, map] = rewrite(program, semantics, CompileOptions{opts.rewrite_all});
  if (opts.emit == "json" || opts.json) {
    Json doc;
    doc["semantics"] = std::string(to_string(semantics));
    doc["rules"] = Json::array();
    const Program canon = rewritten.canonical();
    for (const auto &rule : canon.rules())
      doc["rules"].push_back(render(rule));
    doc["aux_map"] = Json::array();
    for (const auto &[body, names] : map.entries) {
      Json f = Json::array();
      for (const auto &atom : names.f)
        f.push_back(atom.name());
      doc["aux_map"].push_back(
          {{"index", names.index}, {"body", render(body)}, {"t", names.t.name()}, {"f", f}});
    }
    out << doc.dump() << "\n";
  } else {
    out << render(rewritten);
  }
  return kOk;
}

std::string verdict(const TheoremCheck &check) {
  if (!check.applicable)
    return "N/A ";
  return check.passed ? "PASS" : "FAIL";
}

int verify_input(const Options &opts, std::istream &in, std::ostream &out) {
  const Program program = read_program(opts, in, false);
  const auto report = check_theorems(program, effective_limit(opts));
  for (const auto &check : report.checks) {
    out << verdict(check) << "  " << check.name << "\n";
    if (check.applicable && !check.passed)
      out << check.witness;
  }
  return report.ok() ? kOk : kViolation;
}

int verify_random(const Options &opts, std::ostream &out) {
  GenConfig cfg;
  cfg.atom_count = opts.atoms;
  cfg.rule_count = opts.rules;
  const auto runs = check_random(cfg, opts.seed_start, opts.seeds);

  struct Tally {
    std::size_t applicable = 0;
    std::size_t violations = 0;
    const RandomRun *first_failure = nullptr;
  };
  std::vector<std::string> order;
  std::map<std::string, Tally> tallies;
  for (const auto &run : runs) {
    for (const auto &check : run.report.checks) {
      if (!tallies.count(check.name))
        order.push_back(check.name);
      auto &t = tallies[check.name];
      if (!check.applicable)
        continue;
      ++t.applicable;
      if (!check.passed) {
        ++t.violations;
        if (!t.first_failure)
          t.first_failure = &run;
      }
    }
  }
  out << std::left << std::setw(38) << "check" << std::setw(12) << "applicable"
      << std::setw(12) << "violations" << "result\n";
  bool ok = true;
  for (const auto &name : order) {
    const auto &t = tallies[name];
    ok = ok && t.violations == 0;
    out << std::left << std::setw(38) << name << std::setw(12) << t.applicable << std::setw(12)
        << t.violations << (t.violations == 0 ? "PASS" : "FAIL") << "\n";
  }
  for (const auto &name : order) {
    const auto &t = tallies[name];
    if (!t.first_failure)
      continue;
    out << "\nfirst violation of '" << name << "' (seed " << t.first_failure->seed << "):\n"
        << t.first_failure->report.find(name)->witness;
  }
  out << "\nseeds " << opts.seed_start << ".." << opts.seed_start + opts.seeds - (opts.seeds > 0)
      << ", " << opts.atoms << " atoms, " << opts.rules << " rules\n";
  return ok ? kOk : kViolation;
}

void add_input(CLI::App *cmd, Options &opts) {
  cmd->add_option("input", opts.input, "program file, or - for stdin");
  cmd->add_option("--limit", opts.limit, "maximum number of atoms")
      ->each([&](const std::string &) { opts.limit_given = true; });
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err) {
  Options opts;
  CLI::App app{"Answer sets of programs with generalized atoms (FLP and SFLP semantics)", "gasp"};
  app.require_subcommand(1);

  struct Enumerating {
    const char *name;
    SemanticsKind kind;
    const char *help;
  };
  const Enumerating enumerating[] = {
      {"models", SemanticsKind::Classical, "print all models"},
      {"supported", SemanticsKind::Supported, "print all supported models"},
      {"flp", SemanticsKind::FLP, "print all FLP answer sets"},
      {"sflp", SemanticsKind::SFLP, "print all SFLP answer sets"},
  };
  std::vector<std::pair<CLI::App *, SemanticsKind>> enum_cmds;
  for (const auto &e : enumerating) {
    auto *cmd = app.add_subcommand(e.name, e.help);
    add_input(cmd, opts);
    cmd->add_flag("--json", opts.json, "JSON output");
    enum_cmds.emplace_back(cmd, e.kind);
  }

  auto *completion_cmd = app.add_subcommand("completion", "print the completed program");
  add_input(completion_cmd, opts);

  auto *convexity_cmd = app.add_subcommand("convexity", "per-rule and program convexity");
  add_input(convexity_cmd, opts);
  convexity_cmd->add_flag("--json", opts.json, "JSON output");

  auto *compile_cmd = app.add_subcommand("compile", "rewrite into an aggregate-free program");
  add_input(compile_cmd, opts);
  compile_cmd->add_option("--semantics", opts.semantics, "flp or sflp")
      ->check(CLI::IsMember({"flp", "sflp"}));
  compile_cmd->add_flag("--rewrite-all", opts.rewrite_all, "rewrite single-literal bodies too");
  compile_cmd->add_option("--emit", opts.emit, "text or json")->check(CLI::IsMember({"text", "json"}));
  compile_cmd->add_flag("--json", opts.json, "same as --emit json");

  auto *verify_cmd = app.add_subcommand("verify", "check the semantic theorems");
  add_input(verify_cmd, opts);
  verify_cmd->add_flag("--random", opts.random, "check generated programs instead of the input");
  verify_cmd->add_option("--seeds", opts.seeds, "number of generated programs");
  verify_cmd->add_option("--seed-start", opts.seed_start, "first seed");
  verify_cmd->add_option("--atoms", opts.atoms, "atoms per generated program (1..8)");
  verify_cmd->add_option("--rules", opts.rules, "rules per generated program (0..10)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "gasp: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    for (const auto &[cmd, kind] : enum_cmds)
      if (cmd->parsed())
        return enumerate_command(kind, opts, in, out);
    if (completion_cmd->parsed())
      return completion_command(opts, in, out);
    if (convexity_cmd->parsed())
      return convexity_command(opts, in, out);
    if (compile_cmd->parsed())
      return compile_command(opts, in, out);
    if (verify_cmd->parsed())
      return opts.random ? verify_random(opts, out) : verify_input(opts, in, out);
  } catch (const TooManyAtoms &e) {
    err << "gasp: " << e.what() << "\n";
    return kLimitExceeded;
  } catch (const Error &e) {
    err << "gasp: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

} // namespace gasp::cli
