#include "gasp/program.hpp"

#include <algorithm>
#include <set>

namespace gasp {

AtomSet Program::atoms() const {
  AtomSet out;
  for (const auto &rule : rules_) {
    out.insert(rule.head.begin(), rule.head.end());
    auto dom = domain(rule.body);
    out.insert(dom.begin(), dom.end());
  }
  return out;
}

bool Program::has_atomic_heads() const {
  return std::all_of(rules_.begin(), rules_.end(),
                     [](const Rule &r) { return r.head.size() <= 1; });
}

Rule canonical(const Rule &rule) { return Rule{rule.head, canonical(rule.body)}; }

Program Program::canonical() const {
  std::vector<Rule> out;
  std::set<Rule> seen;
  for (const auto &rule : rules_) {
    auto c = gasp::canonical(rule);
    if (seen.insert(c).second)
      out.push_back(std::move(c));
  }
  return Program(std::move(out));
}

bool operator==(const Program &a, const Program &b) {
  auto as_set = [](const Program &p) {
    std::set<Rule> out;
    for (const auto &rule : p.rules_)
      out.insert(canonical(rule));
    return out;
  };
  return as_set(a) == as_set(b);
}

bool is_convex_program(const Program &program) {
  return std::all_of(program.rules().begin(), program.rules().end(),
                     [](const Rule &r) { return is_convex(r.body); });
}

} // namespace gasp
