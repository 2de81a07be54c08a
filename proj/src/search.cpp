#include <algorithm>
#include <cstdint>

#include "gasp/error.hpp"
#include "gasp/semantics.hpp"

namespace gasp {

namespace {

constexpr std::int8_t kUnset = -1;

struct LiteralRule {
  std::vector<int> head;
  std::vector<int> pos;
  std::vector<int> neg;
};

using Assignment = std::vector<std::int8_t>;

enum class State { False, True, Open };

struct BodyState {
  State state;
  std::size_t open = 0;
  int last_atom = -1;
  bool last_positive = false;
};

BodyState body_state(const LiteralRule &r, const Assignment &v) {
  BodyState out{State::True};
  for (int a : r.pos) {
    if (v[a] == 0)
      return {State::False};
    if (v[a] == kUnset) {
      ++out.open;
      out.last_atom = a;
      out.last_positive = true;
    }
  }
  for (int a : r.neg) {
    if (v[a] == 1)
      return {State::False};
    if (v[a] == kUnset) {
      ++out.open;
      out.last_atom = a;
      out.last_positive = false;
    }
  }
  if (out.open > 0)
    out.state = State::Open;
  return out;
}

struct HeadState {
  bool satisfied = false;
  std::size_t open = 0;
  int last_atom = -1;
};

HeadState head_state(const LiteralRule &r, const Assignment &v) {
  HeadState out;
  for (int a : r.head) {
    if (v[a] == 1)
      return {true};
    if (v[a] == kUnset) {
      ++out.open;
      out.last_atom = a;
    }
  }
  return out;
}

// Sets v[a] = value; false on a clash with an existing value.
bool assign(Assignment &v, int a, std::int8_t value, bool &changed) {
  if (v[a] == value)
    return true;
  if (v[a] != kUnset)
    return false;
  v[a] = value;
  changed = true;
  return true;
}

// Unit propagation of "every applicable rule is satisfied".
bool propagate_rules(const std::vector<LiteralRule> &rules, const std::vector<std::size_t> &active,
                     Assignment &v, bool &changed) {
  for (std::size_t r : active) {
    const auto &rule = rules[r];
    const auto body = body_state(rule, v);
    if (body.state == State::False)
      continue;
    const auto head = head_state(rule, v);
    if (head.satisfied)
      continue;
    if (body.state == State::True) {
      if (head.open == 0)
        return false;
      if (head.open == 1 && !assign(v, head.last_atom, 1, changed))
        return false;
    } else if (head.open == 0 && body.open == 1) {
      if (!assign(v, body.last_atom, body.last_positive ? 0 : 1, changed))
        return false;
    }
  }
  return true;
}

class Solver {
public:
  Solver(std::vector<LiteralRule> rules, std::size_t atoms)
      : rules_(std::move(rules)), atoms_(atoms), heads_of_(atoms) {
    std::vector<std::size_t> occurrences(atoms, 0);
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      all_.push_back(r);
      for (int a : rules_[r].head) {
        heads_of_[a].push_back(r);
        ++occurrences[a];
      }
      for (int a : rules_[r].pos)
        ++occurrences[a];
      for (int a : rules_[r].neg)
        ++occurrences[a];
    }
    // Branch on the most constrained atoms first; the rest mostly follow by
    // propagation.
    for (std::size_t a = 0; a < atoms; ++a)
      order_.push_back(static_cast<int>(a));
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return occurrences[x] > occurrences[y]; });
  }

  std::vector<std::vector<int>> run() {
    Assignment v(atoms_, kUnset);
    search(v);
    return found_;
  }

private:
  // Rule propagation plus support: a true atom needs a rule that can still
  // have it as the only true head atom with a true body.
  bool propagate(Assignment &v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      if (!propagate_rules(rules_, all_, v, changed))
        return false;
      for (std::size_t a = 0; a < atoms_; ++a) {
        if (v[a] == 0)
          continue;
        std::size_t candidates = 0;
        std::size_t only = 0;
        for (std::size_t r : heads_of_[a]) {
          const auto &rule = rules_[r];
          if (body_state(rule, v).state == State::False)
            continue;
          bool blocked = std::any_of(rule.head.begin(), rule.head.end(), [&](int h) {
            return h != static_cast<int>(a) && v[h] == 1;
          });
          if (!blocked) {
            ++candidates;
            only = r;
          }
        }
        if (candidates == 0) {
          if (v[a] == 1 || !assign(v, static_cast<int>(a), 0, changed))
            return false;
        } else if (candidates == 1 && v[a] == 1) {
          const auto &rule = rules_[only];
          for (int p : rule.pos)
            if (!assign(v, p, 1, changed))
              return false;
          for (int n : rule.neg)
            if (!assign(v, n, 0, changed))
              return false;
          for (int h : rule.head)
            if (h != static_cast<int>(a) && !assign(v, h, 0, changed))
              return false;
        }
      }
    }
    return true;
  }

  void search(Assignment &v) {
    if (!propagate(v))
      return;
    auto open = std::find_if(order_.begin(), order_.end(), [&](int a) { return v[a] == kUnset; });
    if (open == order_.end()) {
      if (is_minimal(v))
        found_.push_back(true_atoms(v));
      return;
    }
    const int index = *open;
    for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
      Assignment next = v;
      next[index] = value;
      search(next);
    }
  }

  static std::vector<int> true_atoms(const Assignment &v) {
    std::vector<int> out;
    for (std::size_t a = 0; a < v.size(); ++a)
      if (v[a] == 1)
        out.push_back(static_cast<int>(a));
    return out;
  }

  // No proper subset of the total assignment `model` satisfies the rules
  // whose bodies it makes true.
  bool is_minimal(const Assignment &model) const {
    std::vector<std::size_t> reduct;
    for (std::size_t r = 0; r < rules_.size(); ++r)
      if (body_state(rules_[r], model).state == State::True)
        reduct.push_back(r);
    const auto members = true_atoms(model);
    if (members.empty())
      return true;
    Assignment v(atoms_, 0);
    for (int a : members)
      v[a] = kUnset;
    return !smaller_model(reduct, members, v);
  }

  bool smaller_model(const std::vector<std::size_t> &reduct, const std::vector<int> &members,
                     Assignment &v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      if (!propagate_rules(rules_, reduct, v, changed))
        return false;
      // At least one member must be dropped.
      std::size_t open = 0;
      int last = -1;
      bool dropped = false;
      for (int a : members) {
        if (v[a] == 0)
          dropped = true;
        else if (v[a] == kUnset) {
          ++open;
          last = a;
        }
      }
      if (!dropped) {
        if (open == 0)
          return false;
        if (open == 1 && !assign(v, last, 0, changed))
          return false;
      }
    }
    auto it = std::find_if(members.begin(), members.end(), [&](int a) { return v[a] == kUnset; });
    if (it == members.end())
      return true;
    for (std::int8_t value : {std::int8_t{0}, std::int8_t{1}}) {
      Assignment next = v;
      next[*it] = value;
      if (smaller_model(reduct, members, next))
        return true;
    }
    return false;
  }

  std::vector<LiteralRule> rules_;
  std::size_t atoms_;
  std::vector<std::size_t> all_;
  std::vector<std::vector<std::size_t>> heads_of_;
  std::vector<int> order_;
  std::vector<std::vector<int>> found_;
};

std::vector<int> indices(const AtomSet &set, const std::vector<Atom> &table) {
  std::vector<int> out;
  for (const auto &atom : set)
    out.push_back(index_of(table, atom));
  return out;
}

} // namespace

std::vector<Interpretation> solve_flp_literal(const Program &program) {
  const AtomSet all = program.atoms();
  const std::vector<Atom> table(all.begin(), all.end());
  std::vector<LiteralRule> rules;
  for (const auto &rule : program.rules()) {
    const auto *lc = std::get_if<LiteralConjunction>(&rule.body.value());
    if (!lc)
      throw InvalidArgument("solve_flp_literal needs literal-conjunction bodies only");
    rules.push_back({indices(rule.head, table), indices(lc->conjunct.positives, table),
                     indices(lc->conjunct.negatives, table)});
  }
  std::vector<Interpretation> out;
  for (const auto &members : Solver(std::move(rules), table.size()).run()) {
    Interpretation interp;
    for (int a : members)
      interp.insert(interp.end(), table[a]);
    out.push_back(std::move(interp));
  }
  sort_canonical(out);
  return out;
}

} // namespace gasp
