#include "gasp/harness.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <thread>

#include "gasp/compile.hpp"
#include "gasp/error.hpp"
#include "gasp/parser.hpp"

namespace gasp {

namespace {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(engine_() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return engine_() & 1; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
  std::mt19937_64 engine_;
};

class Generator {
public:
  explicit Generator(const GenConfig &cfg) : cfg_(cfg), rng_(cfg.seed) {
    for (std::size_t i = 0; i < cfg.atom_count; ++i)
      atoms_.emplace_back(std::string(1, static_cast<char>('a' + i)));
  }

  Program program() {
    std::vector<Rule> rules;
    for (std::size_t r = 0; r < cfg_.rule_count; ++r) {
      AtomSet head = this->head();
      rules.push_back(Rule{std::move(head), body()});
    }
    return Program(std::move(rules));
  }

private:
  AtomSet head() {
    if (cfg_.allow_constraints && rng_.below(6) == 0)
      return {};
    std::size_t size = 1;
    if (cfg_.allow_disjunctive_heads && atoms_.size() >= 2 && rng_.below(3) == 0)
      size = 2;
    return subset(size);
  }

  AtomSet subset(std::size_t size) { return subset_of(AtomSet(atoms_.begin(), atoms_.end()), size); }

  AtomSet subset_of(const AtomSet &from, std::size_t size) {
    std::vector<Atom> pool(from.begin(), from.end());
    AtomSet out;
    for (std::size_t i = 0; i < size && !pool.empty(); ++i) {
      auto pick = rng_.below(pool.size());
      out.insert(pool[pick]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
  }

  std::size_t body_size(std::size_t min) {
    const std::size_t max = std::min(cfg_.max_body_domain, atoms_.size());
    return rng_.between(std::min(min, max), max);
  }

  Conjunct signed_conjunct(const AtomSet &dom) {
    AtomSet pos, neg;
    for (const auto &atom : dom)
      (rng_.coin() ? pos : neg).insert(atom);
    return Conjunct(std::move(pos), std::move(neg));
  }

  BodyKind kind() {
    double total = 0;
    for (double w : cfg_.body_mix)
      total += w;
    double x = rng_.unit() * total;
    for (std::size_t k = 0; k < cfg_.body_mix.size(); ++k) {
      if (x < cfg_.body_mix[k])
        return static_cast<BodyKind>(k);
      x -= cfg_.body_mix[k];
    }
    for (std::size_t k = cfg_.body_mix.size(); k-- > 0;)
      if (cfg_.body_mix[k] > 0)
        return static_cast<BodyKind>(k);
    return BodyKind::Literals;
  }

  Body body() {
    switch (kind()) {
    case BodyKind::Literals:
      return Body::literals(signed_conjunct(subset(body_size(0))));
    case BodyKind::Count: {
      AtomSet dom = subset(body_size(1));
      const auto cmp = static_cast<Comparator>(rng_.below(6));
      const std::size_t bound = rng_.between(0, dom.size() + 1);
      return Body::count(std::move(dom), cmp, bound);
    }
    case BodyKind::Dnf: {
      const AtomSet dom = subset(body_size(1));
      std::vector<Conjunct> disjuncts;
      const std::size_t k = rng_.between(1, 3);
      for (std::size_t i = 0; i < k; ++i)
        disjuncts.push_back(signed_conjunct(subset_of(dom, rng_.between(1, dom.size()))));
      return Body::dnf(std::move(disjuncts));
    }
    case BodyKind::TruthTable:
      return truth_table();
    }
    return Body();
  }

  Body truth_table() {
    const AtomSet dom = subset(body_size(1));
    const std::vector<Atom> table(dom.begin(), dom.end());
    const bool force_non_convex = table.size() >= 2 && rng_.coin();
    for (int attempt = 0;; ++attempt) {
      std::set<Interpretation> sats;
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << table.size()); ++m)
        if (rng_.coin())
          sats.insert(from_mask(m, table));
      auto body = Body::truth_table(dom, std::move(sats));
      if (!force_non_convex || !is_convex(body) || attempt >= 64)
        return body;
    }
  }

  const GenConfig &cfg_;
  Rng rng_;
  std::vector<Atom> atoms_;
};

std::string witness_text(const Program &program, const std::vector<Interpretation> &interps) {
  std::string out = render(program);
  for (const auto &i : interps)
    out += "witness: " + to_string(i) + "\n";
  return out;
}

std::vector<Interpretation> all_subsets(const Program &program) {
  const AtomSet all = program.atoms();
  const std::vector<Atom> table(all.begin(), all.end());
  std::vector<Interpretation> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << table.size()); ++m)
    out.push_back(from_mask(m, table));
  return out;
}

TheoremCheck compilation_check(const Program &program, TargetSemantics semantics,
                               std::size_t limit) {
  TheoremCheck check;
  check.name = semantics == TargetSemantics::FLP ? theorem::kCompileFlp : theorem::kCompileSflp;
  if (!program.has_atomic_heads()) {
    check.applicable = false;
    return check;
  }
  const auto report = verify_compilation(program, semantics, {}, limit);
  check.passed = report.ok();
  if (!check.passed) {
    check.witness = render(program);
    for (const auto &v : report.violations)
      check.witness += v.description + ": " + to_string(v.witness) + "\n";
  }
  return check;
}

} // namespace

void GenConfig::validate() const {
  if (atom_count < 1 || atom_count > 8)
    throw InvalidArgument("atom_count must be in 1..8");
  if (rule_count > 10)
    throw InvalidArgument("rule_count must be in 0..10");
  if (std::any_of(body_mix.begin(), body_mix.end(), [](double w) { return w < 0; }) ||
      std::all_of(body_mix.begin(), body_mix.end(), [](double w) { return w == 0; }))
    throw InvalidArgument("body_mix weights must be non-negative and not all zero");
  if (max_body_domain < 1)
    throw InvalidArgument("max_body_domain must be positive");
}

Program generate(const GenConfig &cfg) {
  cfg.validate();
  return Generator(cfg).program();
}

bool TheoremReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const TheoremCheck &c) { return !c.applicable || c.passed; });
}

const TheoremCheck *TheoremReport::find(const std::string &name) const {
  for (const auto &c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

TheoremReport check_theorems(const Program &program, std::size_t limit) {
  TheoremReport report;
  const EnumerateOptions options{limit, 1};
  const auto flp = enumerate(program, SemanticsKind::FLP, options);
  const auto sflp = enumerate(program, SemanticsKind::SFLP, options);

  {
    TheoremCheck check{theorem::kFlpInSflp, true, true, {}};
    std::vector<Interpretation> missing;
    for (const auto &i : flp)
      if (std::find(sflp.begin(), sflp.end(), i) == sflp.end())
        missing.push_back(i);
    check.passed = missing.empty();
    if (!check.passed)
      check.witness = witness_text(program, missing);
    report.checks.push_back(std::move(check));
  }
  {
    TheoremCheck check{theorem::kConvexEquivalence, true, true, {}};
    check.applicable = is_convex_program(program);
    if (check.applicable && flp != sflp) {
      check.passed = false;
      std::vector<Interpretation> diff;
      std::set_symmetric_difference(flp.begin(), flp.end(), sflp.begin(), sflp.end(),
                                    std::back_inserter(diff), ShortlexLess{});
      check.witness = witness_text(program, diff);
    }
    report.checks.push_back(std::move(check));
  }

  const auto candidates = all_subsets(program);
  {
    TheoremCheck check{theorem::kCompletionModels, true, true, {}};
    const Program completed = completion(program, limit);
    std::vector<Interpretation> bad;
    for (const auto &i : candidates)
      if (is_supported_model(i, program) != is_model(i, completed))
        bad.push_back(i);
    check.passed = bad.empty();
    if (!check.passed)
      check.witness = witness_text(program, bad);
    report.checks.push_back(std::move(check));
  }
  {
    TheoremCheck check{theorem::kCompletionSflp, true, true, {}};
    std::vector<Interpretation> bad;
    for (const auto &i : candidates)
      if (is_sflp_answer_set(i, program) != sflp_via_completion(i, program, limit))
        bad.push_back(i);
    check.passed = bad.empty();
    if (!check.passed)
      check.witness = witness_text(program, bad);
    report.checks.push_back(std::move(check));
  }

  report.checks.push_back(compilation_check(program, TargetSemantics::FLP, limit));
  report.checks.push_back(compilation_check(program, TargetSemantics::SFLP, limit));
  return report;
}

std::vector<RandomRun> check_random(GenConfig cfg, std::uint64_t first, std::size_t count,
                                    unsigned threads) {
  cfg.validate();
  if (threads == 0)
    threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

  std::vector<std::optional<RandomRun>> slots(count);
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < count; i += threads) {
      GenConfig local = cfg;
      local.seed = first + i;
      Program program = generate(local);
      TheoremReport report = check_theorems(program);
      slots[i] = RandomRun{local.seed, std::move(program), std::move(report)};
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(work, w);
    for (auto &t : pool)
      t.join();
  }
  std::vector<RandomRun> out;
  out.reserve(count);
  for (auto &slot : slots)
    out.push_back(std::move(*slot));
  return out;
}

} // namespace gasp
