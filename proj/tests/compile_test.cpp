#include <gtest/gtest.h>

#include "gasp/compile.hpp"
#include "gasp/error.hpp"
#include "gasp/harness.hpp"
#include "test_util.hpp"

namespace gasp {
namespace {

using test::I;
using test::sets;

const Dnf &p1_body() {
  static const Body dnf = to_dnf(Body::count(atoms({"a", "b"}), Comparator::Ne, 1));
  return dnf.as<Dnf>();
}

const AuxNames &p1_names() {
  static const AuxNames names(1, 2);
  return names;
}

TEST(AuxNames, Scheme) {
  const AuxNames names(3, 2);
  EXPECT_EQ(names.t.name(), "__aux_t_3");
  ASSERT_EQ(names.f.size(), 3u);
  EXPECT_EQ(names.f[0].name(), "__aux_f_3_0");
  EXPECT_EQ(names.f[2].name(), "__aux_f_3_2");
}

TEST(Tr, PaperRules) {
  EXPECT_EQ(tr(p1_body(), 1, p1_names()), test::rule("__aux_t_1 | a | b :- not __aux_f_1_0."));
  EXPECT_EQ(tr(p1_body(), 2, p1_names()), test::rule("__aux_t_1 :- a, b, not __aux_f_1_0."));
  EXPECT_THROW(tr(p1_body(), 0, p1_names()), IndexOutOfRange);
  EXPECT_THROW(tr(p1_body(), 3, p1_names()), IndexOutOfRange);
}

TEST(Tr, EmptyDisjunct) {
  const Body always = to_dnf(Body());
  EXPECT_EQ(tr(always.as<Dnf>(), 1, AuxNames(1, 1)), test::rule("__aux_t_1 :- not __aux_f_1_0."));
}

TEST(FlsLiteral, PaperRules) {
  EXPECT_EQ(fls_literal(p1_body(), 1, 1, p1_names()), test::rule("__aux_f_1_1 :- a, not __aux_t_1."));
  EXPECT_EQ(fls_literal(p1_body(), 2, 1, p1_names()),
            test::rule("__aux_f_1_2 :- not a, not __aux_t_1."));
  EXPECT_THROW(fls_literal(p1_body(), 1, 3, p1_names()), IndexOutOfRange);
  const Body always = to_dnf(Body());
  EXPECT_THROW(fls_literal(always.as<Dnf>(), 1, 1, AuxNames(1, 1)), IndexOutOfRange);
}

TEST(FlsFinal, PaperRule) {
  EXPECT_EQ(fls_final(p1_body(), p1_names()),
            test::rule("__aux_f_1_0 :- __aux_f_1_1, __aux_f_1_2, not __aux_t_1."));
  const Body single = to_dnf(Body::literals(atoms({"a"})));
  const Rule r = fls_final(single.as<Dnf>(), AuxNames(1, 1));
  EXPECT_EQ(r, test::rule("__aux_f_1_0 :- __aux_f_1_1, not __aux_t_1."));
  for (const auto &atom : r.head)
    EXPECT_TRUE(atom.is_reserved());
  for (const auto &atom : domain(r.body))
    EXPECT_TRUE(atom.is_reserved());
}

TEST(RewAtom, PaperListing) {
  const auto rules = rew_atom(p1_body(), p1_names());
  const std::vector<Rule> expected{
      test::rule("__aux_t_1 | a | b :- not __aux_f_1_0."),
      test::rule("__aux_t_1 :- a, b, not __aux_f_1_0."),
      test::rule("__aux_f_1_1 :- a, not __aux_t_1."),
      test::rule("__aux_f_1_1 :- b, not __aux_t_1."),
      test::rule("__aux_f_1_2 :- not a, not __aux_t_1."),
      test::rule("__aux_f_1_2 :- not b, not __aux_t_1."),
      test::rule("__aux_f_1_0 :- __aux_f_1_1, __aux_f_1_2, not __aux_t_1."),
  };
  EXPECT_EQ(rules, expected);
  const Body single = to_dnf(Body::literals(atoms({"a"})));
  EXPECT_EQ(rew_atom(single.as<Dnf>(), AuxNames(1, 1)).size(), 3u);
}

TEST(RewFlp, P1Golden) {
  const auto [rewritten, map] = rew_flp(test::corpus("p1"));
  EXPECT_EQ(render(rewritten), test::read_file(std::string(GASP_GOLDEN_DIR) + "/rew_flp_p1.gasp"));
  ASSERT_EQ(map.entries.size(), 1u);
  EXPECT_EQ(map.entries[0].first.as<Dnf>(), p1_body());
  EXPECT_TRUE(solve_flp_literal(rewritten).empty());
}

TEST(RewFlp, P2AndP3) {
  const auto [p1, map1] = rew_flp(test::corpus("p1"));
  const auto [p2, map2] = rew_flp(test::corpus("p2"));
  std::vector<Rule> expected = p1.rules();
  expected.push_back(test::rule("a :- b."));
  expected.push_back(test::rule("b :- a."));
  EXPECT_EQ(p2, Program(expected));
  EXPECT_EQ(solve_flp_literal(p2), sets({"__aux_t_1 a b"}));

  const auto [p3, map3] = rew_flp(test::corpus("p3"));
  expected = p1.rules();
  expected.push_back(test::rule(":- not a."));
  expected.push_back(test::rule(":- not b."));
  EXPECT_EQ(p3, Program(expected));
  EXPECT_TRUE(solve_flp_literal(p3).empty());
}

TEST(RewFlp, Errors) {
  EXPECT_THROW(rew_flp(test::corpus("p4")), DisjunctiveHead);
  EXPECT_THROW(rew_flp(test::prog("a :- __aux_t_1.")), InvalidArgument);
}

TEST(RewFlp, DropsUnsatisfiableBodies) {
  const Program p = test::prog("a :- count{a, b} > 2. b :- not a.");
  const auto [rewritten, map] = rew_flp(p);
  EXPECT_EQ(rewritten.size(), 1u + 3u);
  EXPECT_EQ(map.entries.size(), 1u);
  EXPECT_TRUE(verify_compilation(p, TargetSemantics::FLP).ok());
  EXPECT_TRUE(verify_compilation(p, TargetSemantics::SFLP).ok());
}

TEST(RewFlp, RewriteAllRewritesSingleLiterals) {
  const Program p = test::corpus("p2");
  const auto [plain, plain_map] = rew_flp(p);
  const auto [all, all_map] = rew_flp(p, {true});
  EXPECT_EQ(plain_map.entries.size(), 1u);
  EXPECT_EQ(all_map.entries.size(), 3u);
  EXPECT_EQ(solve_flp_literal(all).size(), 1u);
  EXPECT_TRUE(verify_compilation(p, TargetSemantics::SFLP, {true}).ok());
}

TEST(Supp, Examples) {
  const Program p1 = test::corpus("p1");
  const auto [r1, m1] = rew_flp(p1);
  EXPECT_EQ(supp_rule(Atom("a"), p1, m1), test::rule("__aux_t_1 :- a."));

  const Program p2 = test::corpus("p2");
  const auto [r2, m2] = rew_flp(p2);
  EXPECT_EQ(supp_rule(Atom("a"), p2, m2), test::rule("__aux_t_1 | b :- a."));

  const Program only_body = test::prog("a :- c.");
  const auto [r3, m3] = rew_flp(only_body);
  EXPECT_EQ(supp_rule(Atom("c"), only_body, m3), test::rule(":- c."));
  EXPECT_THROW(supp_rule(Atom("z"), only_body, m3), UnknownAtom);
}

TEST(RewSflp, PaperAnswerSets) {
  EXPECT_EQ(solve_flp_literal(rew_sflp(test::corpus("p1")).first), sets({"__aux_t_1 a b"}));
  EXPECT_EQ(solve_flp_literal(rew_sflp(test::corpus("p3")).first), sets({"__aux_t_1 a b"}));
  const auto [p2, map] = rew_sflp(test::corpus("p2"));
  EXPECT_EQ(render(p2), test::read_file(std::string(GASP_GOLDEN_DIR) + "/rew_sflp_p2.gasp"));
  EXPECT_EQ(solve_flp_literal(p2), sets({"__aux_t_1 a b"}));
}

TEST(Expansion, Examples) {
  const Program p1 = test::corpus("p1");
  const auto [r, map] = rew_flp(p1);
  EXPECT_EQ(expansion(I("a b"), p1, map), I("a b __aux_t_1"));
  EXPECT_EQ(expansion(I("a"), p1, map), I("a __aux_f_1_0 __aux_f_1_1 __aux_f_1_2"));
  EXPECT_EQ(expansion(I(""), Program(), CompilationMap{}), I(""));
  EXPECT_THROW(expansion(I("z"), p1, map), UnknownAtom);
}

TEST(Contraction, Examples) {
  const Program p1 = test::corpus("p1");
  EXPECT_EQ(contraction(I("a b __aux_t_1"), p1), I("a b"));
  EXPECT_EQ(contraction(I(""), p1), I(""));
  EXPECT_EQ(contraction(I("b"), p1), I("b"));
}

TEST(Verify, PaperPrograms) {
  const auto sflp = verify_compilation(test::corpus("p1"), TargetSemantics::SFLP);
  EXPECT_TRUE(sflp.ok());
  EXPECT_EQ(sflp.source_answer_sets, sets({"a b"}));
  EXPECT_EQ(sflp.target_answer_sets, sets({"__aux_t_1 a b"}));
  const auto flp = verify_compilation(test::corpus("p1"), TargetSemantics::FLP);
  EXPECT_TRUE(flp.ok());
  EXPECT_TRUE(flp.source_answer_sets.empty());
  EXPECT_TRUE(flp.target_answer_sets.empty());
  for (const auto *name : {"p2", "p3", "p5"})
    for (auto sem : {TargetSemantics::FLP, TargetSemantics::SFLP})
      EXPECT_TRUE(verify_compilation(test::corpus(name), sem).ok()) << name;
}

// c :- count{a, c} != 1 has no SFLP answer set, yet {T, c} is an answer set of
// its SFLP rewriting: c moves into the head of tr(A,1) = T | a | c :- not F0,
// so the reduct {c :- T. T | a | c. T :- c.} has no model below {T, c}.
TEST(Verify, SflpContractionCounterexample) {
  const Program p = test::prog("c :- count{a, c} != 1.");
  EXPECT_TRUE(enumerate(p, SemanticsKind::SFLP).empty());
  const auto [rewritten, map] = rew_sflp(p);
  const Interpretation j = I("__aux_t_1 c");
  EXPECT_TRUE(is_model(j, rewritten));
  const Program reduct = flp_reduct(rewritten, j);
  for (const auto &smaller : {I(""), I("c"), I("__aux_t_1")})
    EXPECT_FALSE(is_model(smaller, reduct)) << to_string(smaller);
  EXPECT_EQ(enumerate(rewritten, SemanticsKind::FLP), sets({"__aux_t_1 c"}));

  const auto report = verify_compilation(p, TargetSemantics::SFLP);
  ASSERT_EQ(report.violations.size(), 1u);
  EXPECT_EQ(report.violations[0].kind, CompilationViolation::Kind::ContractionNotAnswerSet);
  EXPECT_EQ(report.violations[0].witness, j);
  EXPECT_TRUE(verify_compilation(p, TargetSemantics::FLP).ok());
}

// {b, c} is the SFLP answer set of c :- b, not a. b :- count{b, c} != 1.
// but the reduct of its expansion has the smaller model {T1, c}, where c and
// T1 support each other through c :- T1 and supp(c) = T1 :- c.
TEST(Verify, SflpExpansionCounterexample) {
  const Program p = test::prog("c :- b, not a. b :- count{b, c} != 1.");
  EXPECT_EQ(enumerate(p, SemanticsKind::SFLP), sets({"b c"}));
  const auto [rewritten, map] = rew_sflp(p);
  const Interpretation expanded = expansion(I("b c"), p, map);
  EXPECT_EQ(expanded, I("__aux_t_1 __aux_t_2 b c"));
  EXPECT_TRUE(is_model(expanded, rewritten));
  EXPECT_TRUE(is_model(I("__aux_t_1 c"), flp_reduct(rewritten, expanded)));
  EXPECT_FALSE(is_flp_answer_set(expanded, rewritten));

  const auto report = verify_compilation(p, TargetSemantics::SFLP);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations[0].kind, CompilationViolation::Kind::ExpansionNotAnswerSet);
  EXPECT_TRUE(verify_compilation(p, TargetSemantics::FLP).ok());
}

class RandomCompilation : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomCompilation, BijectionAndRuleCount) {
  GenConfig cfg;
  cfg.seed = GetParam();
  cfg.atom_count = 1 + GetParam() % 5;
  cfg.rule_count = GetParam() % 7;
  const Program p = generate(cfg);
  const auto flp_report = verify_compilation(p, TargetSemantics::FLP);
  EXPECT_TRUE(flp_report.ok()) << render(p)
                               << (flp_report.ok() ? "" : flp_report.violations[0].description);
  // For SFLP the membership directions can fail (see the counterexamples
  // below); expansion and contraction still invert each other.
  for (const auto &v : verify_compilation(p, TargetSemantics::SFLP).violations)
    EXPECT_TRUE(v.kind == CompilationViolation::Kind::ContractionNotAnswerSet ||
                v.kind == CompilationViolation::Kind::ExpansionNotAnswerSet)
        << render(p) << v.description;

  const Program canon = p.canonical();
  const auto [flp, map] = rew_flp(p);
  std::size_t expected = 0;
  for (const auto &rule : canon.rules())
    expected += keeps_body(rule) || is_satisfiable(rule.body);
  for (const auto &[body, names] : map.entries) {
    std::size_t literals = 0;
    for (const auto &c : body.as<Dnf>().disjuncts)
      literals += c.literal_count();
    expected += body.as<Dnf>().disjuncts.size() + literals + 1;
  }
  EXPECT_EQ(flp.size(), expected);
  EXPECT_EQ(rew_sflp(p).first.size(), expected + p.atoms().size());

  // Only literal conjunctions in the output, hence a convex program.
  for (const auto &rule : flp.rules())
    EXPECT_TRUE(rule.body.is<LiteralConjunction>());
  EXPECT_TRUE(is_convex_program(flp));
  EXPECT_EQ(render(rew_flp(p).first), render(flp));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomCompilation, ::testing::Range<std::uint64_t>(0, 200));

} // namespace
} // namespace gasp
