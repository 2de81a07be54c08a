#include <gtest/gtest.h>

#include "gasp/compile.hpp"
#include "gasp/error.hpp"
#include "gasp/harness.hpp"
#include "test_util.hpp"

namespace gasp {
namespace {

TEST(Generate, Deterministic) {
  GenConfig cfg;
  cfg.seed = 42;
  cfg.atom_count = 5;
  cfg.rule_count = 8;
  EXPECT_EQ(render(generate(cfg)), render(generate(cfg)));
  cfg.seed = 43;
  const Program other = generate(cfg);
  cfg.seed = 42;
  EXPECT_NE(render(generate(cfg)), render(other));
}

TEST(Generate, RespectsBounds) {
  GenConfig cfg;
  cfg.rule_count = 0;
  EXPECT_TRUE(generate(cfg).empty());

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    cfg.seed = seed;
    cfg.atom_count = 1 + seed % 8;
    cfg.rule_count = seed % 11;
    cfg.allow_disjunctive_heads = false;
    cfg.allow_constraints = false;
    const Program p = generate(cfg);
    EXPECT_EQ(p.size(), cfg.rule_count);
    EXPECT_LE(p.atoms().size(), cfg.atom_count);
    for (const auto &rule : p.rules()) {
      EXPECT_EQ(rule.head.size(), 1u);
      EXPECT_LE(domain(rule.body).size(), cfg.max_body_domain);
    }
  }
}

TEST(Generate, BodyMix) {
  GenConfig cfg;
  cfg.atom_count = 4;
  cfg.rule_count = 10;
  cfg.body_mix = {0, 0, 0, 1};
  bool non_convex = false;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    const Program p = generate(cfg);
    for (const auto &rule : p.rules()) {
      EXPECT_TRUE(rule.body.is<TruthTable>());
      non_convex = non_convex || !is_convex(rule.body);
    }
  }
  EXPECT_TRUE(non_convex);
}

TEST(Generate, RejectsBadConfig) {
  GenConfig cfg;
  cfg.atom_count = 0;
  EXPECT_THROW(generate(cfg), InvalidArgument);
  cfg.atom_count = 9;
  EXPECT_THROW(generate(cfg), InvalidArgument);
  cfg.atom_count = 3;
  cfg.rule_count = 11;
  EXPECT_THROW(generate(cfg), InvalidArgument);
  cfg.rule_count = 3;
  cfg.body_mix = {0, 0, 0, 0};
  EXPECT_THROW(generate(cfg), InvalidArgument);
  cfg.body_mix = {1, -1, 0, 0};
  EXPECT_THROW(generate(cfg), InvalidArgument);
}

TEST(CheckTheorems, PaperPrograms) {
  for (const auto &name : test::paper_programs()) {
    const auto report = check_theorems(test::corpus(name));
    EXPECT_TRUE(report.ok()) << name;
    EXPECT_EQ(report.checks.size(), 6u);
    const bool atomic = name != "p4";
    EXPECT_EQ(report.find(theorem::kCompileFlp)->applicable, atomic) << name;
    EXPECT_FALSE(report.find(theorem::kConvexEquivalence)->applicable) << name;
  }
}

TEST(CheckTheorems, TautologiesKeepInclusion) {
  const Program extended = test::prog(
      "a :- count{a,b} != 1. b :- count{a,b} != 1. a :- a. b :- b.");
  const auto report = check_theorems(extended);
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(enumerate(extended, SemanticsKind::SFLP).empty());
}

TEST(CheckTheorems, ConvexProgramsAgree) {
  std::size_t convex = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.atom_count = 1 + seed % 5;
    cfg.rule_count = seed % 7;
    cfg.body_mix = {2, 1, 0, 0};
    const Program p = generate(cfg);
    if (!is_convex_program(p))
      continue;
    ++convex;
    const auto report = check_theorems(p);
    const auto *check = report.find(theorem::kConvexEquivalence);
    EXPECT_TRUE(check->applicable);
    EXPECT_TRUE(check->passed) << check->witness;
  }
  EXPECT_GT(convex, 50u);
}

TEST(CheckRandom, SeedOrderAndThreadIndependence) {
  GenConfig cfg;
  cfg.atom_count = 3;
  cfg.rule_count = 4;
  const auto serial = check_random(cfg, 10, 40, 1);
  const auto parallel = check_random(cfg, 10, 40, 4);
  ASSERT_EQ(serial.size(), 40u);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].seed, 10 + i);
    EXPECT_EQ(parallel[i].seed, 10 + i);
    EXPECT_EQ(render(serial[i].program), render(parallel[i].program));
    const auto &a = serial[i].report.checks;
    const auto &b = parallel[i].report.checks;
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a[k].passed, b[k].passed);
      EXPECT_EQ(a[k].witness, b[k].witness);
      if (a[k].name != theorem::kCompileSflp)
        EXPECT_TRUE(a[k].passed) << a[k].witness;
    }
  }
}

TEST(CheckTheorems, ReportsSflpCompilationCounterexample) {
  const auto report = check_theorems(test::prog("c :- count{a, c} != 1."));
  EXPECT_FALSE(report.ok());
  for (const auto &check : report.checks)
    EXPECT_EQ(check.passed, check.name != theorem::kCompileSflp) << check.name;
  const auto *sflp = report.find(theorem::kCompileSflp);
  EXPECT_NE(sflp->witness.find("c :- count{a, c} != 1."), std::string::npos);
  EXPECT_NE(sflp->witness.find("{__aux_t_1, c}"), std::string::npos);
}

TEST(CheckTheorems, NoWitnessOnSuccess) {
  const auto report = check_theorems(test::corpus("p1"));
  for (const auto &check : report.checks)
    EXPECT_TRUE(check.witness.empty()) << check.name;
}

// The FLP rewrite of P1 must not accept the expansion of its SFLP answer set.
TEST(CheckTheorems, FlpRewriteSeparatesSemantics) {
  const Program p = test::corpus("p1");
  const auto [rewritten, map] = rew_flp(p);
  EXPECT_FALSE(is_flp_answer_set(expansion(test::I("a b"), p, map), rewritten));
}

} // namespace
} // namespace gasp
