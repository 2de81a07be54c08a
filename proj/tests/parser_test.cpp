#include <random>

#include <gtest/gtest.h>

#include "gasp/error.hpp"
#include "gasp/harness.hpp"
#include "gasp/parser.hpp"
#include "test_util.hpp"

namespace gasp {
namespace {

TEST(Parse, SharedAggregateBody) {
  const Program p = parse_program("a :- count{a,b} != 1. b :- count{a,b} != 1.");
  ASSERT_EQ(p.size(), 2u);
  const Body agg = Body::count(atoms({"a", "b"}), Comparator::Ne, 1);
  EXPECT_EQ(p.rules()[0], (Rule{atoms({"a"}), agg}));
  EXPECT_EQ(p.rules()[1], (Rule{atoms({"b"}), agg}));
}

TEST(Parse, ConstraintWithNegation) {
  const Program p = parse_program(":- not a.");
  ASSERT_EQ(p.size(), 1u);
  EXPECT_TRUE(p.rules()[0].is_constraint());
  EXPECT_EQ(p.rules()[0].body, Body::literals({}, atoms({"a"})));
}

TEST(Parse, EmptyText) {
  EXPECT_TRUE(parse_program("").empty());
  EXPECT_TRUE(parse_program("  % only a comment\n").empty());
}

TEST(Parse, FactsAndDisjunction) {
  const Program p = parse_program("a | b.\nc :- .");
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.rules()[0].head, atoms({"a", "b"}));
  EXPECT_EQ(p.rules()[0].body, Body());
  EXPECT_EQ(p.rules()[1].body, Body());
}

TEST(Parse, AllComparators) {
  const char *ops[] = {"=", "!=", "<=", ">=", "<", ">"};
  for (int i = 0; i < 6; ++i) {
    const Program p = parse_program(std::string("x :- count{a} ") + ops[i] + " 1.");
    EXPECT_EQ(p.rules()[0].body.as<CountAggregate>().comparator, static_cast<Comparator>(i));
  }
}

TEST(Parse, ReservedAtoms) {
  EXPECT_THROW(parse_program("__aux_t_1 :- a."), ReservedAtom);
  EXPECT_NO_THROW(parse_program("__aux_t_1 :- a.", {true}));
  EXPECT_THROW(parse_program("_x :- a.", {true}), ParseError);
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse_program("a :- b.\nc :- count{a} ! 2.");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 15u);
  }
  try {
    parse_program("a :- b");
    FAIL() << "expected ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.expected(), std::vector<std::string>{"'.'"});
  }
}

TEST(Parse, RejectsMalformedInput) {
  for (const char *text : {
           "a :- b, count{a} = 1.", "a :- count{} = 1.", "a :- count{a} = .",
           "a :- dnf{}.", "a :- dnf{a | }.", "a :- a, not a.", "a :- dnf{a & ~a}.",
           "a | a.", "not.", "a :- count.", "A.", "a :- b c.", "a :- not.", "a",
           "a :- b. :- ", "a :- ~b.", "a :- count{a} = -1.", "\xc3\xa9.",
       }) {
    EXPECT_THROW(parse_program(text), ParseError) << text;
  }
}

TEST(Render, CanonicalOrdering) {
  EXPECT_EQ(render(parse_program("b|a :- not c, b.")), "a | b :- b, not c.\n");
  EXPECT_EQ(render(Program()), "");
  EXPECT_EQ(render(parse_program("x :- dnf{a&b | ~b & ~a}. :- not a. .")),
            "x :- dnf{~a & ~b | a & b}.\n:- not a.\n:-.\n");
  EXPECT_EQ(render(parse_program("x :- count{b,a} >= 2.")), "x :- count{a, b} >= 2.\n");
}

TEST(Render, TruthTables) {
  const Body tt = Body::truth_table(atoms({"a", "b"}), {test::I("a")});
  EXPECT_EQ(render(tt), "dnf{a & ~b}");
  EXPECT_EQ(render(Body::truth_table(atoms({"a", "b"}), {})), "count{a, b} < 0");
}

TEST(RoundTrip, PaperPrograms) {
  for (const auto &name : test::paper_programs()) {
    const Program p = test::corpus(name);
    EXPECT_EQ(parse_program(render(p)), p) << name;
    EXPECT_EQ(render(parse_program(render(p))), render(p)) << name;
  }
}

TEST(RoundTrip, GeneratedPrograms) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenConfig cfg;
    cfg.seed = seed;
    cfg.atom_count = 1 + seed % 8;
    cfg.rule_count = seed % 11;
    cfg.allow_disjunctive_heads = seed % 2;
    const Program p = generate(cfg);
    const std::string text = render(p);
    ASSERT_EQ(parse_program(text), p) << "seed " << seed << "\n" << text;
  }
}

// Mutated corpus text either parses to a program that round-trips, or is
// rejected with ParseError; nothing else escapes.
TEST(RoundTrip, MutatedCorpusFuzz) {
  std::mt19937_64 rng(3);
  const std::string alphabet = "abnot~&|,.:-{}=!<>0123 %\n";
  for (const auto &name : test::paper_programs()) {
    const std::string text = test::read_file(test::corpus_path(name + ".gasp"));
    for (int round = 0; round < 400; ++round) {
      std::string mutated = text;
      const int edits = 1 + static_cast<int>(rng() % 3);
      for (int e = 0; e < edits && !mutated.empty(); ++e) {
        const std::size_t pos = rng() % mutated.size();
        switch (rng() % 3) {
        case 0: mutated.erase(pos, 1); break;
        case 1: mutated.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
        default: mutated[pos] = alphabet[rng() % alphabet.size()]; break;
        }
      }
      try {
        const Program p = parse_program(mutated);
        EXPECT_EQ(parse_program(render(p)), p) << mutated;
      } catch (const ParseError &) {
      }
    }
  }
}

} // namespace
} // namespace gasp
