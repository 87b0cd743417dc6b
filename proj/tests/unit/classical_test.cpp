#include <gtest/gtest.h>

#include "opengames/classical/extensive.hpp"
#include "opengames/classical/normal_form.hpp"
#include "opengames/classical/random.hpp"
#include "opengames/classical/sequential.hpp"
#include "opengames/solve/market_entry.hpp"
#include "opengames/solve/theorems.hpp"
#include "support/oracles.hpp"

namespace og {
namespace {

Value a(const char* n) { return Value::atom(n); }
Value q2(long long x, long long y) { return Value::vector({Rational(x), Rational(y)}); }

NormalFormGame two_by_two(const char* r0, const char* r1, std::vector<Value> payoffs) {
  FiniteSet s = FiniteSet::of_atoms({r0, r1});
  std::vector<FiniteSet> sets{s, s};
  return NormalFormGame(sets, TotalFn(tuple_set(sets), Carrier::payoff(2), std::move(payoffs)));
}

TEST(NormalForm, PrisonersDilemma) {
  auto g = two_by_two("C", "D", {q2(2, 2), q2(0, 3), q2(3, 0), q2(1, 1)});
  auto eq = brute_nash(g);
  ASSERT_EQ(eq.size(), 1u);
  EXPECT_EQ(eq[0], Value::tuple({a("D"), a("D")}));
  EXPECT_EQ(oracle::keys(nash_normal_form(g)), oracle::keys(eq));
}

TEST(NormalForm, MatchingPennies) {
  auto g = two_by_two("H", "T", {q2(1, -1), q2(-1, 1), q2(-1, 1), q2(1, -1)});
  EXPECT_TRUE(brute_nash(g).empty());
  EXPECT_TRUE(nash_normal_form(g).empty());
}

TEST(NormalForm, ConstantPayoffsMakeEveryProfileAnEquilibrium) {
  auto g = two_by_two("x", "y", {q2(1, 1), q2(1, 1), q2(1, 1), q2(1, 1)});
  EXPECT_EQ(brute_nash(g).size(), 4u);
}

TEST(NormalForm, OnePlayerArgmax) {
  FiniteSet s = FiniteSet::of_atoms({"a", "b", "c"});
  std::vector<FiniteSet> sets{s};
  TotalFn u(tuple_set(sets), Carrier::payoff(1),
            {Value::vector({Rational(1)}), Value::vector({Rational(4)}), Value::vector({Rational(4)})});
  NormalFormGame g(sets, u);
  EXPECT_EQ(oracle::keys(nash_normal_form(g)),
            oracle::keys({Value::tuple({a("b")}), Value::tuple({a("c")})}));
}

TEST(NormalForm, RandomGamesAgreeWithTheOracle) {
  Rng rng(41);
  for (int t = 0; t < 40; ++t) {
    NormalFormGame g = random_normal_form(rng, 3, 3);
    auto want = oracle::keys(oracle::nash(g));
    EXPECT_EQ(oracle::keys(brute_nash(g)), want);
    EXPECT_EQ(oracle::keys(nash_normal_form(g)), want);
  }
}

SequentialGame entry_like() {
  // Leader picks In/Out, follower Fight/Yield; Out ends with (1, 3).
  FiniteSet l = FiniteSet::of_atoms({"Out", "In"});
  FiniteSet f = FiniteSet::of_atoms({"Fight", "Yield"});
  std::vector<FiniteSet> sets{l, f};
  TotalFn u(tuple_set(sets), Carrier::payoff(2), {q2(1, 3), q2(1, 3), q2(0, 0), q2(2, 1)});
  return SequentialGame(sets, u);
}

TEST(Sequential, StrategicExtension) {
  SequentialGame g = entry_like();
  Value yield_always = Value::function({a("Yield"), a("Yield")});
  Value in = Value::function({a("In")});
  EXPECT_EQ(g.strategic_extension({in, yield_always}, 0, {}), Value::tuple({a("In"), a("Yield")}));
  EXPECT_EQ(g.strategic_extension({yield_always}, 1, {a("Out")}), Value::tuple({a("Out"), a("Yield")}));
  Value full = Value::tuple({a("In"), a("Fight")});
  EXPECT_EQ(g.strategic_extension({}, 2, {a("In"), a("Fight")}), full);
  EXPECT_THROW(g.strategic_extension({in, yield_always}, 0, {a("In"), a("Fight"), a("In")}), IndexMismatch);
  EXPECT_THROW(g.strategic_extension({yield_always}, 1, {a("Maybe")}), TypeMismatch);
}

TEST(Sequential, ConstantStrategiesGiveConstantPlays) {
  SequentialGame g = entry_like();
  Value f = Value::function({a("Fight"), a("Fight")});
  EXPECT_EQ(g.strategic_extension({f}, 1, {a("In")}), Value::tuple({a("In"), a("Fight")}));
}

TEST(Sequential, SpeIsAStrictSubsetOfNash) {
  SequentialGame g = entry_like();
  auto sol = spe_sequential(g);
  oracle::Sequential ref(g);
  EXPECT_EQ(oracle::keys(sol.nash), oracle::keys(ref.nash()));
  EXPECT_EQ(oracle::keys(sol.spe), oracle::keys(ref.spe()));
  EXPECT_LT(sol.spe.size(), sol.nash.size());
  for (const auto& s : sol.spe) EXPECT_TRUE(oracle::keys(sol.nash).count(s.to_string()));
}

TEST(Sequential, PlayMatchesTheCopyDecisionChain) {
  Rng rng(42);
  for (int t = 0; t < 20; ++t) {
    SequentialGame g = random_sequential(rng, 3, 2);
    GameExpr e = sequential_expr(g);
    const OpenGame& chain = e.eval();
    for (const auto& p : chain.strategies()) {
      Value flat = flatten_chain_profile(e, p);
      EXPECT_EQ(chain.play(p).view(Value::unit()), g.play(flat));
    }
  }
}

TEST(Sequential, OnePlayerGameIsArgmax) {
  FiniteSet s = FiniteSet::of_atoms({"a", "b"});
  std::vector<FiniteSet> sets{s};
  SequentialGame g(sets, TotalFn(tuple_set(sets), Carrier::payoff(1),
                                 {Value::vector({Rational(2)}), Value::vector({Rational(1)})}));
  auto sol = spe_sequential(g);
  ASSERT_EQ(sol.nash.size(), 1u);
  EXPECT_EQ(sol.nash, sol.spe);
  EXPECT_EQ(sol.nash[0], Value::tuple({Value::function({a("a")})}));
}

TEST(Sequential, BackwardInductionAgreesWithTheOracle) {
  Rng rng(43);
  for (int t = 0; t < 30; ++t) {
    SequentialGame g = random_sequential(rng, 3, 2);
    EXPECT_EQ(oracle::keys(backward_induction(g)), oracle::keys(oracle::Sequential(g).spe()));
  }
}

TEST(Sequential, LeftAndRightNestedChainsAgree) {
  Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    SequentialGame g = random_sequential(rng, 3, 2);
    auto left = spe_sequential(g, false);
    auto right = spe_sequential(g, true);
    EXPECT_EQ(oracle::keys(left.spe), oracle::keys(right.spe));
    EXPECT_EQ(oracle::keys(left.nash), oracle::keys(right.nash));
  }
}

TEST(Extensive, MarketEntryTree) {
  ExtensiveGame tree = market_entry_tree();
  EXPECT_EQ(tree.strategies(0).size(), 4u);
  EXPECT_EQ(tree.strategies(1).size(), 2u);
  auto nash = brute_nash(normalize_extensive(tree));
  EXPECT_EQ(nash.size(), 3u);
  auto spe = oracle_spe(tree);
  ASSERT_EQ(spe.size(), 1u);
  // Enter and accommodate at the entrant's nodes, accommodate for the incumbent.
  EXPECT_EQ(spe[0], Value::tuple({Value::function({a("C"), a("A")}), Value::function({a("A")})}));
}

TEST(Extensive, OneLeafTree) {
  ExtensiveGame g(1, {ExtensiveNode{"only", std::nullopt, {}, {Rational(5)}}});
  auto nf = normalize_extensive(g);
  EXPECT_EQ(brute_nash(nf).size(), 1u);
  EXPECT_EQ(oracle_spe(g).size(), 1u);
}

TEST(Extensive, SingleSubgameSpeIsNash) {
  // A simultaneous game written as a tree with one information set.
  auto leaf = [](const char* id, long long x, long long y) {
    return ExtensiveNode{id, std::nullopt, {}, {Rational(x), Rational(y)}};
  };
  ExtensiveGame g(2,
                  {{"r", 0, {{"C", 1}, {"D", 2}}, {}},
                   {"c", 1, {{"C", 3}, {"D", 4}}, {}},
                   {"d", 1, {{"C", 5}, {"D", 6}}, {}},
                   leaf("cc", 2, 2), leaf("cd", 0, 3), leaf("dc", 3, 0), leaf("dd", 1, 1)},
                  {{"second", {"c", "d"}}});
  EXPECT_EQ(oracle::keys(oracle_spe(g)), oracle::keys(brute_nash(normalize_extensive(g))));
}

TEST(Extensive, MalformedInformationSets) {
  auto leaf = [](const char* id) { return ExtensiveNode{id, std::nullopt, {}, {Rational(0), Rational(0)}}; };
  std::vector<ExtensiveNode> nodes{{"r", 0, {{"L", 1}, {"R", 2}}, {}},
                                   {"x", 1, {{"a", 3}, {"b", 4}}, {}},
                                   {"y", 0, {{"a", 5}, {"b", 6}}, {}},
                                   leaf("l1"), leaf("l2"), leaf("l3"), leaf("l4")};
  EXPECT_THROW(ExtensiveGame(2, nodes, {{"mixed", {"x", "y"}}}), MalformedInfoSet);
  EXPECT_THROW(ExtensiveGame(2, nodes, {{"leafy", {"x", "l1"}}}), MalformedInfoSet);
  EXPECT_THROW(ExtensiveGame(2, nodes, {{"s1", {"x"}}, {"s2", {"x"}}}), MalformedInfoSet);
}

TEST(Extensive, PerfectInformationChainMatchesBackwardInduction) {
  Rng rng(45);
  for (int t = 0; t < 20; ++t) {
    SequentialGame g = random_sequential(rng, 3, 2);
    std::vector<Value> converted;
    for (const auto& p : oracle_spe(to_extensive(g))) converted.push_back(tree_to_sequential_profile(g, p));
    EXPECT_EQ(oracle::keys(converted), oracle::keys(backward_induction(g)));
  }
}

}  // namespace
}  // namespace og
