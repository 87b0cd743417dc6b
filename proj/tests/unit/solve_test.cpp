#include <gtest/gtest.h>

#include "opengames/game/decision.hpp"
#include "opengames/classical/random.hpp"
#include "opengames/game/random.hpp"
#include "opengames/solve/expr.hpp"
#include "opengames/solve/market_entry.hpp"
#include "opengames/solve/solve.hpp"
#include "opengames/solve/theorems.hpp"
#include "support/oracles.hpp"

namespace og {
namespace {

Value fn(const Value& v) { return Value::function({v}); }

Value market_profile(std::size_t entry, const char* e, const char* i) {
  Value tensor = Value::pair(Value::pair(fn(Value::atom(e)), fn(Value::atom(i))), Value::unit());
  Value g = Value::pair(Value::pair(Value::unit(), tensor), Value::unit());
  return Value::pair(fn(Value::tagged(entry, Value::unit())), Value::tuple({Value::unit(), g}));
}

TEST(Expr, AtomEvaluatesToItsGame) {
  OpenGame d = decision(unit_set(), FiniteSet::of_atoms({"x", "y"}));
  GameExpr e = GameExpr::atom(d, "decision", "D");
  EXPECT_EQ(e.eval().strategies(), d.strategies());
}

TEST(Expr, TypeErrorsNameTheNode) {
  OpenGame d = decision(unit_set(), FiniteSet::of_atoms({"x", "y"}));
  GameExpr e = GameExpr::seq(GameExpr::atom(d, "decision", "D"), GameExpr::atom(d, "decision", "D"));
  try {
    e.eval();
    FAIL() << "expected a type mismatch";
  } catch (const TypeMismatch& err) {
    EXPECT_NE(std::string(err.what()).find("seq"), std::string::npos);
  }
}

TEST(Expr, SeqOfUnitsIsTheUnit) {
  Diset phi = payoff_diset(FiniteSet::of_atoms({"x", "y"}), 1);
  GameExpr u = GameExpr::atom(unit_game(phi), "unit", "u");
  GameExpr e = GameExpr::seq(u, u);
  EXPECT_EQ(e.eval().strategies().size(), 1u);
  EXPECT_EQ(e.eval().src(), phi);
  EXPECT_EQ(e.eval().dst(), phi);
}

TEST(Solve, MarketEntryStatesAndSeparableStates) {
  MarketEntry me = market_entry();
  TotalFn k = trivial_continuation(me.h.eval().dst());
  SolutionReport r = solve(me.h, k);
  EXPECT_EQ(oracle::keys(r.states),
            oracle::keys({market_profile(1, "A", "A"), market_profile(0, "A", "F"), market_profile(0, "F", "F")}));
  EXPECT_EQ(oracle::keys(r.states), oracle::keys(oracle::states(me.h.eval(), k)));
  ASSERT_EQ(r.separable.size(), 1u);
  EXPECT_EQ(r.separable[0].profile, market_profile(1, "A", "A"));
}

TEST(Solve, CertificateRecordsTheEntryContinuation) {
  MarketEntry me = market_entry();
  SolutionReport r = solve(me.h, trivial_continuation(me.h.eval().dst()));
  ASSERT_EQ(r.separable.size(), 1u);
  const Certificate& c = r.separable[0].certificate;
  ASSERT_EQ(c.parts.size(), 2u);
  const TotalFn& k0 = c.parts[0].continuation;
  EXPECT_EQ(k0(Value::tagged(0, Value::unit())), Value::vector({Rational(0)}));
  EXPECT_EQ(k0(Value::tagged(1, Value::unit())), Value::vector({Rational(3)}));
}

TEST(Solve, SeparableStatesAreStates) {
  Rng rng(51);
  for (int t = 0; t < 20; ++t) {
    SequentialGame g = random_sequential(rng, 3, 2);
    GameExpr e = sequential_expr(g);
    TotalFn k = continuation_from_payoff(g.payoff(), e.eval().dst());
    auto states = oracle::keys(states_over(e, k));
    for (const auto& s : separable_states_over(e, k)) EXPECT_TRUE(states.count(s.profile.to_string()));
  }
}

TEST(Solve, SingleAtomSeparableIsStates) {
  OpenGame d = decision(FiniteSet::of_atoms({"h1", "h2"}), FiniteSet::of_atoms({"x", "y", "z"}));
  TotalFn k(d.dst().forward, d.dst().backward,
            {Value::vector({Rational(1)}), Value::vector({Rational(1)}), Value::vector({Rational(0)})});
  GameExpr e = GameExpr::atom(d, "decision", "D");
  std::vector<Value> sep;
  for (const auto& s : separable_states_over(e, k)) sep.push_back(s.profile);
  EXPECT_EQ(oracle::keys(sep), oracle::keys(states_over(e, k)));
  EXPECT_EQ(sep.size(), 4u);
}

TEST(Solve, TwoStageSeparableIsBackwardInduction) {
  FiniteSet s = FiniteSet::of_atoms({"l", "r"});
  std::vector<FiniteSet> sets{s, s};
  auto q2 = [](long long x, long long y) { return Value::vector({Rational(x), Rational(y)}); };
  SequentialGame g(sets, TotalFn(tuple_set(sets), Carrier::payoff(2), {q2(3, 1), q2(0, 0), q2(1, 2), q2(2, 1)}));
  EXPECT_EQ(oracle::keys(spe_sequential(g).spe), oracle::keys(oracle::Sequential(g).spe()));
}

TEST(Solve, TrivialContinuationNeedsASingletonCarrier) {
  OpenGame d = decision(unit_set(), FiniteSet::of_atoms({"x"}));
  EXPECT_THROW(trivial_continuation(d.dst()), TypeMismatch);
}

TEST(Solve, EnumerationBoundIsAHardError) {
  OpenGame d = decision(FiniteSet::of_atoms({"a", "b", "c", "d"}), FiniteSet::of_atoms({"x", "y", "z"}));
  GameExpr e = GameExpr::atom(d, "decision", "D");
  TotalFn k = TotalFn::constant(d.dst().forward, d.dst().backward, Value::vector({Rational(0)}));
  EXPECT_THROW(states_over(e, k, Bounds{10}), EnumerationBound);
}

}  // namespace
}  // namespace og
