#include <gtest/gtest.h>

#include "opengames/game/decision.hpp"
#include "opengames/game/random.hpp"
#include "opengames/morphism/cells.hpp"
#include "opengames/morphism/coherence.hpp"
#include "opengames/morphism/iso_search.hpp"
#include "opengames/morphism/morphism.hpp"
#include "opengames/morphism/states.hpp"
#include "opengames/solve/market_entry.hpp"
#include "opengames/solve/solve.hpp"
#include "support/oracles.hpp"

namespace og {
namespace {

const FiniteSet kX = FiniteSet::of_atoms({"F", "A"});

Value q(long long n) { return Value::vector({Rational(n)}); }

TEST(Morphism, IdentityIsValid) {
  OpenGame d = decision(FiniteSet::of_atoms({"h1", "h2"}), kX);
  EXPECT_TRUE(check_morphism(identity_morphism(d)).valid);
  EXPECT_TRUE(identity_morphism(d).is_globular());
}

TEST(Morphism, SwappedStrategiesBreakTheLensSquare) {
  OpenGame d = decision(unit_set(), kX);
  TotalFn swap = TotalFn::tabulate(d.strategies(), Carrier::finite(d.strategies()), [&](const Value& s) {
    return Value::function({s[0] == Value::atom("F") ? Value::atom("A") : Value::atom("F")});
  });
  GameMorphism bad(d, d, lens_identity(d.src()), lens_identity(d.dst()), swap);
  MorphismCheck c = check_morphism(bad);
  ASSERT_FALSE(c.valid);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->axiom, MorphismWitness::Axiom::kLensSquare);
}

TEST(Morphism, NonPreservingBestResponseFails) {
  // Same play as the decision, but every strategy counts as a best response.
  OpenGame d = decision(unit_set(), kX);
  OpenGame lax(
      d.src(), d.dst(), d.strategies(), [d](const Value& s) { return d.play(s); },
      [](const Context&, const Value&, const Value&) { return true; }, nullptr, "lax");
  GameMorphism m(lax, d, lens_identity(d.src()), lens_identity(d.dst()), TotalFn::identity(d.strategies()));
  TotalFn k(kX, Carrier::payoff(1), {q(0), q(1)});
  MorphismCheck c = check_morphism(m, {k});
  ASSERT_FALSE(c.valid);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->axiom, MorphismWitness::Axiom::kBestResponse);
  EXPECT_TRUE(c.witness->continuation.has_value());
  EXPECT_EQ(*c.witness->sigma2, Value::function({Value::atom("F")}));
}

TEST(Morphism, CompositionOfValidCellsIsValid) {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    CoherenceGames cg = random_coherence_games(rng, 2);
    GameMorphism a = lunit_cell(cg.g[0]);
    GameMorphism b = lunit_cell_inv(cg.g[0]);
    EXPECT_TRUE(check_morphism(vcompose(b, a)).valid);
    EXPECT_TRUE(morphism_equal(vcompose(identity_morphism(a.to()), a), a));
  }
}

TEST(Morphism, HorizontalIdentities) {
  Rng rng(32);
  CoherenceGames cg = random_coherence_games(rng, 2);
  GameMorphism h = hcompose(identity_morphism(cg.h[0]), identity_morphism(cg.g[0]));
  EXPECT_TRUE(morphism_equal(h, identity_morphism(seq_compose(cg.g[0], cg.h[0]))));
  GameMorphism t = tensor_morphisms(identity_morphism(cg.g[0]), identity_morphism(cg.g[1]));
  EXPECT_TRUE(morphism_equal(t, identity_morphism(tensor_games(cg.g[0], cg.g[1]))));
}

TEST(Morphism, HcomposeNeedsMatchingBoundaries) {
  OpenGame d = decision(unit_set(), kX);
  OpenGame e = unit_game(d.dst());
  GameMorphism a = identity_morphism(d);
  EXPECT_NO_THROW(hcompose(identity_morphism(e), a));
  Lens shift(d.dst(), d.dst(), TotalFn::identity(kX), [](const Value&, const Value& r) {
    return Value::vector({r.coords()[0] + Rational(1)});
  });
  GameMorphism shifted(d, d, lens_identity(d.src()), shift, TotalFn::identity(d.strategies()));
  EXPECT_THROW(hcompose(identity_morphism(e), shifted), BoundaryMismatch);
}

TEST(Cells, StrategyMaps) {
  Rng rng(33);
  CoherenceGames cg = random_coherence_games(rng, 2);
  GameMorphism x = interchange_cell(cg.g[0], cg.g[1], cg.h[0], cg.h[1]);
  for (const auto& p : x.from().strategies())
    EXPECT_EQ(x.sigma(p), Value::pair(Value::pair(p[0][0], p[1][0]), Value::pair(p[0][1], p[1][1])));
  GameMorphism u = identitor_cell(cg.a[0], cg.a[1]);
  ASSERT_EQ(u.from().strategies().size(), 1u);
  EXPECT_EQ(u.sigma(u.from().strategies()[0]), Value::pair(Value::unit(), Value::unit()));
  GameMorphism l = lunit_cell(cg.g[0]);
  for (const auto& p : l.from().strategies()) EXPECT_EQ(l.sigma(p), p[0]);
}

TEST(Cells, CoherenceSuitesOnAFewInstances) {
  Rng rng(34);
  LawTally tally = coherence_trials(rng, 2, 5);
  std::string witnesses;
  for (const auto& e : tally.entries())
    for (const auto& w : e.witnesses) witnesses += e.name + ": " + w + "\n";
  EXPECT_EQ(tally.failures(), 0u) << witnesses;
}

TEST(States, RoundTripThroughMorphisms) {
  OpenGame d = decision(FiniteSet::of_atoms({"h1", "h2"}), kX);
  TotalFn k(kX, Carrier::payoff(1), {q(1), q(4)});
  auto st = states_over(d, k);
  ASSERT_EQ(st.size(), 1u);
  StateCert cert{st[0], k};
  GameMorphism m = state_to_morphism(d, cert);
  EXPECT_TRUE(check_morphism(m).valid);
  EXPECT_EQ(morphism_to_state(m), cert);
  StateCert wrong{d.strategies()[0], k};
  EXPECT_THROW(state_to_morphism(d, wrong), NotAState);
}

TEST(States, TensorOfDecisionStates) {
  OpenGame d1 = decision(unit_set(), kX);
  OpenGame d2 = decision(unit_set(), FiniteSet::of_atoms({"p", "q", "r"}));
  TotalFn k1(d1.dst().forward, d1.dst().backward, {q(3), q(1)});
  TotalFn k2(d2.dst().forward, d2.dst().backward, {q(0), q(2), q(1)});
  OpenGame t = tensor_games(d1, d2);
  TotalFn k = TotalFn::tabulate(t.dst().forward, t.dst().backward,
                                [&](const Value& y) { return Value::pair(k1(y[0]), k2(y[1])); });
  auto st = states_over(t, k);
  ASSERT_EQ(st.size(), 1u);
  EXPECT_EQ(st[0], Value::pair(states_over(d1, k1)[0], states_over(d2, k2)[0]));
}

TEST(States, MarketEntryMediator) {
  MarketEntry me = market_entry();
  GameMorphism med = market_entry_mediator(me);
  EXPECT_TRUE(check_morphism(med).valid);
  EXPECT_EQ(med.s().update(Value::tagged(0, Value::unit()), Value::unit()), q(0));
  EXPECT_EQ(med.s().update(Value::tagged(1, Value::unit()), Value::unit()), q(3));
}

TEST(States, MediatorOfAUnaryFamily) {
  OpenGame d = decision(unit_set(), kX);
  OpenGame p = product_games({d});
  TotalFn k(kX, Carrier::payoff(1), {q(0), q(1)});
  auto st = states_over(d, k);
  GameMorphism a = state_to_morphism(d, {st[0], k});
  GameMorphism m = product_mediator(p, {a});
  EXPECT_EQ(m.sigma(m.from().strategies()[0]), Value::tuple({st[0]}));
  EXPECT_TRUE(check_morphism(m).valid);
}

TEST(IsoSearch, CopyDecisionDirectAndComposite) {
  FiniteSet bits = FiniteSet::of_atoms({"0", "1"});
  OpenGame direct = copy_decision({bits, bits});
  OpenGame composite = copy_decision_composite({bits, bits});
  auto iso = find_globular_iso(direct, composite);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->forward.is_globular());
  EXPECT_TRUE(check_morphism(iso->backward).valid);
}

TEST(IsoSearch, DistinctGamesAreNotIsomorphic) {
  OpenGame d = decision(unit_set(), kX);
  OpenGame u = trivial_game(lens_from_pair(
      TotalFn::constant(unit_set(), Carrier::finite(kX), Value::atom("F")), Carrier::payoff(1),
      Carrier::finite(unit_set()), [](const Value&) { return Value::unit(); }));
  EXPECT_FALSE(find_globular_iso(d, u).has_value());
}

}  // namespace
}  // namespace og
