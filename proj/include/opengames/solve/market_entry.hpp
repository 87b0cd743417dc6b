#ifndef OPENGAMES_SOLVE_MARKET_ENTRY_HPP_
#define OPENGAMES_SOLVE_MARKET_ENTRY_HPP_

#include <vector>

#include "opengames/classical/extensive.hpp"
#include "opengames/game/decision.hpp"
#include "opengames/game/operators.hpp"
#include "opengames/lens/structure.hpp"
#include "opengames/morphism/states.hpp"
#include "opengames/solve/expr.hpp"
#include "opengames/solve/solve.hpp"

namespace og {

// The entry game: E quits (ι₁) or enters (ι₂); after entry E and I choose
// F or A simultaneously with payoffs U.
struct MarketEntry {
  FiniteSet x;        // {F, A}
  FiniteSet entry;    // 1 + 1
  TotalFn utility;    // X × X -> ℚ²
  GameExpr g;         // right subgame (1, ℚ) ⇸ I
  GameExpr c0;        // left subgame (1, ℚ) ⇸ I
  GameExpr h;         // the whole game I ⇸ (1 + 1, 1)
};

inline TotalFn market_entry_utility(const FiniteSet& x) {
  FiniteSet plays = tuple_set(std::vector<FiniteSet>{x, x});
  auto q = [](long long a, long long b) { return Value::vector({Rational(a), Rational(b)}); };
  Value f = Value::atom("F");
  Value a = Value::atom("A");
  return TotalFn::tabulate(plays, Carrier::payoff(2), [&](const Value& p) {
    if (p[0] == f && p[1] == f) return q(-3, -1);
    if (p[0] == f && p[1] == a) return q(1, -2);
    if (p[0] == a && p[1] == f) return q(-2, -1);
    return q(3, 1);
  });
}

inline MarketEntry market_entry() {
  FiniteSet x = FiniteSet::of_atoms({"F", "A"});
  FiniteSet entry = coproduct_set(unit_set(), unit_set());
  TotalFn u = market_entry_utility(x);
  const Diset wire{unit_set(), Carrier::payoff(1)};

  Lens split = lens_compose(lens_tensor(lunit_inv_lens(unit_diset()), lens_identity(wire)),
                            lunit_inv_lens(wire));
  GameExpr players = GameExpr::tensor(
      GameExpr::tensor(GameExpr::atom(decision(unit_set(), x), "decision", "DE"),
                       GameExpr::atom(decision(unit_set(), x), "decision", "DI")),
      GameExpr::atom(unit_game(wire), "unit", "wire"));
  GameExpr g = GameExpr::seq({GameExpr::atom(trivial_game(split, "split"), "trivial", "split"),
                              players,
                              GameExpr::atom(utility_game(u, {x, x}, {0}, "U"), "trivial", "U")});

  TotalFn zero(tuple_set(std::vector<FiniteSet>{}), Carrier::payoff(1),
               {Value::vector({Rational(0)})});
  GameExpr c0 = GameExpr::atom(utility_game(zero, {}, {}, "c0"), "trivial", "c0");
  GameExpr root = GameExpr::atom(decision(unit_set(), entry), "decision", "D0");
  GameExpr h = GameExpr::seq(root, GameExpr::product({c0, g}));
  return {x, entry, u, g, c0, h};
}

// The mediator ⟨α₀, α₁⟩ : u(I) -> (1, c₀) × G of the states of both subgames
// over the trivial continuation. Its source lens reads each branch's payoff.
inline GameMorphism market_entry_mediator(const MarketEntry& me) {
  const OpenGame& c0 = me.c0.eval();
  const OpenGame& g = me.g.eval();
  TotalFn k0 = trivial_continuation(c0.dst());
  TotalFn k1 = trivial_continuation(g.dst());
  auto gs = states_over(g, k1);
  if (gs.size() != 1) throw NotAState("the entry subgame should have a unique state");
  return product_mediator(me.h.children()[1].eval(),
                          {state_to_morphism(c0, {c0.strategies()[0], k0}),
                           state_to_morphism(g, {gs[0], k1})});
}

// The same game as a tree with an information set joining I's two nodes.
inline ExtensiveGame market_entry_tree() {
  auto leaf = [](const char* id, long long e, long long i) {
    return ExtensiveNode{id, std::nullopt, {}, {Rational(e), Rational(i)}};
  };
  std::vector<ExtensiveNode> nodes{
      {"root", 0, {{"Q", 1}, {"C", 2}}, {}},
      leaf("quit", 0, 2),
      {"enter", 0, {{"F", 3}, {"A", 4}}, {}},
      {"iF", 1, {{"F", 5}, {"A", 6}}, {}},
      {"iA", 1, {{"F", 7}, {"A", 8}}, {}},
      leaf("FF", -3, -1),
      leaf("FA", 1, -2),
      leaf("AF", -2, -1),
      leaf("AA", 3, 1),
  };
  return ExtensiveGame(2, std::move(nodes), {{"incumbent", {"iF", "iA"}}});
}

}  // namespace og

#endif  // OPENGAMES_SOLVE_MARKET_ENTRY_HPP_
