#ifndef OPENGAMES_SOLVE_THEOREMS_HPP_
#define OPENGAMES_SOLVE_THEOREMS_HPP_

#include <string>
#include <vector>

#include "opengames/classical/normal_form.hpp"
#include "opengames/classical/sequential.hpp"
#include "opengames/core/bounds.hpp"
#include "opengames/game/decision.hpp"
#include "opengames/game/payoff_shape.hpp"
#include "opengames/solve/expr.hpp"
#include "opengames/solve/solve.hpp"

namespace og {

// D_{1,X₁} ⊗ … ⊗ D_{1,X_n}, nested to the left.
inline GameExpr normal_form_expr(const NormalFormGame& nf, const Bounds& bounds = {}) {
  GameExpr out = GameExpr::atom(decision(unit_set(), nf.choices()[0], bounds), "decision", "D1");
  for (std::size_t i = 1; i < nf.players(); ++i)
    out = GameExpr::tensor(out, GameExpr::atom(decision(unit_set(), nf.choices()[i], bounds),
                                               "decision", "D" + std::to_string(i + 1)));
  return out;
}

// Reads a left-nested tensor profile of decisions over 1 as a flat tuple of
// choices.
inline Value flatten_decision_profile(const Value& nested, std::size_t players) {
  std::vector<Value> choices;
  for (const auto& f : unnest_tuple(nested, players)) choices.push_back(f[0]);
  return Value::tuple(std::move(choices));
}

// Pure Nash equilibria as states of the tensor of decisions over the payoff.
inline std::vector<Value> nash_normal_form(const NormalFormGame& nf, const Bounds& bounds = {}) {
  GameExpr e = normal_form_expr(nf, bounds);
  TotalFn k = continuation_from_payoff(nf.payoff(), e.eval().dst());
  std::vector<Value> out;
  for (const auto& s : states_over(e, k, bounds))
    out.push_back(flatten_decision_profile(s, nf.players()));
  return out;
}

// D^Δ_{X₁} ⊙ D^Δ_{X₁,X₂} ⊙ … as a chain, left- or right-nested.
inline GameExpr sequential_expr(const SequentialGame& g, bool right_nested = false,
                                const Bounds& bounds = {}) {
  std::vector<GameExpr> chain;
  for (std::size_t i = 0; i < g.players(); ++i) {
    std::vector<FiniteSet> xs(g.choices().begin(), g.choices().begin() + static_cast<std::ptrdiff_t>(i + 1));
    chain.push_back(GameExpr::atom(copy_decision(xs, bounds), "copy-decision",
                                   "DD" + std::to_string(i + 1)));
  }
  if (!right_nested) return GameExpr::seq(chain);
  GameExpr out = chain.back();
  for (std::size_t i = chain.size() - 1; i > 0; --i) out = GameExpr::seq(chain[i - 1], out);
  return out;
}

// Leaves of a ⊙-chain profile, in play order.
inline Value flatten_chain_profile(const GameExpr& e, const Value& p) {
  std::vector<Value> out;
  std::function<void(const GameExpr&, const Value&)> walk = [&](const GameExpr& n, const Value& v) {
    if (n.kind() == GameExpr::Kind::kSeq) {
      walk(n.children()[0], v[0]);
      walk(n.children()[1], v[1]);
    } else {
      out.push_back(v);
    }
  };
  walk(e, p);
  return Value::tuple(std::move(out));
}

struct SequentialSolution {
  std::vector<Value> nash;
  std::vector<Value> spe;
};

// Nash equilibria as states of the copy-decision chain and subgame perfect
// equilibria as its separable states. Profiles are tuples of σ_i : ∏_{j<i}X_j → X_i.
inline SequentialSolution spe_sequential(const SequentialGame& g, bool right_nested = false,
                                         const Bounds& bounds = {}) {
  GameExpr e = sequential_expr(g, right_nested, bounds);
  TotalFn k = continuation_from_payoff(g.payoff(), e.eval().dst());
  SequentialSolution out;
  for (const auto& s : states_over(e, k, bounds)) out.nash.push_back(flatten_chain_profile(e, s));
  for (const auto& s : separable_states_over(e, k, bounds))
    out.spe.push_back(flatten_chain_profile(e, s.profile));
  return out;
}

}  // namespace og

#endif  // OPENGAMES_SOLVE_THEOREMS_HPP_
