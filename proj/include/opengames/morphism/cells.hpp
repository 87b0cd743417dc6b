#ifndef OPENGAMES_MORPHISM_CELLS_HPP_
#define OPENGAMES_MORPHISM_CELLS_HPP_

#include <functional>

#include "opengames/core/total_fn.hpp"
#include "opengames/game/operators.hpp"
#include "opengames/lens/structure.hpp"
#include "opengames/morphism/morphism.hpp"

// Structure 2-cells. Sequential composites follow the convention that
// seq_compose(G, H) is H ⊙ G with profiles (σ, τ).

namespace og {

namespace detail {

inline TotalFn strategy_map(const OpenGame& from, const OpenGame& to,
                            const std::function<Value(const Value&)>& f) {
  return TotalFn::tabulate(from.strategies(), Carrier::finite(to.strategies()), f);
}

inline GameMorphism globular(const OpenGame& from, const OpenGame& to,
                             const std::function<Value(const Value&)>& f) {
  if (!(from.src() == to.src()) || !(from.dst() == to.dst()))
    throw TypeMismatch("globular cell between games of different boundaries");
  return GameMorphism(from, to, lens_identity(to.src()), lens_identity(to.dst()),
                      strategy_map(from, to, f));
}

}  // namespace detail

// 𝔞_{I,H,G} : (I ⊙ H) ⊙ G -> I ⊙ (H ⊙ G), (σ, (τ, ρ)) ↦ ((σ, τ), ρ).
inline GameMorphism assoc_cell(const OpenGame& g, const OpenGame& h, const OpenGame& i) {
  return detail::globular(seq_compose(g, seq_compose(h, i)), seq_compose(seq_compose(g, h), i),
                          detail::reassoc_left);
}

inline GameMorphism assoc_cell_inv(const OpenGame& g, const OpenGame& h, const OpenGame& i) {
  return detail::globular(seq_compose(seq_compose(g, h), i), seq_compose(g, seq_compose(h, i)),
                          detail::reassoc_right);
}

// 𝔩_G : u(t(G)) ⊙ G -> G, (σ, ∗) ↦ σ.
inline GameMorphism lunit_cell(const OpenGame& g) {
  return detail::globular(seq_compose(g, unit_game(g.dst())), g,
                          [](const Value& p) { return p[0]; });
}

inline GameMorphism lunit_cell_inv(const OpenGame& g) {
  return detail::globular(g, seq_compose(g, unit_game(g.dst())),
                          [](const Value& s) { return Value::pair(s, Value::unit()); });
}

// 𝔯_G : G ⊙ u(s(G)) -> G, (∗, σ) ↦ σ.
inline GameMorphism runit_cell(const OpenGame& g) {
  return detail::globular(seq_compose(unit_game(g.src()), g), g,
                          [](const Value& p) { return p[1]; });
}

inline GameMorphism runit_cell_inv(const OpenGame& g) {
  return detail::globular(g, seq_compose(unit_game(g.src()), g),
                          [](const Value& s) { return Value::pair(Value::unit(), s); });
}

// 𝔘_{Φ₁,Φ₂} : u(Φ₁ ⊗ Φ₂) -> u(Φ₁) ⊗ u(Φ₂), ∗ ↦ (∗, ∗).
inline GameMorphism identitor_cell(const Diset& a, const Diset& b) {
  return detail::globular(unit_game(tensor(a, b)),
                          tensor_games(unit_game(a), unit_game(b)),
                          [](const Value&) { return Value::pair(Value::unit(), Value::unit()); });
}

inline GameMorphism identitor_cell_inv(const Diset& a, const Diset& b) {
  return detail::globular(tensor_games(unit_game(a), unit_game(b)),
                          unit_game(tensor(a, b)),
                          [](const Value&) { return Value::unit(); });
}

// 𝔛 : (H₁ ⊗ H₂) ⊙ (G₁ ⊗ G₂) -> (H₁ ⊙ G₁) ⊗ (H₂ ⊙ G₂),
// ((σ₁, σ₂), (τ₁, τ₂)) ↦ ((σ₁, τ₁), (σ₂, τ₂)).
inline GameMorphism interchange_cell(const OpenGame& g1, const OpenGame& g2,
                                     const OpenGame& h1, const OpenGame& h2) {
  auto shuffle = [](const Value& p) {
    return Value::pair(Value::pair(p[0][0], p[1][0]), Value::pair(p[0][1], p[1][1]));
  };
  return detail::globular(seq_compose(tensor_games(g1, g2), tensor_games(h1, h2)),
                          tensor_games(seq_compose(g1, h1), seq_compose(g2, h2)), shuffle);
}

inline GameMorphism interchange_cell_inv(const OpenGame& g1, const OpenGame& g2,
                                         const OpenGame& h1, const OpenGame& h2) {
  auto shuffle = [](const Value& p) {
    return Value::pair(Value::pair(p[0][0], p[1][0]), Value::pair(p[0][1], p[1][1]));
  };
  return detail::globular(tensor_games(seq_compose(g1, h1), seq_compose(g2, h2)),
                          seq_compose(tensor_games(g1, g2), tensor_games(h1, h2)), shuffle);
}

// u(λ) : u(Ψ) -> u(Φ) for λ : Φ -> Ψ.
inline GameMorphism unit_cell(const Lens& lambda) {
  OpenGame from = unit_game(lambda.cod());
  OpenGame to = unit_game(lambda.dom());
  return GameMorphism(from, to, lambda, lambda, TotalFn::identity(unit_set()));
}

// α_{G,H,K} : (G ⊗ H) ⊗ K -> G ⊗ (H ⊗ K).
inline GameMorphism tensor_assoc_cell(const OpenGame& g, const OpenGame& h, const OpenGame& k) {
  OpenGame from = tensor_games(tensor_games(g, h), k);
  OpenGame to = tensor_games(g, tensor_games(h, k));
  return GameMorphism(from, to, assoc_inv_lens(g.src(), h.src(), k.src()),
                      assoc_inv_lens(g.dst(), h.dst(), k.dst()),
                      detail::strategy_map(from, to, detail::reassoc_right));
}

inline GameMorphism tensor_assoc_cell_inv(const OpenGame& g, const OpenGame& h,
                                          const OpenGame& k) {
  OpenGame from = tensor_games(g, tensor_games(h, k));
  OpenGame to = tensor_games(tensor_games(g, h), k);
  return GameMorphism(from, to, assoc_lens(g.src(), h.src(), k.src()),
                      assoc_lens(g.dst(), h.dst(), k.dst()),
                      detail::strategy_map(from, to, detail::reassoc_left));
}

// λ_G : u(I) ⊗ G -> G.
inline GameMorphism tensor_lunit_cell(const OpenGame& g) {
  OpenGame from = tensor_games(unit_game(unit_diset()), g);
  return GameMorphism(from, g, lunit_inv_lens(g.src()), lunit_inv_lens(g.dst()),
                      detail::strategy_map(from, g, [](const Value& p) { return p[1]; }));
}

inline GameMorphism tensor_lunit_cell_inv(const OpenGame& g) {
  OpenGame to = tensor_games(unit_game(unit_diset()), g);
  return GameMorphism(g, to, lunit_lens(g.src()), lunit_lens(g.dst()),
                      detail::strategy_map(g, to, [](const Value& s) {
                        return Value::pair(Value::unit(), s);
                      }));
}

// ρ_G : G ⊗ u(I) -> G.
inline GameMorphism tensor_runit_cell(const OpenGame& g) {
  OpenGame from = tensor_games(g, unit_game(unit_diset()));
  return GameMorphism(from, g, runit_inv_lens(g.src()), runit_inv_lens(g.dst()),
                      detail::strategy_map(from, g, [](const Value& p) { return p[0]; }));
}

inline GameMorphism tensor_runit_cell_inv(const OpenGame& g) {
  OpenGame to = tensor_games(g, unit_game(unit_diset()));
  return GameMorphism(g, to, runit_lens(g.src()), runit_lens(g.dst()),
                      detail::strategy_map(g, to, [](const Value& s) {
                        return Value::pair(s, Value::unit());
                      }));
}

// σ_{G,H} : G ⊗ H -> H ⊗ G. Its inverse is symmetry_cell(H, G).
inline GameMorphism symmetry_cell(const OpenGame& g, const OpenGame& h) {
  OpenGame from = tensor_games(g, h);
  OpenGame to = tensor_games(h, g);
  return GameMorphism(from, to, swap_lens(h.src(), g.src()), swap_lens(h.dst(), g.dst()),
                      detail::strategy_map(from, to, [](const Value& p) {
                        return Value::pair(p[1], p[0]);
                      }));
}

}  // namespace og

#endif  // OPENGAMES_MORPHISM_CELLS_HPP_
