#ifndef OPENGAMES_GAME_OPERATORS_HPP_
#define OPENGAMES_GAME_OPERATORS_HPP_

#include <string>
#include <vector>

#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/game/open_game.hpp"
#include "opengames/lens/context.hpp"
#include "opengames/lens/limits.hpp"

namespace og {

// A one-strategy game playing λ whose best response always holds.
inline OpenGame trivial_game(const Lens& lambda, std::string label = "trivial") {
  return OpenGame(
      lambda.dom(), lambda.cod(), unit_set(),
      [lambda](const Value&) { return lambda; },
      [](const Context&, const Value&, const Value&) { return true; },
      [](const Context&, const Value&) { return StrategySubset{true}; },
      std::move(label));
}

// u(Φ).
inline OpenGame unit_game(const Diset& phi) {
  return trivial_game(lens_identity(phi), "unit");
}

// H ⊙ G: play G then H. Profiles are pairs (σ, τ).
inline OpenGame seq_compose(const OpenGame& g, const OpenGame& h) {
  if (!(g.dst() == h.src()))
    throw TypeMismatch("sequential composition needs dst(G) = src(H): " +
                       g.dst().to_string() + " vs " + h.src().to_string());
  return OpenGame(
      g.src(), h.dst(), product_set(g.strategies(), h.strategies()),
      [g, h](const Value& p) { return lens_compose(h.play(p[1]), g.play(p[0])); },
      [g, h](const Context& c, const Value& p, const Value& p2) {
        TotalFn k_g = apply_continuation(h.play(p[1]), c.continuation);
        if (!g.best({c.history, k_g}, p[0], p2[0])) return false;
        return h.best({g.play(p[0]).view(c.history), c.continuation}, p[1], p2[1]);
      },
      [g, h](const Context& c, const Value& p) {
        TotalFn k_g = apply_continuation(h.play(p[1]), c.continuation);
        StrategySubset a = g.responses({c.history, k_g}, p[0]);
        StrategySubset b =
            h.responses({g.play(p[0]).view(c.history), c.continuation}, p[1]);
        StrategySubset out(a.size() * b.size(), false);
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = b[j];
        return out;
      },
      "(" + h.label() + " . " + g.label() + ")");
}

// G₁ ⊗ G₂. Each factor is judged in the context projected through the other
// factor's play.
inline OpenGame tensor_games(const OpenGame& g1, const OpenGame& g2) {
  auto contexts = [g1, g2](const Context& c, const Value& p) {
    const Value& h = c.history;
    Value y2 = g2.play(p[1]).view(h[1]);
    Value y1 = g1.play(p[0]).view(h[0]);
    return std::pair<Context, Context>{
        {h[0], detail::left_continuation(g1.dst(), y2, c.continuation)},
        {h[1], detail::right_continuation(g2.dst(), y1, c.continuation)}};
  };
  return OpenGame(
      tensor(g1.src(), g2.src()), tensor(g1.dst(), g2.dst()),
      product_set(g1.strategies(), g2.strategies()),
      [g1, g2](const Value& p) { return lens_tensor(g1.play(p[0]), g2.play(p[1])); },
      [g1, g2, contexts](const Context& c, const Value& p, const Value& p2) {
        auto [left, right] = contexts(c, p);
        return g1.best(left, p[0], p2[0]) && g2.best(right, p[1], p2[1]);
      },
      [g1, g2, contexts](const Context& c, const Value& p) {
        auto [left, right] = contexts(c, p);
        StrategySubset a = g1.responses(left, p[0]);
        StrategySubset b = g2.responses(right, p[1]);
        StrategySubset out(a.size() * b.size(), false);
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = b[j];
        return out;
      },
      "(" + g1.label() + " * " + g2.label() + ")");
}

// k ∘ ι_j.
inline TotalFn restrict_continuation(const TotalFn& k, std::size_t j, const Diset& psi_j) {
  return TotalFn::tabulate(psi_j.forward, psi_j.backward,
                           [&](const Value& y) { return k(Value::tagged(j, y)); });
}

// ∏G_i : (∐X_i, S) ⇸ (∐Y_i, R). Profiles are flat tuples.
inline OpenGame product_games(const std::vector<OpenGame>& family) {
  if (family.empty()) throw TypeMismatch("product of an empty family");
  std::vector<Diset> srcs, dsts;
  std::vector<FiniteSet> sigmas;
  std::string label = "(";
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& g = family[i];
    if (!(g.src().backward == family[0].src().backward) ||
        !(g.dst().backward == family[0].dst().backward))
      throw BackwardMismatch("product of games needs shared backward carriers");
    srcs.push_back(g.src());
    dsts.push_back(g.dst());
    sigmas.push_back(g.strategies());
    label += (i ? " x " : "") + g.label();
  }
  label += ")";
  Diset src = coproduct_diset(srcs).diset;
  Diset dst = coproduct_diset(dsts).diset;
  FiniteSet sigma = tuple_set(sigmas);
  auto component = [family](const Context& c) {
    std::size_t j = c.history.tag();
    return std::pair<std::size_t, Context>{
        j, {c.history.inner(), restrict_continuation(c.continuation, j, family[j].dst())}};
  };
  return OpenGame(
      src, dst, sigma,
      [family](const Value& p) {
        std::vector<Lens> lenses;
        for (std::size_t i = 0; i < family.size(); ++i) lenses.push_back(family[i].play(p[i]));
        return coproduct_lenses(lenses);
      },
      [family, component](const Context& c, const Value& p, const Value& p2) {
        auto [j, cj] = component(c);
        return family[j].best(cj, p[j], p2[j]);
      },
      [family, component, sigma](const Context& c, const Value& p) {
        auto [j, cj] = component(c);
        StrategySubset a = family[j].responses(cj, p[j]);
        StrategySubset out(sigma.size(), false);
        for (std::size_t i = 0; i < sigma.size(); ++i)
          out[i] = a[family[j].strategies().index_of(sigma[i][j])];
        return out;
      },
      label);
}

}  // namespace og

#endif  // OPENGAMES_GAME_OPERATORS_HPP_
