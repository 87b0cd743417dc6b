#ifndef OPENGAMES_GAME_REINDEX_HPP_
#define OPENGAMES_GAME_REINDEX_HPP_

#include "opengames/core/errors.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/game/open_game.hpp"
#include "opengames/lens/context.hpp"

namespace og {

// λ_!(G) for λ : Φ -> src(G): plays G(σ) ∘ λ, judged at the transported history.
inline OpenGame reindex_source(const OpenGame& g, const Lens& lambda) {
  if (!(lambda.cod() == g.src()))
    throw TypeMismatch("source reindexing needs a lens into " + g.src().to_string());
  return OpenGame(
      lambda.dom(), g.dst(), g.strategies(),
      [g, lambda](const Value& s) { return lens_compose(g.play(s), lambda); },
      [g, lambda](const Context& c, const Value& s, const Value& s2) {
        return g.best({lambda.view(c.history), c.continuation}, s, s2);
      },
      [g, lambda](const Context& c, const Value& s) {
        return g.responses({lambda.view(c.history), c.continuation}, s);
      },
      g.label());
}

// μ_*(G) for μ : dst(G) -> Θ: plays μ ∘ G(σ), judged at the transported continuation.
inline OpenGame reindex_target(const OpenGame& g, const Lens& mu) {
  if (!(mu.dom() == g.dst()))
    throw TypeMismatch("target reindexing needs a lens out of " + g.dst().to_string());
  return OpenGame(
      g.src(), mu.cod(), g.strategies(),
      [g, mu](const Value& s) { return lens_compose(mu, g.play(s)); },
      [g, mu](const Context& c, const Value& s, const Value& s2) {
        return g.best({c.history, apply_continuation(mu, c.continuation)}, s, s2);
      },
      [g, mu](const Context& c, const Value& s) {
        return g.responses({c.history, apply_continuation(mu, c.continuation)}, s);
      },
      g.label());
}

// f^*(G) for f : Σ′ -> Σ(G): the relation is the preimage of B_G.
inline OpenGame reindex_strategies(const OpenGame& g, const TotalFn& f) {
  if (!f.codomain().is_finite() || !(f.codomain().set() == g.strategies()))
    throw TypeMismatch("strategy reindexing needs a map into the strategies");
  return OpenGame(
      g.src(), g.dst(), f.domain(),
      [g, f](const Value& s) { return g.play(f(s)); },
      [g, f](const Context& c, const Value& s, const Value& s2) {
        return g.best(c, f(s), f(s2));
      },
      nullptr, g.label());
}

}  // namespace og

#endif  // OPENGAMES_GAME_REINDEX_HPP_
