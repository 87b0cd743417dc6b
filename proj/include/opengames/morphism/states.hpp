#ifndef OPENGAMES_MORPHISM_STATES_HPP_
#define OPENGAMES_MORPHISM_STATES_HPP_

#include <vector>

#include "opengames/core/errors.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/game/operators.hpp"
#include "opengames/game/reindex.hpp"
#include "opengames/lens/limits.hpp"
#include "opengames/morphism/morphism.hpp"

namespace og {

// A profile σ and a continuation k.
struct StateCert {
  Value sigma;
  TotalFn continuation;

  friend bool operator==(const StateCert& a, const StateCert& b) {
    return a.sigma == b.sigma && a.continuation == b.continuation;
  }
};

// (σ, σ) ∈ B_G(h, k) for every history h.
inline bool is_state(const OpenGame& g, const StateCert& cert) {
  for (const auto& h : g.src().forward)
    if (!g.best({h, cert.continuation}, cert.sigma, cert.sigma)) return false;
  return true;
}

// The 2-cell u(I) -> G with s = k ∘ G(σ), t = k and ∗ ↦ σ.
inline GameMorphism state_to_morphism(const OpenGame& g, const StateCert& cert) {
  if (!is_continuation_for(cert.continuation, g.dst()))
    throw TypeMismatch("continuation does not fit " + g.dst().to_string());
  if (!is_state(g, cert))
    throw NotAState(cert.sigma.to_string() + " is not a state over the given continuation");
  Lens k = effect_lens(cert.continuation);
  OpenGame unit = unit_game(unit_diset());
  return GameMorphism(unit, g, lens_compose(k, g.play(cert.sigma)), k,
                      TotalFn(unit_set(), Carrier::finite(g.strategies()), {cert.sigma}));
}

inline StateCert morphism_to_state(const GameMorphism& alpha) {
  const OpenGame& from = alpha.from();
  if (!(from.src() == unit_diset()) || !(from.dst() == unit_diset()) ||
      from.strategies().size() != 1)
    throw TypeMismatch("morphism does not start at the unit game on I");
  return {alpha.sigma(from.strategies()[0]), lens_to_continuation(alpha.t())};
}

// St(α): a state of G over k goes to a state of G′ over K(t(α))(k).
inline StateCert state_image(const GameMorphism& alpha, const StateCert& cert) {
  return {alpha.sigma(cert.sigma), apply_continuation(alpha.t(), cert.continuation)};
}

// π_j : ∏G_i -> G_j with legs (ι_j, S) and (ι_j, R).
inline GameMorphism product_projection(const OpenGame& product,
                                       const std::vector<OpenGame>& family, std::size_t j) {
  std::vector<Diset> srcs, dsts;
  for (const auto& g : family) {
    srcs.push_back(g.src());
    dsts.push_back(g.dst());
  }
  auto sigma = TotalFn::tabulate(product.strategies(), Carrier::finite(family[j].strategies()),
                                 [j](const Value& p) { return p[j]; });
  return GameMorphism(product, family[j], coproduct_diset(srcs).injections[j],
                      coproduct_diset(dsts).injections[j], sigma);
}

// ⟨α_i⟩ : H -> ∏G_i with legs [s(α_i)], [t(α_i)].
inline GameMorphism product_mediator(const OpenGame& product,
                                     const std::vector<GameMorphism>& family) {
  if (family.empty()) throw TypeMismatch("mediator of an empty family");
  const OpenGame& h = family[0].from();
  std::vector<Lens> ss, ts;
  for (const auto& a : family) {
    if (!(a.from().src() == h.src()) || !(a.from().dst() == h.dst()) ||
        !(a.from().strategies() == h.strategies()))
      throw TypeMismatch("mediator needs a common source game");
    ss.push_back(a.s());
    ts.push_back(a.t());
  }
  auto sigma = TotalFn::tabulate(h.strategies(), Carrier::finite(product.strategies()),
                                 [&](const Value& s) {
                                   std::vector<Value> parts;
                                   for (const auto& a : family) parts.push_back(a.sigma(s));
                                   return Value::tuple(std::move(parts));
                                 });
  return GameMorphism(h, product, copair_lenses(ss), copair_lenses(ts), sigma);
}

// λ̲(G) : G -> λ_!(G).
inline GameMorphism source_lifting(const OpenGame& g, const Lens& lambda) {
  return GameMorphism(g, reindex_source(g, lambda), lambda, lens_identity(g.dst()),
                      TotalFn::identity(g.strategies()));
}

// μ_*(G) -> G.
inline GameMorphism target_lifting(const OpenGame& g, const Lens& mu) {
  return GameMorphism(reindex_target(g, mu), g, lens_identity(g.src()), mu,
                      TotalFn::identity(g.strategies()));
}

// f^*(G) -> G.
inline GameMorphism strategy_lifting(const OpenGame& g, const TotalFn& f) {
  return GameMorphism(reindex_strategies(g, f), g, lens_identity(g.src()),
                      lens_identity(g.dst()), f);
}

}  // namespace og

#endif  // OPENGAMES_MORPHISM_STATES_HPP_
