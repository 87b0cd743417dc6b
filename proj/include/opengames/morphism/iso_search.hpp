#ifndef OPENGAMES_MORPHISM_ISO_SEARCH_HPP_
#define OPENGAMES_MORPHISM_ISO_SEARCH_HPP_

#include <functional>
#include <optional>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/lens/equality.hpp"
#include "opengames/morphism/morphism.hpp"

namespace og {

struct GlobularIso {
  GameMorphism forward;
  GameMorphism backward;
};

// Searches bijections Σ(G) -> Σ(G′) that match play lenses and for which
// both directions pass check_morphism.
inline std::optional<GlobularIso> find_globular_iso(const OpenGame& g, const OpenGame& g2,
                                                    const std::vector<TotalFn>& extra = {},
                                                    const Bounds& bounds = {}) {
  if (!(g.src() == g2.src()) || !(g.dst() == g2.dst())) return std::nullopt;
  const std::size_t n = g.strategies().size();
  if (n != g2.strategies().size()) return std::nullopt;
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (lens_equal(g.play(g.strategies()[i]), g2.play(g2.strategies()[j]), bounds))
        candidates[i].push_back(j);
    if (candidates[i].empty()) return std::nullopt;
  }
  std::vector<std::size_t> choice(n);
  std::vector<bool> used(n, false);
  std::optional<GlobularIso> found;
  auto attempt = [&]() {
    std::vector<Value> fwd(n), bwd(n);
    for (std::size_t i = 0; i < n; ++i) {
      fwd[i] = g2.strategies()[choice[i]];
      bwd[choice[i]] = g.strategies()[i];
    }
    GameMorphism f(g, g2, lens_identity(g2.src()), lens_identity(g2.dst()),
                   TotalFn(g.strategies(), Carrier::finite(g2.strategies()), fwd));
    GameMorphism b(g2, g, lens_identity(g.src()), lens_identity(g.dst()),
                   TotalFn(g2.strategies(), Carrier::finite(g.strategies()), bwd));
    if (check_morphism(f, extra, bounds).valid && check_morphism(b, extra, bounds).valid)
      found = GlobularIso{f, b};
  };
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (found) return;
    if (i == n) {
      attempt();
      return;
    }
    for (auto j : candidates[i]) {
      if (used[j]) continue;
      used[j] = true;
      choice[i] = j;
      search(i + 1);
      used[j] = false;
      if (found) return;
    }
  };
  search(0);
  return found;
}

}  // namespace og

#endif  // OPENGAMES_MORPHISM_ISO_SEARCH_HPP_
