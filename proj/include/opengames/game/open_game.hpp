#ifndef OPENGAMES_GAME_OPEN_GAME_HPP_
#define OPENGAMES_GAME_OPEN_GAME_HPP_

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/value.hpp"
#include "opengames/lens/context.hpp"
#include "opengames/lens/diset.hpp"
#include "opengames/lens/lens.hpp"

namespace og {

// Subset of a strategy set, indexed by enumeration order.
using StrategySubset = std::vector<bool>;

// An open game Φ ⇸ Ψ: strategies, a lens per strategy and a best-response
// relation. `responses` is an optional fast path for the set
// {σ′ | (σ, σ′) ∈ B(c)}; it must agree with `best`.
class OpenGame {
 public:
  using PlayFn = std::function<Lens(const Value& sigma)>;
  using BestFn =
      std::function<bool(const Context& c, const Value& sigma, const Value& sigma2)>;
  using ResponseFn = std::function<StrategySubset(const Context& c, const Value& sigma)>;

  OpenGame(Diset src, Diset dst, FiniteSet strategies, PlayFn play, BestFn best,
           ResponseFn responses = nullptr, std::string label = "") {
    auto impl = std::make_shared<Impl>();
    impl->src = std::move(src);
    impl->dst = std::move(dst);
    impl->strategies = std::move(strategies);
    impl->play = std::move(play);
    impl->best = std::move(best);
    impl->responses = std::move(responses);
    impl->label = std::move(label);
    impl->plays.resize(impl->strategies.size());
    impl_ = std::move(impl);
  }

  const Diset& src() const { return impl_->src; }
  const Diset& dst() const { return impl_->dst; }
  const FiniteSet& strategies() const { return impl_->strategies; }
  const std::string& label() const { return impl_->label; }

  // G(σ), memoized per profile.
  Lens play(const Value& sigma) const {
    std::size_t i = index(sigma);
    {
      std::lock_guard<std::mutex> lock(impl_->mutex);
      if (impl_->plays[i]) return *impl_->plays[i];
    }
    Lens lens = impl_->play(sigma);
    if (!(lens.dom() == src()) || !(lens.cod() == dst()))
      throw TypeMismatch("play lens of " + sigma.to_string() + " has type " +
                         lens.dom().to_string() + " -> " + lens.cod().to_string());
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (!impl_->plays[i]) impl_->plays[i] = lens;
    return *impl_->plays[i];
  }

  bool best(const Context& c, const Value& sigma, const Value& sigma2) const {
    check_context(c);
    index(sigma);
    index(sigma2);
    return impl_->best(c, sigma, sigma2);
  }

  // {σ′ | (σ, σ′) ∈ B(c)}.
  StrategySubset responses(const Context& c, const Value& sigma) const {
    check_context(c);
    index(sigma);
    if (impl_->responses) return impl_->responses(c, sigma);
    StrategySubset out(strategies().size(), false);
    for (std::size_t j = 0; j < out.size(); ++j)
      out[j] = impl_->best(c, sigma, strategies()[j]);
    return out;
  }

  std::size_t index(const Value& sigma) const {
    auto i = impl_->strategies.find(sigma);
    if (!i)
      throw TypeMismatch(sigma.to_string() + " is not a strategy profile of " +
                         (label().empty() ? std::string("the game") : label()));
    return *i;
  }

  void check_context(const Context& c) const {
    if (!src().forward.contains(c.history))
      throw TypeMismatch("history " + c.history.to_string() + " is not in " +
                         src().forward.to_string());
    if (!is_continuation_for(c.continuation, dst()))
      throw TypeMismatch("continuation does not fit " + dst().to_string());
  }

 private:
  struct Impl {
    Diset src;
    Diset dst;
    FiniteSet strategies;
    PlayFn play;
    BestFn best;
    ResponseFn responses;
    std::string label;
    mutable std::mutex mutex;
    mutable std::vector<std::optional<Lens>> plays;
  };
  std::shared_ptr<const Impl> impl_;
};

inline bool best_response(const OpenGame& g, const Context& c, const Value& sigma,
                          const Value& sigma2) {
  return g.best(c, sigma, sigma2);
}

}  // namespace og

#endif  // OPENGAMES_GAME_OPEN_GAME_HPP_
