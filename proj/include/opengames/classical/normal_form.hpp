#ifndef OPENGAMES_CLASSICAL_NORMAL_FORM_HPP_
#define OPENGAMES_CLASSICAL_NORMAL_FORM_HPP_

#include <string>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/total_fn.hpp"

namespace og {

// Choice sets X₁..X_n and payoffs on flat n-tuples.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<FiniteSet> choices, TotalFn payoff)
      : choices_(std::move(choices)), payoff_(std::move(payoff)) {
    if (choices_.empty()) throw TypeMismatch("a normal form game needs a player");
    if (!(payoff_.domain() == tuple_set(choices_)))
      throw TypeMismatch("payoff table is not defined on the choice profiles");
    if (payoff_.codomain().kind() != Carrier::Kind::kPayoff ||
        payoff_.codomain().dimension() != choices_.size())
      throw TypeMismatch("payoffs must have one coordinate per player");
  }

  std::size_t players() const { return choices_.size(); }
  const std::vector<FiniteSet>& choices() const { return choices_; }
  const TotalFn& payoff() const { return payoff_; }
  const FiniteSet& profiles() const { return payoff_.domain(); }
  const Rational& utility(const Value& profile, std::size_t i) const {
    return payoff_(profile).coords()[i];
  }

 private:
  std::vector<FiniteSet> choices_;
  TotalFn payoff_;
};

inline Value replace_component(const Value& profile, std::size_t i, const Value& x) {
  auto parts = profile.elements();
  parts[i] = x;
  return Value::tuple(std::move(parts));
}

// Profiles from which no player gains strictly by a unilateral deviation.
inline std::vector<Value> brute_nash(const NormalFormGame& nf, const Bounds& bounds = {}) {
  BoundedCount(bounds, "profile enumeration").times(nf.profiles().size());
  std::vector<Value> out;
  for (const auto& p : nf.profiles()) {
    bool nash = true;
    for (std::size_t i = 0; i < nf.players() && nash; ++i) {
      const Rational& current = nf.utility(p, i);
      for (const auto& x : nf.choices()[i]) {
        if (nf.utility(replace_component(p, i, x), i) > current) {
          nash = false;
          break;
        }
      }
    }
    if (nash) out.push_back(p);
  }
  return out;
}

}  // namespace og

#endif  // OPENGAMES_CLASSICAL_NORMAL_FORM_HPP_
