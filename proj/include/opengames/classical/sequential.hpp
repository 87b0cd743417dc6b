#ifndef OPENGAMES_CLASSICAL_SEQUENTIAL_HPP_
#define OPENGAMES_CLASSICAL_SEQUENTIAL_HPP_

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "opengames/classical/extensive.hpp"
#include "opengames/classical/normal_form.hpp"
#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/total_fn.hpp"

namespace og {

// Player i moves at level i having observed every earlier move. Players and
// levels are 0-based; player i's strategies are functions from the first i
// moves (the unit history when i = 0) to X_i.
class SequentialGame {
 public:
  SequentialGame(std::vector<FiniteSet> choices, TotalFn payoff)
      : choices_(std::move(choices)), payoff_(std::move(payoff)) {
    if (choices_.empty()) throw TypeMismatch("a sequential game needs a player");
    if (!(payoff_.domain() == tuple_set(choices_)))
      throw TypeMismatch("payoff table is not defined on the plays");
    if (payoff_.codomain().kind() != Carrier::Kind::kPayoff ||
        payoff_.codomain().dimension() != choices_.size())
      throw TypeMismatch("payoffs must have one coordinate per player");
  }

  std::size_t players() const { return choices_.size(); }
  const std::vector<FiniteSet>& choices() const { return choices_; }
  const TotalFn& payoff() const { return payoff_; }
  const Rational& utility(const Value& play, std::size_t i) const {
    return payoff_(play).coords()[i];
  }

  FiniteSet history_set(std::size_t i) const {
    if (i == 0) return unit_set();
    return tuple_set(std::span<const FiniteSet>(choices_.data(), i));
  }

  FiniteSet strategies(std::size_t i, const Bounds& bounds = {}) const {
    return function_set(history_set(i), choices_[i], bounds);
  }

  FiniteSet profiles(const Bounds& bounds = {}) const {
    std::vector<FiniteSet> sets;
    BoundedCount count(bounds, "sequential profiles");
    for (std::size_t i = 0; i < players(); ++i) {
      sets.push_back(strategies(i, bounds));
      count.times(sets.back().size());
    }
    return tuple_set(sets);
  }

  static Value history_value(const std::vector<Value>& prefix) {
    if (prefix.empty()) return Value::unit();
    return Value::tuple(prefix);
  }

  // v^σ_x where `sigma` holds the strategies of players p..n-1 and `prefix`
  // the moves x_0..x_{q-1}, with p ≤ q ≤ n.
  Value strategic_extension(const std::vector<Value>& sigma, std::size_t p,
                            const std::vector<Value>& prefix) const {
    const std::size_t n = players();
    const std::size_t q = prefix.size();
    if (p > q || q > n || sigma.size() != n - p)
      throw IndexMismatch("strategic extension needs p ≤ q ≤ n and one strategy per player from p");
    std::vector<Value> play;
    for (std::size_t i = 0; i < q; ++i) {
      if (!choices_[i].contains(prefix[i]))
        throw TypeMismatch("move " + prefix[i].to_string() + " is not a choice of player " +
                           std::to_string(i));
      play.push_back(prefix[i]);
    }
    for (std::size_t i = q; i < n; ++i) {
      const Value& s = sigma[i - p];
      play.push_back(s[history_set(i).index_of(history_value(play))]);
    }
    return Value::tuple(std::move(play));
  }

  Value play(const Value& profile, const std::vector<Value>& prefix = {}) const {
    return strategic_extension(profile.elements(), 0, prefix);
  }

 private:
  std::vector<FiniteSet> choices_;
  TotalFn payoff_;
};

namespace detail {

inline std::vector<Value> prefix_of(const Value& play, std::size_t i) {
  return {play.elements().begin(), play.elements().begin() + static_cast<std::ptrdiff_t>(i)};
}

}  // namespace detail

// Nash via deviations from the equilibrium path.
inline bool is_sequential_nash(const SequentialGame& g, const Value& profile) {
  const Value path = g.play(profile);
  for (std::size_t i = 0; i < g.players(); ++i) {
    auto before = detail::prefix_of(path, i);
    const Rational& kept = g.utility(path, i);
    for (const auto& x : g.choices()[i]) {
      auto deviated = before;
      deviated.push_back(x);
      if (g.utility(g.play(profile, deviated), i) > kept) return false;
    }
  }
  return true;
}

// Subgame perfection via deviations after every history.
inline bool is_sequential_spe(const SequentialGame& g, const Value& profile) {
  for (std::size_t i = 0; i < g.players(); ++i) {
    for (const auto& h : g.history_set(i)) {
      std::vector<Value> before = h.is_unit() ? std::vector<Value>{} : h.elements();
      const Rational& kept = g.utility(g.play(profile, before), i);
      for (const auto& x : g.choices()[i]) {
        auto deviated = before;
        deviated.push_back(x);
        if (g.utility(g.play(profile, deviated), i) > kept) return false;
      }
    }
  }
  return true;
}

inline NormalFormGame normalize_sequential(const SequentialGame& g, const Bounds& bounds = {}) {
  std::vector<FiniteSet> sets;
  for (std::size_t i = 0; i < g.players(); ++i) sets.push_back(g.strategies(i, bounds));
  FiniteSet profiles = tuple_set(sets);
  BoundedCount(bounds, "sequential normalization").times(profiles.size());
  return NormalFormGame(sets, TotalFn::tabulate(profiles, g.payoff().codomain(),
                                                [&](const Value& p) { return g.payoff()(g.play(p)); }));
}

// All subgame perfect profiles, choosing from the last player backwards and
// branching on ties.
inline std::vector<Value> backward_induction(const SequentialGame& g, const Bounds& bounds = {}) {
  const std::size_t n = g.players();
  std::vector<FiniteSet> histories;
  for (std::size_t i = 0; i < n; ++i) histories.push_back(g.history_set(i));
  std::vector<std::vector<Value>> images(n);
  std::vector<Value> out;

  auto current = [&](std::size_t from) {
    std::vector<Value> sigma;
    for (std::size_t j = from; j < n; ++j) sigma.push_back(Value::function(images[j]));
    return sigma;
  };

  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t i, std::size_t h) {
    if (h == histories[i].size()) {
      if (i == 0) {
        out.push_back(Value::tuple(current(0)));
        if (out.size() > bounds.max_table) throw EnumerationBound("backward induction: too many profiles");
        return;
      }
      fill(i - 1, 0);
      return;
    }
    const Value& hist = histories[i][h];
    std::vector<Value> before = hist.is_unit() ? std::vector<Value>{} : hist.elements();
    auto later = current(i + 1);
    std::vector<Rational> values;
    for (const auto& x : g.choices()[i]) {
      auto extended = before;
      extended.push_back(x);
      values.push_back(g.utility(g.strategic_extension(later, i + 1, extended), i));
    }
    Rational best = values[0];
    for (const auto& v : values)
      if (v > best) best = v;
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (!(values[j] == best)) continue;
      images[i].push_back(g.choices()[i][j]);
      fill(i, h + 1);
      images[i].pop_back();
    }
  };
  fill(n - 1, 0);
  auto key = [&](const Value& p) {
    std::vector<std::size_t> k;
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& x : p[i].elements()) k.push_back(g.choices()[i].index_of(x));
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const Value& a, const Value& b) { return key(a) < key(b); });
  return out;
}

// The perfect-information tree of a sequential game. Actions are the printed
// choices; player i's information sets follow the order of history_set(i).
inline ExtensiveGame to_extensive(const SequentialGame& g) {
  const std::size_t n = g.players();
  std::vector<ExtensiveNode> nodes;
  std::vector<std::vector<Value>> frontier{{}};
  nodes.push_back({"root", 0, {}, {}});
  std::vector<std::size_t> frontier_nodes{0};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Value>> next;
    std::vector<std::size_t> next_nodes;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      for (const auto& x : g.choices()[i]) {
        auto play = frontier[f];
        play.push_back(x);
        std::string id = "v" + std::to_string(nodes.size());
        std::size_t child = nodes.size();
        if (i + 1 < n) {
          nodes.push_back({id, i + 1, {}, {}});
        } else {
          nodes.push_back({id, std::nullopt, {}, g.payoff()(Value::tuple(play)).coords()});
        }
        nodes[frontier_nodes[f]].moves.emplace_back(x.to_string(), child);
        next.push_back(std::move(play));
        next_nodes.push_back(child);
      }
    }
    frontier = std::move(next);
    frontier_nodes = std::move(next_nodes);
  }
  return ExtensiveGame(n, std::move(nodes));
}

// Carries a sequential profile to the corresponding tree profile.
inline Value sequential_to_tree_profile(const SequentialGame& g, const Value& profile) {
  std::vector<Value> parts;
  for (std::size_t i = 0; i < g.players(); ++i) {
    std::vector<Value> images;
    for (const auto& x : profile[i].elements()) images.push_back(Value::atom(x.to_string()));
    parts.push_back(Value::function(std::move(images)));
  }
  return Value::tuple(std::move(parts));
}

inline Value tree_to_sequential_profile(const SequentialGame& g, const Value& profile) {
  std::vector<Value> parts;
  for (std::size_t i = 0; i < g.players(); ++i) {
    std::vector<Value> images;
    for (const auto& a : profile[i].elements()) {
      bool found = false;
      for (const auto& x : g.choices()[i]) {
        if (x.to_string() == a.name()) {
          images.push_back(x);
          found = true;
          break;
        }
      }
      if (!found) throw TypeMismatch("action " + a.name() + " is not a choice");
    }
    parts.push_back(Value::function(std::move(images)));
  }
  return Value::tuple(std::move(parts));
}

}  // namespace og

#endif  // OPENGAMES_CLASSICAL_SEQUENTIAL_HPP_
