#ifndef OPENGAMES_CLASSICAL_EXTENSIVE_HPP_
#define OPENGAMES_CLASSICAL_EXTENSIVE_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "opengames/classical/normal_form.hpp"
#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/rational.hpp"
#include "opengames/core/total_fn.hpp"

namespace og {

struct ExtensiveNode {
  std::string id;
  std::optional<std::size_t> player;  // empty at leaves
  std::vector<std::pair<std::string, std::size_t>> moves;  // action, child
  std::vector<Rational> payoff;                            // leaves only
};

struct InfoSet {
  std::string id;
  std::size_t player;
  std::vector<std::size_t> nodes;
  FiniteSet actions;
};

// A finite game tree with perfect or imperfect information. Node 0 is the root.
// Decision nodes not listed in any information set get a singleton one.
class ExtensiveGame {
 public:
  ExtensiveGame(std::size_t players, std::vector<ExtensiveNode> nodes,
                std::vector<std::pair<std::string, std::vector<std::string>>> infosets = {})
      : players_(players), nodes_(std::move(nodes)) {
    if (players_ == 0) throw MalformedInfoSet("an extensive game needs a player");
    if (nodes_.empty()) throw MalformedInfoSet("an extensive game needs a root");
    validate_tree();
    build_infosets(infosets);
  }

  std::size_t players() const { return players_; }
  const std::vector<ExtensiveNode>& nodes() const { return nodes_; }
  const std::vector<InfoSet>& infosets() const { return infosets_; }
  std::size_t infoset_of(std::size_t node) const { return infoset_of_.at(node); }
  const std::vector<std::size_t>& player_infosets(std::size_t i) const { return by_player_[i]; }
  std::size_t node_index(const std::string& id) const {
    for (std::size_t v = 0; v < nodes_.size(); ++v)
      if (nodes_[v].id == id) return v;
    throw MalformedInfoSet("unknown node " + id);
  }

  // Pure strategies of player i: functions from its information sets (in
  // order) to actions available there.
  FiniteSet strategies(std::size_t i, const Bounds& bounds = {}) const {
    const auto& own = by_player_[i];
    BoundedCount count(bounds, "extensive strategies");
    for (auto s : own) count.times(infosets_[s].actions.size());
    std::vector<Value> out;
    std::vector<std::size_t> digits(own.size(), 0);
    while (true) {
      std::vector<Value> images;
      for (std::size_t j = 0; j < own.size(); ++j)
        images.push_back(infosets_[own[j]].actions[digits[j]]);
      out.push_back(Value::function(std::move(images)));
      std::size_t j = own.size();
      while (j > 0) {
        --j;
        if (++digits[j] < infosets_[own[j]].actions.size()) break;
        digits[j] = 0;
        if (j == 0) return FiniteSet::make(std::move(out));
      }
      if (own.empty()) return FiniteSet::make(std::move(out));
    }
  }

  // The action taken at a decision node under a flat profile tuple.
  std::size_t choose(std::size_t v, const Value& profile) const {
    const auto& node = nodes_[v];
    std::size_t s = infoset_of_.at(v);
    const auto& own = by_player_[*node.player];
    std::size_t slot = 0;
    while (own[slot] != s) ++slot;
    const Value& action = profile[*node.player][slot];
    for (const auto& [a, child] : node.moves)
      if (a == action.name()) return child;
    throw TypeMismatch("action " + action.to_string() + " not available at " + node.id);
  }

  const std::vector<Rational>& outcome(const Value& profile, std::size_t from = 0) const {
    std::size_t v = from;
    while (nodes_[v].player) v = choose(v, profile);
    return nodes_[v].payoff;
  }

  // Roots of subtrees closed under information sets.
  std::vector<std::size_t> subgame_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (!nodes_[v].player) continue;
      auto below = subtree(v);
      std::set<std::size_t> inside(below.begin(), below.end());
      bool closed = true;
      for (auto u : below) {
        if (!nodes_[u].player) continue;
        for (auto w : infosets_[infoset_of_.at(u)].nodes)
          if (!inside.count(w)) closed = false;
      }
      if (closed) out.push_back(v);
    }
    return out;
  }

  std::vector<std::size_t> subtree(std::size_t v) const {
    std::vector<std::size_t> out{v};
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto& [a, child] : nodes_[out[i]].moves) out.push_back(child);
    return out;
  }

 private:
  void validate_tree() {
    std::vector<int> parents(nodes_.size(), 0);
    std::set<std::string> ids;
    for (const auto& n : nodes_) {
      if (!ids.insert(n.id).second) throw MalformedInfoSet("duplicate node id " + n.id);
      if (n.player) {
        if (*n.player >= players_) throw IndexMismatch("node " + n.id + " names an unknown player");
        if (n.moves.empty()) throw MalformedInfoSet("decision node " + n.id + " has no moves");
        std::set<std::string> labels;
        for (const auto& [a, child] : n.moves) {
          if (child >= nodes_.size() || child == 0)
            throw MalformedInfoSet("node " + n.id + " has a bad child");
          if (!labels.insert(a).second)
            throw MalformedInfoSet("node " + n.id + " repeats action " + a);
          ++parents[child];
        }
      } else if (n.payoff.size() != players_) {
        throw MalformedInfoSet("leaf " + n.id + " needs one payoff per player");
      }
    }
    for (std::size_t v = 1; v < nodes_.size(); ++v)
      if (parents[v] != 1) throw MalformedInfoSet("node " + nodes_[v].id + " is not in the tree");
    if (subtree(0).size() != nodes_.size()) throw MalformedInfoSet("the game tree has a cycle");
  }

  static FiniteSet action_set(const ExtensiveNode& n) {
    std::vector<Value> out;
    for (const auto& [a, child] : n.moves) out.push_back(Value::atom(a));
    return FiniteSet::make(std::move(out));
  }

  void build_infosets(const std::vector<std::pair<std::string, std::vector<std::string>>>& given) {
    std::map<std::size_t, std::size_t> assigned;
    for (const auto& [id, members] : given) {
      if (members.empty()) throw MalformedInfoSet("information set " + id + " is empty");
      InfoSet s{id, 0, {}, FiniteSet()};
      for (const auto& m : members) {
        std::size_t v = node_index(m);
        const auto& n = nodes_[v];
        if (!n.player) throw MalformedInfoSet("information set " + id + " contains leaf " + m);
        if (assigned.count(v)) throw MalformedInfoSet("node " + m + " is in two information sets");
        if (s.nodes.empty()) {
          s.player = *n.player;
          s.actions = action_set(n);
        } else {
          if (*n.player != s.player)
            throw MalformedInfoSet("information set " + id + " mixes players");
          if (!(action_set(n) == s.actions))
            throw MalformedInfoSet("information set " + id + " has differing actions");
        }
        s.nodes.push_back(v);
        assigned[v] = infosets_.size();
      }
      infosets_.push_back(std::move(s));
    }
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
      if (!nodes_[v].player || assigned.count(v)) continue;
      assigned[v] = infosets_.size();
      infosets_.push_back({nodes_[v].id, *nodes_[v].player, {v}, action_set(nodes_[v])});
    }
    infoset_of_ = std::move(assigned);
    by_player_.assign(players_, {});
    for (std::size_t s = 0; s < infosets_.size(); ++s) by_player_[infosets_[s].player].push_back(s);
  }

  std::size_t players_;
  std::vector<ExtensiveNode> nodes_;
  std::vector<InfoSet> infosets_;
  std::map<std::size_t, std::size_t> infoset_of_;
  std::vector<std::vector<std::size_t>> by_player_;
};

// Strategic form of the subgame rooted at `root` (the whole game by default).
inline NormalFormGame normalize_extensive(const ExtensiveGame& g, std::size_t root = 0,
                                          const Bounds& bounds = {}) {
  std::vector<FiniteSet> choices;
  for (std::size_t i = 0; i < g.players(); ++i) choices.push_back(g.strategies(i, bounds));
  FiniteSet profiles = tuple_set(choices);
  BoundedCount(bounds, "extensive normalization").times(profiles.size());
  return NormalFormGame(choices, TotalFn::tabulate(profiles, Carrier::payoff(g.players()),
                                                   [&](const Value& p) {
                                                     return Value::vector(g.outcome(p, root));
                                                   }));
}

namespace detail {

// Restricts a full profile to the information sets inside a subtree.
inline Value restrict_profile(const ExtensiveGame& g, const Value& profile,
                              const std::set<std::size_t>& sets) {
  std::vector<Value> parts;
  for (std::size_t i = 0; i < g.players(); ++i) {
    const auto& own = g.player_infosets(i);
    std::vector<Value> images;
    for (std::size_t j = 0; j < own.size(); ++j)
      if (sets.count(own[j])) images.push_back(profile[i][j]);
    parts.push_back(Value::function(std::move(images)));
  }
  return Value::tuple(std::move(parts));
}

inline ExtensiveGame subgame(const ExtensiveGame& g, std::size_t root) {
  auto below = g.subtree(root);
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < below.size(); ++i) renumber[below[i]] = i;
  std::vector<ExtensiveNode> nodes;
  for (auto v : below) {
    ExtensiveNode n = g.nodes()[v];
    for (auto& [a, child] : n.moves) child = renumber.at(child);
    nodes.push_back(std::move(n));
  }
  std::vector<std::pair<std::string, std::vector<std::string>>> sets;
  for (const auto& s : g.infosets()) {
    if (!renumber.count(s.nodes[0])) continue;
    std::vector<std::string> members;
    for (auto v : s.nodes) members.push_back(g.nodes()[v].id);
    sets.emplace_back(s.id, std::move(members));
  }
  return ExtensiveGame(g.players(), std::move(nodes), std::move(sets));
}

}  // namespace detail

// Profiles whose restriction to every subgame is a Nash equilibrium of that
// subgame's strategic form.
inline std::vector<Value> oracle_spe(const ExtensiveGame& g, const Bounds& bounds = {}) {
  auto full = normalize_extensive(g, 0, bounds);
  std::vector<Value> candidates = full.profiles().elements();
  for (auto root : g.subgame_roots()) {
    auto sub = detail::subgame(g, root);
    auto nash = brute_nash(normalize_extensive(sub, 0, bounds), bounds);
    FiniteSet equilibria = FiniteSet::make(nash);
    std::set<std::size_t> inside;
    for (auto v : g.subtree(root))
      if (g.nodes()[v].player) inside.insert(g.infoset_of(v));
    std::vector<Value> kept;
    for (const auto& p : candidates)
      if (equilibria.contains(detail::restrict_profile(g, p, inside))) kept.push_back(p);
    candidates = std::move(kept);
  }
  return candidates;
}

}  // namespace og

#endif  // OPENGAMES_CLASSICAL_EXTENSIVE_HPP_
