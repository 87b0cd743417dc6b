#ifndef OPENGAMES_TESTS_SUPPORT_ORACLES_HPP_
#define OPENGAMES_TESTS_SUPPORT_ORACLES_HPP_

// Brute-force reference computations used to check the library. They only
// rely on the library for carrier sets and payoff tables.

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "opengames/classical/normal_form.hpp"
#include "opengames/classical/sequential.hpp"
#include "opengames/core/rational.hpp"
#include "opengames/core/value.hpp"
#include "opengames/game/open_game.hpp"

namespace oracle {

using og::FiniteSet;
using og::Rational;
using og::Value;

inline std::set<std::string> keys(const std::vector<Value>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs) out.insert(v.to_string());
  return out;
}

// Odometer over index vectors with the given radices, last digit fastest.
inline void for_each_index(const std::vector<std::size_t>& radix,
                           const std::function<void(const std::vector<std::size_t>&)>& f) {
  for (auto r : radix)
    if (r == 0) return;
  std::vector<std::size_t> d(radix.size(), 0);
  while (true) {
    f(d);
    std::size_t i = d.size();
    while (i > 0) {
      --i;
      if (++d[i] < radix[i]) break;
      d[i] = 0;
      if (i == 0) return;
    }
    if (d.empty()) return;
  }
}

// Pure Nash equilibria of a table game: no player gains by a unilateral change.
inline std::vector<Value> nash(const std::vector<FiniteSet>& choices,
                               const std::function<Rational(const std::vector<Value>&, std::size_t)>& u) {
  std::vector<std::size_t> radix;
  for (const auto& c : choices) radix.push_back(c.size());
  std::vector<Value> out;
  for_each_index(radix, [&](const std::vector<std::size_t>& idx) {
    std::vector<Value> p;
    for (std::size_t i = 0; i < idx.size(); ++i) p.push_back(choices[i][idx[i]]);
    for (std::size_t i = 0; i < p.size(); ++i) {
      Rational here = u(p, i);
      for (const auto& alt : choices[i]) {
        auto q = p;
        q[i] = alt;
        if (u(q, i) > here) return;
      }
    }
    out.push_back(Value::tuple(p));
  });
  return out;
}

inline std::vector<Value> nash(const og::NormalFormGame& g) {
  return nash(g.choices(), [&](const std::vector<Value>& p, std::size_t i) {
    return g.payoff()(Value::tuple(p)).coords()[i];
  });
}

// A sequential game profile as one table per player over that player's
// histories, each history a vector of earlier moves.
struct SeqProfile {
  std::vector<std::vector<Value>> table;  // table[i][history index]
};

class Sequential {
 public:
  explicit Sequential(const og::SequentialGame& g) : g_(g) {
    for (std::size_t i = 0; i < g.players(); ++i) {
      std::vector<std::vector<Value>> hs{{}};
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<std::vector<Value>> next;
        for (const auto& h : hs)
          for (const auto& x : g.choices()[j]) {
            auto e = h;
            e.push_back(x);
            next.push_back(e);
          }
        hs = next;
      }
      histories_.push_back(hs);
    }
  }

  std::size_t history_index(std::size_t i, const std::vector<Value>& h) const {
    const auto& hs = histories_[i];
    return static_cast<std::size_t>(std::find(hs.begin(), hs.end(), h) - hs.begin());
  }

  // Play from `prefix` onwards.
  std::vector<Value> play(const SeqProfile& p, std::vector<Value> prefix) const {
    for (std::size_t i = prefix.size(); i < g_.players(); ++i)
      prefix.push_back(p.table[i][history_index(i, prefix)]);
    return prefix;
  }

  Rational utility(const std::vector<Value>& play, std::size_t i) const {
    return g_.payoff()(Value::tuple(play)).coords()[i];
  }

  void for_each_profile(const std::function<void(const SeqProfile&)>& f) const {
    std::vector<std::size_t> radix;
    for (std::size_t i = 0; i < g_.players(); ++i)
      for (std::size_t h = 0; h < histories_[i].size(); ++h) radix.push_back(g_.choices()[i].size());
    for_each_index(radix, [&](const std::vector<std::size_t>& d) {
      SeqProfile p;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < g_.players(); ++i) {
        p.table.emplace_back();
        for (std::size_t h = 0; h < histories_[i].size(); ++h)
          p.table[i].push_back(g_.choices()[i][d[pos++]]);
      }
      f(p);
    });
  }

  // One-shot deviation: at every history the mover cannot gain by changing
  // only the move made there.
  bool subgame_perfect(const SeqProfile& p) const {
    for (std::size_t i = 0; i < g_.players(); ++i) {
      for (const auto& h : histories_[i]) {
        Rational here = utility(play(p, h), i);
        for (const auto& x : g_.choices()[i]) {
          auto prefix = h;
          prefix.push_back(x);
          if (utility(play(p, prefix), i) > here) return false;
        }
      }
    }
    return true;
  }

  // Whole-strategy deviations from the root.
  bool nash(const SeqProfile& p) const {
    auto base = play(p, {});
    bool ok = true;
    for (std::size_t i = 0; i < g_.players() && ok; ++i) {
      Rational here = utility(base, i);
      std::vector<std::size_t> radix(histories_[i].size(), g_.choices()[i].size());
      for_each_index(radix, [&](const std::vector<std::size_t>& d) {
        if (!ok) return;
        SeqProfile q = p;
        for (std::size_t h = 0; h < d.size(); ++h) q.table[i][h] = g_.choices()[i][d[h]];
        if (utility(play(q, {}), i) > here) ok = false;
      });
    }
    return ok;
  }

  // The library's representation: a tuple of functions over history_set(i).
  Value to_value(const SeqProfile& p) const {
    std::vector<Value> parts;
    for (std::size_t i = 0; i < g_.players(); ++i) {
      FiniteSet hs = g_.history_set(i);
      std::vector<Value> images(hs.size());
      for (std::size_t h = 0; h < histories_[i].size(); ++h)
        images[hs.index_of(og::SequentialGame::history_value(histories_[i][h]))] = p.table[i][h];
      parts.push_back(Value::function(std::move(images)));
    }
    return Value::tuple(std::move(parts));
  }

  std::vector<Value> spe() const {
    std::vector<Value> out;
    for_each_profile([&](const SeqProfile& p) {
      if (subgame_perfect(p)) out.push_back(to_value(p));
    });
    return out;
  }

  std::vector<Value> nash() const {
    std::vector<Value> out;
    for_each_profile([&](const SeqProfile& p) {
      if (nash(p)) out.push_back(to_value(p));
    });
    return out;
  }

 private:
  const og::SequentialGame& g_;
  std::vector<std::vector<std::vector<Value>>> histories_;
};

// σ is a state over k when it best-responds to itself at every history.
inline std::vector<Value> states(const og::OpenGame& g, const og::TotalFn& k) {
  std::vector<Value> out;
  for (const auto& s : g.strategies()) {
    bool ok = true;
    for (const auto& h : g.src().forward)
      if (!g.best({h, k}, s, s)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(s);
  }
  return out;
}

}  // namespace oracle

#endif  // OPENGAMES_TESTS_SUPPORT_ORACLES_HPP_
