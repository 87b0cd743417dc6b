#ifndef OPENGAMES_GAME_RANDOM_HPP_
#define OPENGAMES_GAME_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/core/carrier.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/rational.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/game/open_game.hpp"
#include "opengames/lens/diset.hpp"
#include "opengames/lens/lens.hpp"

namespace og {

// Seeded source of randomness. Draws use the raw engine output so that
// sequences are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() & 1) != 0; }

  // Uniform numerator over [lo·d, hi·d] for a uniform denominator d.
  Rational rational(long long lo, long long hi, long long max_den) {
    long long d = 1 + static_cast<long long>(below(static_cast<std::size_t>(max_den)));
    long long span = (hi - lo) * d + 1;
    long long n = lo * d + static_cast<long long>(below(static_cast<std::size_t>(span)));
    return Rational(n, d);
  }

  std::vector<Rational> rationals(std::size_t count, long long lo = -5, long long hi = 5,
                                  long long max_den = 4) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(rational(lo, hi, max_den));
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

inline FiniteSet named_set(const std::string& prefix, std::size_t n) {
  std::vector<Value> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Value::atom(prefix + std::to_string(i)));
  return FiniteSet::make(std::move(out));
}

inline FiniteSet random_set(Rng& rng, std::size_t lo, std::size_t hi, const std::string& prefix) {
  return named_set(prefix, rng.between(lo, hi));
}

// A diset with nonempty components of size ≤ max; backward carrier is a
// payoff space of dimension `payoff_dim` when that is nonzero.
inline Diset random_diset(Rng& rng, std::size_t max, std::size_t payoff_dim = 0) {
  FiniteSet x = random_set(rng, 1, max, "x");
  if (payoff_dim > 0) return payoff_diset(x, payoff_dim);
  return {x, Carrier::finite(random_set(rng, 1, max, "r"))};
}

namespace detail {

inline Value random_payoff(Rng& rng, std::size_t d) { return Value::vector(rng.rationals(d)); }

// A table-driven update over a finite R.
inline Lens::Update table_update(const FiniteSet& x, const FiniteSet& r, std::vector<Value> table) {
  return [x, r, table = std::move(table)](const Value& v, const Value& q) {
    return table[x.index_of(v) * r.size() + r.index_of(q)];
  };
}

}  // namespace detail

// A random lens Φ -> Ψ. Updates out of a payoff space are constant per x or,
// between payoff spaces, coordinate selections; both stay probe-sound.
inline Lens random_lens(Rng& rng, const Diset& dom, const Diset& cod) {
  std::vector<Value> view;
  for (std::size_t i = 0; i < dom.forward.size(); ++i)
    view.push_back(cod.forward[rng.below(cod.forward.size())]);
  TotalFn v(dom.forward, Carrier::finite(cod.forward), std::move(view));
  const Carrier& s = dom.backward;
  const Carrier& r = cod.backward;
  auto draw_s = [&]() {
    if (s.is_finite()) return s.set()[rng.below(s.set().size())];
    return detail::random_payoff(rng, s.dimension());
  };
  if (r.is_finite()) {
    std::vector<Value> table;
    for (std::size_t i = 0; i < dom.forward.size() * r.set().size(); ++i) table.push_back(draw_s());
    return Lens(dom, cod, std::move(v), detail::table_update(dom.forward, r.set(), std::move(table)));
  }
  struct Rule {
    bool select = false;
    Value constant;
    std::vector<std::size_t> coords;
  };
  std::vector<Rule> rules;
  for (std::size_t i = 0; i < dom.forward.size(); ++i) {
    Rule rule;
    if (!s.is_finite() && rng.coin()) {
      rule.select = true;
      for (std::size_t j = 0; j < s.dimension(); ++j) rule.coords.push_back(rng.below(r.dimension()));
    } else {
      rule.constant = draw_s();
    }
    rules.push_back(std::move(rule));
  }
  FiniteSet xs = dom.forward;
  return Lens(dom, cod, std::move(v), [xs, rules](const Value& x, const Value& q) {
    const Rule& rule = rules[xs.index_of(x)];
    if (!rule.select) return rule.constant;
    std::vector<Rational> out;
    for (auto j : rule.coords) out.push_back(q.coords()[j]);
    return Value::vector(std::move(out));
  });
}

// Every lens between two disets with finite components.
inline std::vector<Lens> enumerate_lenses(const Diset& dom, const Diset& cod,
                                          const Bounds& bounds = {}) {
  if (!dom.backward.is_finite() || !cod.backward.is_finite())
    throw EnumerationBound("lenses over payoff spaces cannot be enumerated");
  const FiniteSet& r = cod.backward.set();
  const FiniteSet pairs = product_set(dom.forward, r);
  auto views = enumerate_functions(dom.forward, cod.forward, bounds);
  auto updates = enumerate_functions(pairs, dom.backward.set(), bounds);
  BoundedCount(bounds, "lens enumeration").times(views.size()).times(updates.size());
  std::vector<Lens> out;
  for (const auto& v : views)
    for (const auto& u : updates)
      out.emplace_back(dom, cod, v, detail::table_update(dom.forward, r, u.table()));
  return out;
}

namespace detail {

inline std::uint64_t mix64(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

}  // namespace detail

// A game Φ ⇸ Ψ with one or two strategies, random play lenses and a best
// response relation drawn from a hash of (seed, h, k, σ, σ′).
inline OpenGame random_game(Rng& rng, const Diset& src, const Diset& dst,
                            const std::string& label = "G", std::size_t max_strategies = 2) {
  FiniteSet sigma = named_set(label + ".s", rng.between(1, max_strategies));
  std::vector<Lens> plays;
  for (std::size_t i = 0; i < sigma.size(); ++i) plays.push_back(random_lens(rng, src, dst));
  std::uint64_t seed = rng.next();
  auto rel = [seed, sigma](const Context& c, const Value& s, const Value& s2) {
    std::uint64_t h = detail::mix64(seed, c.history.hash());
    h = detail::mix64(h, c.continuation.hash());
    h = detail::mix64(h, sigma.index_of(s));
    h = detail::mix64(h, sigma.index_of(s2));
    return (h & 1) != 0;
  };
  return OpenGame(
      src, dst, sigma, [plays, sigma](const Value& s) { return plays[sigma.index_of(s)]; }, rel,
      nullptr, label);
}

}  // namespace og

#endif  // OPENGAMES_GAME_RANDOM_HPP_
