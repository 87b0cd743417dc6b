#ifndef OPENGAMES_GAME_DECISION_HPP_
#define OPENGAMES_GAME_DECISION_HPP_

#include <string>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/game/open_game.hpp"
#include "opengames/game/operators.hpp"
#include "opengames/game/payoff_shape.hpp"
#include "opengames/lens/structure.hpp"

namespace og {

namespace detail {

// Indices of Y maximizing coordinate `coord` of k.
inline std::vector<bool> argmax_mask(const FiniteSet& ys, const std::vector<Rational>& values) {
  std::vector<bool> mask(ys.size(), false);
  if (values.empty()) return mask;
  Rational best = values[0];
  for (const auto& v : values)
    if (v > best) best = v;
  for (std::size_t i = 0; i < values.size(); ++i) mask[i] = values[i] == best;
  return mask;
}

}  // namespace detail

// D_{X,Y} : (X, 1) ⇸ (Y, ℚ). Strategies are functions X -> Y.
inline OpenGame decision(const FiniteSet& x, const FiniteSet& y, const Bounds& bounds = {}) {
  if (y.empty()) throw EmptyChoiceSet("decision over an empty choice set");
  Diset src{x, Carrier::finite(unit_set())};
  Diset dst = payoff_diset(y, 1);
  FiniteSet sigma = function_set(x, y, bounds);
  auto utilities = [](const TotalFn& k) {
    std::vector<Rational> out;
    for (const auto& v : k.table()) out.push_back(v.coords()[0]);
    return out;
  };
  return OpenGame(
      src, dst, sigma,
      [src, dst, x](const Value& s) {
        return Lens(src, dst, TotalFn::from_value(x, Carrier::finite(dst.forward), s),
                    [](const Value&, const Value&) { return Value::unit(); });
      },
      [x, y](const Context& c, const Value&, const Value& s2) {
        const auto& k = c.continuation;
        const Rational& chosen = k(s2[x.index_of(c.history)]).coords()[0];
        for (const auto& v : k.table())
          if (v.coords()[0] > chosen) return false;
        return true;
      },
      [x, y, sigma, utilities](const Context& c, const Value&) {
        auto mask = detail::argmax_mask(y, utilities(c.continuation));
        std::size_t i = x.index_of(c.history);
        StrategySubset out(sigma.size(), false);
        for (std::size_t j = 0; j < sigma.size(); ++j)
          out[j] = mask[y.index_of(sigma[j][i])];
        return out;
      },
      "D");
}

// ∏_{i<n} X_i as flat tuples, or 1 when n = 1.
inline FiniteSet copy_decision_history(const std::vector<FiniteSet>& xs) {
  if (xs.size() <= 1) return unit_set();
  return tuple_set(std::span<const FiniteSet>(xs.data(), xs.size() - 1));
}

// Appends a move to a history (the unit history is the empty play).
inline Value extend_play(const Value& history, const Value& move) {
  std::vector<Value> parts;
  if (!history.is_unit()) parts = history.elements();
  parts.push_back(move);
  return Value::tuple(std::move(parts));
}

// D^Δ_{X₁..X_n} : (∏_{i<n}X_i, ℚ^{n−1}) ⇸ (∏X_i, ℚ^n).
inline OpenGame copy_decision(const std::vector<FiniteSet>& xs, const Bounds& bounds = {}) {
  if (xs.empty()) throw TypeMismatch("copy-decision needs at least one choice set");
  const std::size_t n = xs.size();
  const FiniteSet& last = xs.back();
  if (last.empty()) throw EmptyChoiceSet("copy-decision over an empty choice set");
  FiniteSet hist = copy_decision_history(xs);
  Diset src{hist, payoff_carrier(n - 1)};
  Diset dst = payoff_diset(tuple_set(xs), n);
  FiniteSet sigma = function_set(hist, last, bounds);
  return OpenGame(
      src, dst, sigma,
      [src, dst, hist, n](const Value& s) {
        auto view = TotalFn::tabulate(hist, Carrier::finite(dst.forward), [&](const Value& h) {
          return extend_play(h, s[hist.index_of(h)]);
        });
        return Lens(src, dst, view, [n](const Value&, const Value& r) {
          if (n == 1) return Value::unit();
          std::vector<Rational> head(r.coords().begin(), r.coords().end() - 1);
          return Value::vector(std::move(head));
        });
      },
      [hist, last, n](const Context& c, const Value&, const Value& s2) {
        const auto& k = c.continuation;
        const Value& h = c.history;
        Rational chosen = k(extend_play(h, s2[hist.index_of(h)])).coords()[n - 1];
        for (const auto& x : last)
          if (k(extend_play(h, x)).coords()[n - 1] > chosen) return false;
        return true;
      },
      [hist, last, sigma, n](const Context& c, const Value&) {
        const auto& k = c.continuation;
        const Value& h = c.history;
        std::vector<Rational> values;
        for (const auto& x : last) values.push_back(k(extend_play(h, x)).coords()[n - 1]);
        auto mask = detail::argmax_mask(last, values);
        std::size_t i = hist.index_of(h);
        StrategySubset out(sigma.size(), false);
        for (std::size_t j = 0; j < sigma.size(); ++j) out[j] = mask[last.index_of(sigma[j][i])];
        return out;
      },
      "DD");
}

// D^Δ assembled from the copy lens, u(P, ℚ^{n−1}) ⊗ D_{P,X_n} and the
// reshaping lens onto flat plays. Profiles have the form ((∗, (∗, σ)), ∗).
inline OpenGame copy_decision_composite(const std::vector<FiniteSet>& xs,
                                        const Bounds& bounds = {}) {
  if (xs.empty()) throw TypeMismatch("copy-decision needs at least one choice set");
  const std::size_t n = xs.size();
  FiniteSet hist = copy_decision_history(xs);
  Carrier r_prev = payoff_carrier(n - 1);
  Diset wire{hist, r_prev};
  OpenGame choose = decision(hist, xs.back(), bounds);
  OpenGame middle = tensor_games(unit_game(wire), choose);

  auto diag = TotalFn::tabulate(hist, Carrier::finite(middle.src().forward),
                                [](const Value& h) { return Value::pair(h, h); });
  Lens copy = lens_from_pair(diag, middle.src().backward, r_prev,
                             [](const Value& r) { return r[0]; });

  Diset flat = payoff_diset(tuple_set(xs), n);
  auto join = TotalFn::tabulate(middle.dst().forward, Carrier::finite(flat.forward),
                                [](const Value& p) { return extend_play(p[0], p[1]); });
  const Carrier middle_back = middle.dst().backward;
  Lens reshape = lens_from_pair(join, flat.backward, middle_back, [n](const Value& r) {
    const auto& c = r.coords();
    Value head = n == 1 ? Value::unit()
                        : Value::vector(std::vector<Rational>(c.begin(), c.end() - 1));
    return Value::pair(head, Value::vector({c.back()}));
  });

  return seq_compose(seq_compose(trivial_game(copy, "copy"), middle),
                     trivial_game(reshape, "reshape"));
}

// The strategically trivial effect of a payoff table, closed by the counit.
// `payoff` maps flat tuples over `sets` to ℚ^d. The source forward set is the
// left-nested product of `sets`, and the backward carrier is the left-nested
// product of d copies of ℚ. When `exports` (0-based coordinates) is nonempty,
// the source gains a factor (1, E) through which those coordinates are also
// returned.
inline OpenGame utility_game(const TotalFn& payoff, const std::vector<FiniteSet>& sets,
                             const std::vector<std::size_t>& exports = {},
                             std::string label = "utility") {
  if (payoff.codomain().kind() != Carrier::Kind::kPayoff)
    throw TypeMismatch("utility needs a payoff table");
  const std::size_t d = payoff.codomain().dimension();
  for (auto e : exports)
    if (e >= d) throw TypeMismatch("exported coordinate out of range");
  FiniteSet s = nested_product(sets);
  Carrier b = nested_payoff_carrier(d);

  auto flat_key = [&](const Value& v) { return Value::tuple(unnest_tuple(v, sets.size())); };
  std::vector<Value> images;
  std::vector<Value> shaped_of_s;
  for (const auto& v : s) {
    Value shaped = shape_payoff(payoff(flat_key(v)).coords(), b);
    shaped_of_s.push_back(shaped);
    bool seen = false;
    for (const auto& w : images) seen = seen || w == shaped;
    if (!seen) images.push_back(shaped);
  }
  FiniteSet img = FiniteSet::make(images);
  Lens close = counit_lens(img, b);

  if (exports.empty()) {
    Lens lift = cartesian_lift(TotalFn(s, Carrier::finite(img), shaped_of_s), Diset{img, b});
    return trivial_game(lens_compose(close, lift), std::move(label));
  }

  Carrier e = nested_payoff_carrier(exports.size());
  FiniteSet s1 = product_set(s, unit_set());
  FiniteSet img1 = product_set(img, unit_set());
  auto f = TotalFn::tabulate(s1, Carrier::finite(img1), [&](const Value& p) {
    return Value::pair(shaped_of_s[s.index_of(p[0])], Value::unit());
  });
  Diset both{img1, Carrier::product(b, e)};
  Lens lift = cartesian_lift(f, both);
  auto drop = TotalFn::tabulate(img1, Carrier::finite(img),
                                [](const Value& p) { return p[0]; });
  Lens copy = lens_from_pair(drop, b, both.backward, [b, e, exports](const Value& r) {
    auto coords = flatten_payoff(r, b);
    std::vector<Rational> picked;
    for (auto i : exports) picked.push_back(coords[i]);
    return Value::pair(r, shape_payoff(picked, e));
  });
  return trivial_game(lens_compose(close, lens_compose(copy, lift)), std::move(label));
}

}  // namespace og

#endif  // OPENGAMES_GAME_DECISION_HPP_
