#ifndef OPENGAMES_GAME_PAYOFF_SHAPE_HPP_
#define OPENGAMES_GAME_PAYOFF_SHAPE_HPP_

#include <cstddef>
#include <vector>

#include "opengames/core/carrier.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/rational.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/core/value.hpp"
#include "opengames/lens/diset.hpp"

namespace og {

// ℚ^d, with ℚ^0 read as the singleton.
inline Carrier payoff_carrier(std::size_t d) {
  return d == 0 ? Carrier::finite(unit_set()) : Carrier::payoff(d);
}

// ((ℚ × ℚ) × ℚ) …, the backward carrier of a left-nested tensor of decisions.
inline Carrier nested_payoff_carrier(std::size_t d) {
  if (d == 0) return Carrier::finite(unit_set());
  Carrier out = Carrier::payoff(1);
  for (std::size_t i = 1; i < d; ++i) out = Carrier::product(out, Carrier::payoff(1));
  return out;
}

// Number of rational coordinates carried by a backward carrier.
inline std::size_t payoff_width(const Carrier& c) {
  switch (c.kind()) {
    case Carrier::Kind::kPayoff:
      return c.dimension();
    case Carrier::Kind::kProduct:
      return payoff_width(c.parts()[0]) + payoff_width(c.parts()[1]);
    case Carrier::Kind::kFinite:
      if (c.set().size() == 1) return 0;
      [[fallthrough]];
    default:
      throw TypeMismatch("carrier " + c.to_string() + " does not hold payoffs");
  }
}

namespace detail {

inline Value shape_from(const std::vector<Rational>& coords, std::size_t& pos,
                        const Carrier& c) {
  switch (c.kind()) {
    case Carrier::Kind::kPayoff: {
      std::vector<Rational> part(coords.begin() + pos, coords.begin() + pos + c.dimension());
      pos += c.dimension();
      return Value::vector(std::move(part));
    }
    case Carrier::Kind::kProduct: {
      Value a = shape_from(coords, pos, c.parts()[0]);
      Value b = shape_from(coords, pos, c.parts()[1]);
      return Value::pair(std::move(a), std::move(b));
    }
    default:
      if (c.is_finite() && c.set().size() == 1) return c.set()[0];
      throw TypeMismatch("carrier " + c.to_string() + " does not hold payoffs");
  }
}

}  // namespace detail

// Splits a flat payoff vector into the structure of `shape`.
inline Value shape_payoff(const std::vector<Rational>& coords, const Carrier& shape) {
  if (coords.size() != payoff_width(shape))
    throw TypeMismatch(std::to_string(coords.size()) + " payoffs do not fit " +
                       shape.to_string());
  std::size_t pos = 0;
  return detail::shape_from(coords, pos, shape);
}

inline void flatten_payoff(const Value& v, const Carrier& shape, std::vector<Rational>& out) {
  switch (shape.kind()) {
    case Carrier::Kind::kPayoff:
      out.insert(out.end(), v.coords().begin(), v.coords().end());
      return;
    case Carrier::Kind::kProduct:
      flatten_payoff(v[0], shape.parts()[0], out);
      flatten_payoff(v[1], shape.parts()[1], out);
      return;
    default:
      payoff_width(shape);
  }
}

inline std::vector<Rational> flatten_payoff(const Value& v, const Carrier& shape) {
  std::vector<Rational> out;
  flatten_payoff(v, shape, out);
  return out;
}

// X₁ × … × X_m nested to the left; 1 when m = 0.
inline FiniteSet nested_product(const std::vector<FiniteSet>& sets) {
  if (sets.empty()) return unit_set();
  FiniteSet out = sets[0];
  for (std::size_t i = 1; i < sets.size(); ++i) out = product_set(out, sets[i]);
  return out;
}

inline Value nest_tuple(const std::vector<Value>& flat) {
  if (flat.empty()) return Value::unit();
  Value out = flat[0];
  for (std::size_t i = 1; i < flat.size(); ++i) out = Value::pair(out, flat[i]);
  return out;
}

// Inverse of nest_tuple for m components.
inline std::vector<Value> unnest_tuple(Value v, std::size_t m) {
  std::vector<Value> out(m);
  for (std::size_t i = m; i > 1; --i) {
    out[i - 1] = v[1];
    v = v[0];
  }
  if (m >= 1) out[0] = v;
  return out;
}

// Leaves of nested tuples, left to right.
inline void tuple_leaves(const Value& v, std::vector<Value>& out) {
  if (v.is_tuple()) {
    for (const auto& e : v.elements()) tuple_leaves(e, out);
  } else {
    out.push_back(v);
  }
}

// Reads a payoff table on flat tuples as a continuation into `target`:
// each y is flattened to its tuple leaves and the payoff vector is split
// into the backward structure of the target.
inline TotalFn continuation_from_payoff(const TotalFn& payoff, const Diset& target) {
  return TotalFn::tabulate(target.forward, target.backward, [&](const Value& y) {
    std::vector<Value> leaves;
    tuple_leaves(y, leaves);
    Value key = Value::tuple(std::move(leaves));
    if (!payoff.domain().contains(key) && key.size() == 1 && payoff.domain().contains(key[0]))
      key = key[0];
    return shape_payoff(payoff(key).coords(), target.backward);
  });
}

}  // namespace og

#endif  // OPENGAMES_GAME_PAYOFF_SHAPE_HPP_
