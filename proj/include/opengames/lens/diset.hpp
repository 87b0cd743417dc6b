#ifndef OPENGAMES_LENS_DISET_HPP_
#define OPENGAMES_LENS_DISET_HPP_

#include <string>

#include "opengames/core/carrier.hpp"
#include "opengames/core/finite_set.hpp"

namespace og {

// A pair (X, S) of a forward set and a backward carrier.
struct Diset {
  FiniteSet forward;
  Carrier backward;

  friend bool operator==(const Diset& a, const Diset& b) {
    return a.forward == b.forward && a.backward == b.backward;
  }

  std::string to_string() const {
    return "(" + forward.to_string() + ", " + backward.to_string() + ")";
  }
};

// I = (1, 1).
inline const Diset& unit_diset() {
  static const Diset i{unit_set(), Carrier::finite(unit_set())};
  return i;
}

inline Diset tensor(const Diset& a, const Diset& b) {
  return {product_set(a.forward, b.forward),
          Carrier::product(a.backward, b.backward)};
}

// (X, ℚ^d).
inline Diset payoff_diset(const FiniteSet& x, std::size_t d) {
  return {x, Carrier::payoff(d)};
}

}  // namespace og

#endif  // OPENGAMES_LENS_DISET_HPP_
