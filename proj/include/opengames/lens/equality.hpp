#ifndef OPENGAMES_LENS_EQUALITY_HPP_
#define OPENGAMES_LENS_EQUALITY_HPP_

#include <optional>
#include <string>

#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/lens/lens.hpp"

namespace og {

struct LensDifference {
  std::string reason;
  std::optional<Value> x;
  std::optional<Value> r;
};

// Extensional comparison: views as tables, updates on X × R, where R is
// enumerated when finite and probed otherwise.
inline std::optional<LensDifference> lens_difference(const Lens& a, const Lens& b,
                                                     const Bounds& bounds = {}) {
  if (!(a.dom() == b.dom()))
    return LensDifference{"domains differ: " + a.dom().to_string() + " vs " +
                          b.dom().to_string(), std::nullopt, std::nullopt};
  if (!(a.cod() == b.cod()))
    return LensDifference{"codomains differ: " + a.cod().to_string() + " vs " +
                          b.cod().to_string(), std::nullopt, std::nullopt};
  const Carrier& r = a.cod().backward;
  if (!r.is_finite() && !(a.probe_sound() && b.probe_sound()))
    throw UnsoundProbe("cannot decide equality of updates over " + r.to_string() +
                       " for lenses outside the probe-sound constructors");
  for (const auto& x : a.dom().forward) {
    if (!(a.view(x) == b.view(x)))
      return LensDifference{"views differ", x, std::nullopt};
  }
  const auto samples = r.samples();
  BoundedCount(bounds, "lens comparison").times(a.dom().forward.size()).times(samples.size());
  for (const auto& x : a.dom().forward) {
    for (const auto& q : samples) {
      if (!(a.update(x, q) == b.update(x, q)))
        return LensDifference{"updates differ", x, q};
    }
  }
  return std::nullopt;
}

inline bool lens_equal(const Lens& a, const Lens& b, const Bounds& bounds = {}) {
  return !lens_difference(a, b, bounds).has_value();
}

}  // namespace og

#endif  // OPENGAMES_LENS_EQUALITY_HPP_
