#ifndef OPENGAMES_LENS_STRUCTURE_HPP_
#define OPENGAMES_LENS_STRUCTURE_HPP_

#include "opengames/core/carrier.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/core/value.hpp"
#include "opengames/lens/diset.hpp"
#include "opengames/lens/lens.hpp"

// Associators, unitors and symmetries of Lens, each the pair (forward map,
// inverse backward map).

namespace og {

namespace detail {

inline Value reassoc_right(const Value& v) {
  return Value::pair(v[0][0], Value::pair(v[0][1], v[1]));
}
inline Value reassoc_left(const Value& v) {
  return Value::pair(Value::pair(v[0], v[1][0]), v[1][1]);
}
inline Value swap_pair(const Value& v) { return Value::pair(v[1], v[0]); }

inline TotalFn set_map(const FiniteSet& from, const FiniteSet& to,
                       Value (*f)(const Value&)) {
  return TotalFn::tabulate(from, Carrier::finite(to), f);
}

}  // namespace detail

// (Φ ⊗ Ψ) ⊗ Θ -> Φ ⊗ (Ψ ⊗ Θ).
inline Lens assoc_lens(const Diset& a, const Diset& b, const Diset& c) {
  Diset dom = tensor(tensor(a, b), c);
  Diset cod = tensor(a, tensor(b, c));
  return lens_from_pair(detail::set_map(dom.forward, cod.forward, detail::reassoc_right),
                        cod.backward, dom.backward, detail::reassoc_left);
}

inline Lens assoc_inv_lens(const Diset& a, const Diset& b, const Diset& c) {
  Diset dom = tensor(a, tensor(b, c));
  Diset cod = tensor(tensor(a, b), c);
  return lens_from_pair(detail::set_map(dom.forward, cod.forward, detail::reassoc_left),
                        cod.backward, dom.backward, detail::reassoc_right);
}

// I ⊗ Φ -> Φ.
inline Lens lunit_lens(const Diset& phi) {
  Diset dom = tensor(unit_diset(), phi);
  return lens_from_pair(
      detail::set_map(dom.forward, phi.forward, [](const Value& v) { return v[1]; }),
      phi.backward, dom.backward,
      [](const Value& s) { return Value::pair(Value::unit(), s); });
}

inline Lens lunit_inv_lens(const Diset& phi) {
  Diset cod = tensor(unit_diset(), phi);
  return lens_from_pair(
      detail::set_map(phi.forward, cod.forward,
                      [](const Value& v) { return Value::pair(Value::unit(), v); }),
      cod.backward, phi.backward, [](const Value& s) { return s[1]; });
}

// Φ ⊗ I -> Φ.
inline Lens runit_lens(const Diset& phi) {
  Diset dom = tensor(phi, unit_diset());
  return lens_from_pair(
      detail::set_map(dom.forward, phi.forward, [](const Value& v) { return v[0]; }),
      phi.backward, dom.backward,
      [](const Value& s) { return Value::pair(s, Value::unit()); });
}

inline Lens runit_inv_lens(const Diset& phi) {
  Diset cod = tensor(phi, unit_diset());
  return lens_from_pair(
      detail::set_map(phi.forward, cod.forward,
                      [](const Value& v) { return Value::pair(v, Value::unit()); }),
      cod.backward, phi.backward, [](const Value& s) { return s[0]; });
}

// Φ ⊗ Ψ -> Ψ ⊗ Φ.
inline Lens swap_lens(const Diset& a, const Diset& b) {
  Diset dom = tensor(a, b);
  Diset cod = tensor(b, a);
  return lens_from_pair(detail::set_map(dom.forward, cod.forward, detail::swap_pair),
                        cod.backward, dom.backward, detail::swap_pair);
}

}  // namespace og

#endif  // OPENGAMES_LENS_STRUCTURE_HPP_
