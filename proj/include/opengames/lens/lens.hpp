#ifndef OPENGAMES_LENS_LENS_HPP_
#define OPENGAMES_LENS_LENS_HPP_

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "opengames/core/carrier.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/core/value.hpp"
#include "opengames/lens/diset.hpp"

namespace og {

// A lens (X, S) -> (Y, R): a view X -> Y and an update X × R -> S.
//
// The view is tabulated on construction. The update is a function object so
// that it can range over payoff spaces. `probe_sound` records that the update
// was built only from the library's constructors, which makes equality on
// payoff spaces decidable by probing.
class Lens {
 public:
  using Update = std::function<Value(const Value& x, const Value& r)>;

  Lens(Diset dom, Diset cod, TotalFn view, Update update, bool probe_sound = true) {
    if (!(view.domain() == dom.forward) || !view.codomain().is_finite() ||
        !(view.codomain().set() == cod.forward))
      throw TypeMismatch("view table does not match " + dom.to_string() + " -> " +
                         cod.to_string());
    auto impl = std::make_shared<Impl>();
    impl->dom = std::move(dom);
    impl->cod = std::move(cod);
    impl->view = std::move(view);
    impl->update = std::move(update);
    impl->probe_sound = probe_sound;
    impl_ = std::move(impl);
  }

  // Lens from arbitrary functions. Not probe-sound unless stated.
  static Lens from_functions(const Diset& dom, const Diset& cod,
                             const std::function<Value(const Value&)>& view,
                             Update update, bool probe_sound = false) {
    return Lens(dom, cod,
                TotalFn::tabulate(dom.forward, Carrier::finite(cod.forward), view),
                std::move(update), probe_sound || cod.backward.is_finite());
  }

  const Diset& dom() const { return impl_->dom; }
  const Diset& cod() const { return impl_->cod; }
  const TotalFn& view_table() const { return impl_->view; }
  const Value& view(const Value& x) const { return impl_->view(x); }
  Value update(const Value& x, const Value& r) const { return impl_->update(x, r); }
  bool probe_sound() const { return impl_->probe_sound; }

 private:
  struct Impl {
    Diset dom;
    Diset cod;
    TotalFn view;
    Update update;
    bool probe_sound = true;
  };
  std::shared_ptr<const Impl> impl_;
};

inline Lens lens_identity(const Diset& phi) {
  return Lens(phi, phi, TotalFn::identity(phi.forward),
              [](const Value&, const Value& s) { return s; });
}

// μ ∘ λ.
inline Lens lens_compose(const Lens& mu, const Lens& lambda) {
  if (!(lambda.cod() == mu.dom()))
    throw TypeMismatch("cannot compose: " + lambda.cod().to_string() + " vs " +
                       mu.dom().to_string());
  const TotalFn& lv = lambda.view_table();
  std::vector<Value> table;
  table.reserve(lv.table().size());
  for (const auto& y : lv.table()) table.push_back(mu.view(y));
  TotalFn view(lambda.dom().forward, Carrier::finite(mu.cod().forward),
               std::move(table));
  return Lens(lambda.dom(), mu.cod(), std::move(view),
              [mu, lambda](const Value& x, const Value& q) {
                return lambda.update(x, mu.update(lambda.view(x), q));
              },
              mu.probe_sound() && lambda.probe_sound());
}

inline Lens lens_tensor(const Lens& a, const Lens& b) {
  Diset dom = tensor(a.dom(), b.dom());
  Diset cod = tensor(a.cod(), b.cod());
  std::vector<Value> table;
  table.reserve(dom.forward.size());
  for (const auto& x : dom.forward) table.push_back(Value::pair(a.view(x[0]), b.view(x[1])));
  TotalFn view(dom.forward, Carrier::finite(cod.forward), std::move(table));
  return Lens(std::move(dom), std::move(cod), std::move(view),
              [a, b](const Value& x, const Value& r) {
                return Value::pair(a.update(x[0], r[0]), b.update(x[1], r[1]));
              },
              a.probe_sound() && b.probe_sound());
}

// (f, g) with f : X -> Y and g : R -> S; the update ignores x.
inline Lens lens_from_pair(const TotalFn& f, const Carrier& r, const Carrier& s,
                           std::function<Value(const Value&)> g,
                           bool probe_sound = true) {
  Diset dom{f.domain(), s};
  Diset cod{f.codomain().set(), r};
  return Lens(std::move(dom), std::move(cod), f,
              [g = std::move(g)](const Value&, const Value& q) { return g(q); },
              probe_sound);
}

inline Lens lens_from_pair(const TotalFn& f, const TotalFn& g) {
  return lens_from_pair(f, Carrier::finite(g.domain()), g.codomain(),
                        [g](const Value& q) { return g(q); });
}

// ε : (X, S) -> I with update (x, ∗) ↦ x. Requires X ⊆ S.
inline Lens counit_lens(const FiniteSet& x, const Carrier& s) {
  for (const auto& v : x)
    if (!s.contains(v))
      throw TypeMismatch(v.to_string() + " is not in the backward carrier " +
                         s.to_string());
  return Lens(Diset{x, s}, unit_diset(),
              TotalFn::constant(x, Carrier::finite(unit_set()), Value::unit()),
              [](const Value& v, const Value&) { return v; });
}

inline Lens counit_lens(const FiniteSet& x) {
  return counit_lens(x, Carrier::finite(x));
}

// The lift of f : X -> Y to (X, R) -> (Y, R): view f, update right projection.
inline Lens cartesian_lift(const TotalFn& f, const Diset& psi) {
  if (!(f.codomain() == Carrier::finite(psi.forward)))
    throw TypeMismatch("lift target " + psi.to_string() +
                       " does not match the function codomain");
  return Lens(Diset{f.domain(), psi.backward}, psi, f,
              [](const Value&, const Value& r) { return r; });
}

// The point I -> Φ picking x.
inline Lens point_lens(const Diset& phi, const Value& x) {
  if (!phi.forward.contains(x))
    throw TypeMismatch(x.to_string() + " is not in " + phi.forward.to_string());
  return Lens(unit_diset(), phi,
              TotalFn::constant(unit_set(), Carrier::finite(phi.forward), x),
              [](const Value&, const Value&) { return Value::unit(); });
}

// The continuation k : Y -> R as a lens (Y, R) -> I.
inline Lens effect_lens(const TotalFn& k) {
  Diset dom{k.domain(), k.codomain()};
  return Lens(std::move(dom), unit_diset(),
              TotalFn::constant(k.domain(), Carrier::finite(unit_set()), Value::unit()),
              [k](const Value& y, const Value&) { return k(y); });
}

// Inverse of point_lens.
inline Value lens_to_point(const Lens& lambda) {
  if (!(lambda.dom() == unit_diset()))
    throw TypeMismatch("not a lens out of I: " + lambda.dom().to_string());
  return lambda.view(Value::unit());
}

// Inverse of effect_lens.
inline TotalFn lens_to_continuation(const Lens& lambda) {
  if (!(lambda.cod() == unit_diset()))
    throw TypeMismatch("not a lens into I: " + lambda.cod().to_string());
  return TotalFn::tabulate(lambda.dom().forward, lambda.dom().backward,
                           [&](const Value& y) { return lambda.update(y, Value::unit()); });
}

}  // namespace og

#endif  // OPENGAMES_LENS_LENS_HPP_
