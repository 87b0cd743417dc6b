#ifndef OPENGAMES_LENS_LIMITS_HPP_
#define OPENGAMES_LENS_LIMITS_HPP_

#include <span>
#include <vector>

#include "opengames/core/carrier.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/lens/diset.hpp"
#include "opengames/lens/lens.hpp"

namespace og {

struct ProductDiset {
  Diset diset;
  std::vector<Lens> projections;
};

struct CoproductDiset {
  Diset diset;
  std::vector<Lens> injections;
};

// ∏(X_i, S_i) = (∏X_i, ∐S_i). Forward elements are flat tuples.
inline ProductDiset product_diset(const std::vector<Diset>& family) {
  std::vector<FiniteSet> forwards;
  std::vector<Carrier> backwards;
  for (const auto& d : family) {
    forwards.push_back(d.forward);
    backwards.push_back(d.backward);
  }
  Diset prod{tuple_set(forwards), Carrier::sum(backwards)};
  ProductDiset out{prod, {}};
  for (std::size_t j = 0; j < family.size(); ++j) {
    auto pi = TotalFn::tabulate(prod.forward, Carrier::finite(family[j].forward),
                                [j](const Value& x) { return x[j]; });
    out.projections.push_back(lens_from_pair(
        pi, family[j].backward, prod.backward,
        [j](const Value& s) { return Value::tagged(j, s); }));
  }
  return out;
}

// ∐(X_i, S) = (∐X_i, S). All backward carriers must agree.
inline CoproductDiset coproduct_diset(const std::vector<Diset>& family) {
  std::vector<FiniteSet> forwards;
  for (const auto& d : family) {
    if (!(d.backward == family.front().backward))
      throw BackwardMismatch("coproduct needs equal backward carriers: " +
                             family.front().backward.to_string() + " vs " +
                             d.backward.to_string());
    forwards.push_back(d.forward);
  }
  Carrier s = family.empty() ? Carrier::finite(unit_set()) : family.front().backward;
  Diset co{coproduct_set(forwards), s};
  CoproductDiset out{co, {}};
  for (std::size_t j = 0; j < family.size(); ++j) {
    auto iota = TotalFn::tabulate(family[j].forward, Carrier::finite(co.forward),
                                  [j](const Value& x) { return Value::tagged(j, x); });
    out.injections.push_back(
        lens_from_pair(iota, s, s, [](const Value& q) { return q; }));
  }
  return out;
}

// [λ_i] : (∐X_i, S) -> Ψ for λ_i : (X_i, S) -> Ψ.
inline Lens copair_lenses(const std::vector<Lens>& family) {
  if (family.empty()) throw TypeMismatch("copairing needs at least one lens");
  std::vector<Diset> doms;
  for (const auto& l : family) {
    if (!(l.cod() == family.front().cod()))
      throw TypeMismatch("copairing needs a common codomain");
    doms.push_back(l.dom());
  }
  Diset dom = coproduct_diset(doms).diset;
  const Diset& cod = family.front().cod();
  bool sound = true;
  for (const auto& l : family) sound = sound && l.probe_sound();
  return Lens(dom, cod,
              TotalFn::tabulate(dom.forward, Carrier::finite(cod.forward),
                                [&](const Value& x) { return family[x.tag()].view(x.inner()); }),
              [family](const Value& x, const Value& r) {
                return family[x.tag()].update(x.inner(), r);
              },
              sound);
}

// ∐λ_i : (∐X_i, S) -> (∐Y_i, R) for λ_i : (X_i, S) -> (Y_i, R).
inline Lens coproduct_lenses(const std::vector<Lens>& family) {
  if (family.empty()) throw TypeMismatch("coproduct needs at least one lens");
  std::vector<Diset> doms, cods;
  bool sound = true;
  for (const auto& l : family) {
    doms.push_back(l.dom());
    cods.push_back(l.cod());
    sound = sound && l.probe_sound();
  }
  Diset dom = coproduct_diset(doms).diset;
  Diset cod = coproduct_diset(cods).diset;
  return Lens(dom, cod,
              TotalFn::tabulate(dom.forward, Carrier::finite(cod.forward),
                                [&](const Value& x) {
                                  return Value::tagged(x.tag(), family[x.tag()].view(x.inner()));
                                }),
              [family](const Value& x, const Value& r) {
                return family[x.tag()].update(x.inner(), r);
              },
              sound);
}

// ⟨λ_i⟩ : Φ -> ∏Ψ_i for λ_i : Φ -> Ψ_i.
inline Lens tuple_lenses(const std::vector<Lens>& family) {
  if (family.empty()) throw TypeMismatch("tupling needs at least one lens");
  std::vector<Diset> cods;
  bool sound = true;
  for (const auto& l : family) {
    if (!(l.dom() == family.front().dom()))
      throw TypeMismatch("tupling needs a common domain");
    cods.push_back(l.cod());
    sound = sound && l.probe_sound();
  }
  const Diset& dom = family.front().dom();
  Diset cod = product_diset(cods).diset;
  return Lens(dom, cod,
              TotalFn::tabulate(dom.forward, Carrier::finite(cod.forward),
                                [&](const Value& x) {
                                  std::vector<Value> parts;
                                  for (const auto& l : family) parts.push_back(l.view(x));
                                  return Value::tuple(std::move(parts));
                                }),
              [family](const Value& x, const Value& r) {
                return family[r.tag()].update(x, r.inner());
              },
              sound);
}

}  // namespace og

#endif  // OPENGAMES_LENS_LIMITS_HPP_
