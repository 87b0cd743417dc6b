#ifndef OPENGAMES_LENS_CONTEXT_HPP_
#define OPENGAMES_LENS_CONTEXT_HPP_

#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/core/value.hpp"
#include "opengames/lens/diset.hpp"
#include "opengames/lens/lens.hpp"
#include "opengames/lens/structure.hpp"

namespace og {

// A history in V(Φ) and a continuation in K(Ψ).
struct Context {
  Value history;
  TotalFn continuation;
};

inline bool is_continuation_for(const TotalFn& k, const Diset& psi) {
  return k.domain() == psi.forward && k.codomain() == psi.backward;
}

// K(λ)(k)(x) = u_λ(x, k(v_λ(x))).
inline TotalFn apply_continuation(const Lens& lambda, const TotalFn& k) {
  if (!is_continuation_for(k, lambda.cod()))
    throw TypeMismatch("continuation does not fit " + lambda.cod().to_string());
  const auto& xs = lambda.dom().forward;
  std::vector<Value> table;
  table.reserve(xs.size());
  const auto& views = lambda.view_table().table();
  for (std::size_t i = 0; i < xs.size(); ++i)
    table.push_back(lambda.update(xs[i], k(views[i])));
  return TotalFn(xs, lambda.dom().backward, std::move(table));
}

// C(κ, μ) for κ : Φ′ -> Φ and μ : Ψ -> Ψ′, taking C(Φ′, Ψ′) to C(Φ, Ψ).
inline Context context_map(const Lens& kappa, const Lens& mu, const Context& c) {
  if (!kappa.dom().forward.contains(c.history))
    throw TypeMismatch("history " + c.history.to_string() + " not in " +
                       kappa.dom().forward.to_string());
  return {kappa.view(c.history), apply_continuation(mu, c.continuation)};
}

// For λ′ : Φ′ -> Ψ′ and c in C(Φ ⊗ Φ′, Ψ ⊗ Ψ′), the context in C(Φ, Ψ) seen
// by the left factor: k ∘ (Ψ ⊗ (λ′ ∘ h₂)) ∘ r⁻¹.
inline Context left_context(const Lens& lambda_r, const Diset& psi, const Context& c) {
  const Value& h = c.history;
  if (!h.is_tuple() || h.size() != 2)
    throw TypeMismatch("history " + h.to_string() + " is not a pair");
  Lens point = point_lens(lambda_r.dom(), h[1]);
  Lens chain = lens_compose(
      lens_tensor(lens_identity(psi), lambda_r),
      lens_compose(lens_tensor(lens_identity(psi), point), runit_inv_lens(psi)));
  return {h[0], apply_continuation(chain, c.continuation)};
}

// For λ : Φ -> Ψ and c in C(Φ ⊗ Φ′, Ψ ⊗ Ψ′), the context in C(Φ′, Ψ′) seen
// by the right factor: k ∘ ((λ ∘ h₁) ⊗ Ψ′) ∘ l⁻¹.
inline Context right_context(const Lens& lambda_l, const Diset& psi_r, const Context& c) {
  const Value& h = c.history;
  if (!h.is_tuple() || h.size() != 2)
    throw TypeMismatch("history " + h.to_string() + " is not a pair");
  Lens point = point_lens(lambda_l.dom(), h[0]);
  Lens chain = lens_compose(
      lens_tensor(lambda_l, lens_identity(psi_r)),
      lens_compose(lens_tensor(point, lens_identity(psi_r)), lunit_inv_lens(psi_r)));
  return {h[1], apply_continuation(chain, c.continuation)};
}

namespace detail {

// Closed forms of the two projections: y ↦ π₁ k(y, y₂) and y′ ↦ π₂ k(y₁, y′).
inline TotalFn left_continuation(const Diset& psi, const Value& y2, const TotalFn& k) {
  std::vector<Value> table;
  table.reserve(psi.forward.size());
  for (const auto& y : psi.forward) table.push_back(k(Value::pair(y, y2))[0]);
  return TotalFn(psi.forward, psi.backward, std::move(table));
}

inline TotalFn right_continuation(const Diset& psi_r, const Value& y1, const TotalFn& k) {
  std::vector<Value> table;
  table.reserve(psi_r.forward.size());
  for (const auto& y : psi_r.forward) table.push_back(k(Value::pair(y1, y))[1]);
  return TotalFn(psi_r.forward, psi_r.backward, std::move(table));
}

}  // namespace detail

// Every continuation Y -> R when R is finite.
inline std::vector<TotalFn> all_continuations(const Diset& psi, const Bounds& bounds = {}) {
  if (!psi.backward.is_finite())
    throw EnumerationBound("continuations into " + psi.backward.to_string() +
                           " cannot be enumerated");
  return enumerate_functions(psi.forward, psi.backward.set(), bounds);
}

// A finite family of continuations into any carrier: constants at each probe
// value plus rotations of the probe list along Y.
inline std::vector<TotalFn> probe_continuations(const Diset& psi) {
  const auto samples = psi.backward.samples();
  std::vector<TotalFn> out;
  if (samples.empty()) return out;
  const std::size_t m = samples.size();
  for (std::size_t shift = 0; shift < m; ++shift) {
    out.push_back(TotalFn::constant(psi.forward, psi.backward, samples[shift]));
    if (psi.forward.size() > 1) {
      std::vector<Value> table;
      for (std::size_t i = 0; i < psi.forward.size(); ++i)
        table.push_back(samples[(i + shift) % m]);
      out.emplace_back(psi.forward, psi.backward, std::move(table));
    }
  }
  return out;
}

}  // namespace og

#endif  // OPENGAMES_LENS_CONTEXT_HPP_
