#ifndef OPENGAMES_MORPHISM_MORPHISM_HPP_
#define OPENGAMES_MORPHISM_MORPHISM_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/game/open_game.hpp"
#include "opengames/game/operators.hpp"
#include "opengames/lens/context.hpp"
#include "opengames/lens/equality.hpp"

namespace og {

// A 2-cell α : G -> G′ with s(α) : src(G′) -> src(G), t(α) : dst(G′) -> dst(G)
// and Σ(α) : Σ(G) -> Σ(G′).
class GameMorphism {
 public:
  GameMorphism(OpenGame from, OpenGame to, Lens s, Lens t, TotalFn sigma)
      : from_(std::move(from)),
        to_(std::move(to)),
        s_(std::move(s)),
        t_(std::move(t)),
        sigma_(std::move(sigma)) {
    if (!(s_.dom() == to_.src()) || !(s_.cod() == from_.src()))
      throw TypeMismatch("source lens has type " + s_.dom().to_string() + " -> " +
                         s_.cod().to_string());
    if (!(t_.dom() == to_.dst()) || !(t_.cod() == from_.dst()))
      throw TypeMismatch("target lens has type " + t_.dom().to_string() + " -> " +
                         t_.cod().to_string());
    if (!(sigma_.domain() == from_.strategies()) || !sigma_.codomain().is_finite() ||
        !(sigma_.codomain().set() == to_.strategies()))
      throw TypeMismatch("strategy map does not go between the strategy sets");
  }

  const OpenGame& from() const { return from_; }
  const OpenGame& to() const { return to_; }
  const Lens& s() const { return s_; }
  const Lens& t() const { return t_; }
  const TotalFn& sigma_map() const { return sigma_; }
  const Value& sigma(const Value& v) const { return sigma_(v); }

  // Both boundary lenses are identities.
  bool is_globular(const Bounds& bounds = {}) const {
    return s_.dom() == s_.cod() && t_.dom() == t_.cod() &&
           lens_equal(s_, lens_identity(s_.dom()), bounds) &&
           lens_equal(t_, lens_identity(t_.dom()), bounds);
  }

 private:
  OpenGame from_;
  OpenGame to_;
  Lens s_;
  Lens t_;
  TotalFn sigma_;
};

struct MorphismWitness {
  enum class Axiom { kLensSquare, kBestResponse };
  Axiom axiom = Axiom::kLensSquare;
  Value sigma;
  std::optional<Value> sigma2;
  std::optional<Value> history;
  std::optional<TotalFn> continuation;
  std::string detail;

  std::string to_string() const {
    std::string out = axiom == Axiom::kLensSquare ? "lens square fails" : "best response not preserved";
    out += " at sigma=" + sigma.to_string();
    if (sigma2) out += " sigma'=" + sigma2->to_string();
    if (history) out += " h=" + history->to_string();
    if (continuation) out += " k=" + continuation->to_string();
    if (!detail.empty()) out += " (" + detail + ")";
    return out;
  }
};

struct MorphismCheck {
  bool valid = true;
  std::optional<MorphismWitness> witness;
  std::uint64_t contexts = 0;
};

// Continuations quantified over for a target diset: all of them when the
// backward carrier is finite, otherwise `extra` plus the probe family.
inline std::vector<TotalFn> continuations_for(const Diset& psi,
                                              const std::vector<TotalFn>& extra,
                                              const Bounds& bounds = {}) {
  if (psi.backward.is_finite()) return all_continuations(psi, bounds);
  std::vector<TotalFn> out;
  for (const auto& k : extra) {
    if (!is_continuation_for(k, psi))
      throw TypeMismatch("supplied continuation does not fit " + psi.to_string());
    out.push_back(k);
  }
  for (auto& k : probe_continuations(psi)) out.push_back(std::move(k));
  return out;
}

// Checks (i) G(σ) ∘ s = t ∘ G′(Σσ) for every σ and (ii) that
// B_G(V(s)h, k) ⊆ (Σ × Σ)⁻¹ B_G′(h, K(t)k) for every h and quantified k.
// The same check with the continuations in (ii) restricted to `ks`.
inline MorphismCheck check_morphism_on(const GameMorphism& alpha, const std::vector<TotalFn>& ks,
                                       const Bounds& bounds = {}) {
  MorphismCheck out;
  const OpenGame& g = alpha.from();
  const OpenGame& g2 = alpha.to();
  for (const auto& s : g.strategies()) {
    Lens left = lens_compose(g.play(s), alpha.s());
    Lens right = lens_compose(alpha.t(), g2.play(alpha.sigma(s)));
    if (auto diff = lens_difference(left, right, bounds)) {
      out.valid = false;
      MorphismWitness w;
      w.axiom = MorphismWitness::Axiom::kLensSquare;
      w.sigma = s;
      w.history = diff->x;
      w.detail = diff->reason;
      out.witness = w;
      return out;
    }
  }
  for (const auto& k : ks)
    if (!is_continuation_for(k, g.dst()))
      throw TypeMismatch("continuation does not fit " + g.dst().to_string());
  BoundedCount(bounds, "morphism check")
      .times(g2.src().forward.size())
      .times(ks.size())
      .times(g.strategies().size());
  for (const auto& h : g2.src().forward) {
    const Value h_from = alpha.s().view(h);
    for (const auto& k : ks) {
      ++out.contexts;
      Context c_from{h_from, k};
      Context c_to{h, apply_continuation(alpha.t(), k)};
      for (const auto& s : g.strategies()) {
        StrategySubset r = g.responses(c_from, s);
        StrategySubset r2;
        bool computed = false;
        for (std::size_t j = 0; j < r.size(); ++j) {
          if (!r[j]) continue;
          if (!computed) {
            r2 = g2.responses(c_to, alpha.sigma(s));
            computed = true;
          }
          const Value& s2 = g.strategies()[j];
          if (!r2[g2.index(alpha.sigma(s2))]) {
            out.valid = false;
            MorphismWitness w;
            w.axiom = MorphismWitness::Axiom::kBestResponse;
            w.sigma = s;
            w.sigma2 = s2;
            w.history = h;
            w.continuation = k;
            out.witness = w;
            return out;
          }
        }
      }
    }
  }
  return out;
}

inline MorphismCheck check_morphism(const GameMorphism& alpha,
                                    const std::vector<TotalFn>& extra = {},
                                    const Bounds& bounds = {}) {
  return check_morphism_on(alpha, continuations_for(alpha.from().dst(), extra, bounds), bounds);
}

inline GameMorphism identity_morphism(const OpenGame& g) {
  return GameMorphism(g, g, lens_identity(g.src()), lens_identity(g.dst()),
                      TotalFn::identity(g.strategies()));
}

namespace detail {

inline void require_same_shape(const OpenGame& a, const OpenGame& b, const char* what) {
  if (!(a.src() == b.src()) || !(a.dst() == b.dst()) || !(a.strategies() == b.strategies()))
    throw TypeMismatch(std::string(what) + ": games do not match");
}

}  // namespace detail

// α′ ∘ α for α : G -> G′ and α′ : G′ -> G″.
inline GameMorphism vcompose(const GameMorphism& alpha2, const GameMorphism& alpha) {
  detail::require_same_shape(alpha.to(), alpha2.from(), "vertical composition");
  const TotalFn& f = alpha.sigma_map();
  const TotalFn& f2 = alpha2.sigma_map();
  std::vector<Value> table;
  for (const auto& v : f.table()) table.push_back(f2(v));
  return GameMorphism(alpha.from(), alpha2.to(), lens_compose(alpha.s(), alpha2.s()),
                      lens_compose(alpha.t(), alpha2.t()),
                      TotalFn(f.domain(), f2.codomain(), std::move(table)));
}

// β ⊙ α : H ⊙ G -> H′ ⊙ G′, defined when t(α) = s(β).
inline GameMorphism hcompose(const GameMorphism& beta, const GameMorphism& alpha,
                             const Bounds& bounds = {}) {
  if (auto diff = lens_difference(alpha.t(), beta.s(), bounds))
    throw BoundaryMismatch("t(alpha) differs from s(beta): " + diff->reason);
  OpenGame from = seq_compose(alpha.from(), beta.from());
  OpenGame to = seq_compose(alpha.to(), beta.to());
  auto sigma = TotalFn::tabulate(from.strategies(), Carrier::finite(to.strategies()),
                                 [&](const Value& p) {
                                   return Value::pair(alpha.sigma(p[0]), beta.sigma(p[1]));
                                 });
  return GameMorphism(from, to, alpha.s(), beta.t(), sigma);
}

inline GameMorphism tensor_morphisms(const GameMorphism& a1, const GameMorphism& a2) {
  OpenGame from = tensor_games(a1.from(), a2.from());
  OpenGame to = tensor_games(a1.to(), a2.to());
  auto sigma = TotalFn::tabulate(from.strategies(), Carrier::finite(to.strategies()),
                                 [&](const Value& p) {
                                   return Value::pair(a1.sigma(p[0]), a2.sigma(p[1]));
                                 });
  return GameMorphism(from, to, lens_tensor(a1.s(), a2.s()), lens_tensor(a1.t(), a2.t()),
                      sigma);
}

// Componentwise equality: both boundary lenses and the strategy map.
inline std::optional<std::string> morphism_difference(const GameMorphism& a,
                                                      const GameMorphism& b,
                                                      const Bounds& bounds = {}) {
  if (auto d = lens_difference(a.s(), b.s(), bounds)) return "s lenses: " + d->reason;
  if (auto d = lens_difference(a.t(), b.t(), bounds)) return "t lenses: " + d->reason;
  if (!(a.sigma_map().domain() == b.sigma_map().domain()))
    return std::string("strategy maps have different domains");
  if (!(a.sigma_map().as_value() == b.sigma_map().as_value()))
    return std::string("strategy maps differ");
  return std::nullopt;
}

inline bool morphism_equal(const GameMorphism& a, const GameMorphism& b,
                           const Bounds& bounds = {}) {
  return !morphism_difference(a, b, bounds).has_value();
}

}  // namespace og

#endif  // OPENGAMES_MORPHISM_MORPHISM_HPP_
