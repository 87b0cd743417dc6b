#ifndef OPENGAMES_SOLVE_SOLVE_HPP_
#define OPENGAMES_SOLVE_SOLVE_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/lens/context.hpp"
#include "opengames/morphism/states.hpp"
#include "opengames/solve/expr.hpp"

namespace og {

// The unique continuation into a diset whose backward carrier is a singleton.
inline TotalFn trivial_continuation(const Diset& psi) {
  if (!psi.backward.is_finite() || psi.backward.set().size() != 1)
    throw TypeMismatch("no trivial continuation into " + psi.to_string());
  return TotalFn::constant(psi.forward, psi.backward, psi.backward.set()[0]);
}

// Profiles σ with (σ, σ) ∈ B(h, k) for every history h.
inline std::vector<Value> states_over(const OpenGame& g, const TotalFn& k,
                                      const Bounds& bounds = {}) {
  if (!is_continuation_for(k, g.dst()))
    throw TypeMismatch("continuation does not fit " + g.dst().to_string());
  BoundedCount(bounds, "state search").times(g.strategies().size()).times(g.src().forward.size());
  std::vector<Value> out;
  for (std::size_t i = 0; i < g.strategies().size(); ++i) {
    const Value& s = g.strategies()[i];
    bool state = true;
    for (const auto& h : g.src().forward) {
      if (!g.responses({h, k}, s)[i]) {
        state = false;
        break;
      }
    }
    if (state) out.push_back(s);
  }
  return out;
}

inline std::vector<Value> states_over(const GameExpr& e, const TotalFn& k,
                                      const Bounds& bounds = {}) {
  return states_over(e.eval(), k, bounds);
}

// How a separable state factors along the expression: the node, the profile
// there, the continuation it was judged against and the certificates of the
// parts. Tensor nodes hold one certificate per history of the other factor.
struct Certificate {
  std::string node;
  Value profile;
  TotalFn continuation;
  std::vector<Certificate> parts;
};

struct SeparableState {
  Value profile;
  Certificate certificate;
};

namespace detail {

class SeparableSearch {
 public:
  explicit SeparableSearch(const Bounds& bounds) : bounds_(bounds) {}

  const std::vector<SeparableState>& run(const GameExpr& e, const TotalFn& k) {
    auto key = std::make_pair(e.id(), k.hash());
    auto& bucket = memo_[key];
    for (const auto& [kk, result] : bucket)
      if (kk == k) return *result;
    auto result = std::make_shared<std::vector<SeparableState>>(compute(e, k));
    bucket.emplace_back(k, result);
    return *result;
  }

 private:
  std::vector<SeparableState> compute(const GameExpr& e, const TotalFn& k) {
    const OpenGame& g = e.eval();
    std::vector<SeparableState> out;
    switch (e.kind()) {
      case GameExpr::Kind::kAtom:
        for (const auto& s : states_over(g, k, bounds_))
          out.push_back({s, {e.name(), s, k, {}}});
        return out;
      case GameExpr::Kind::kSeq: {
        const GameExpr& first = e.children()[0];
        const GameExpr& second = e.children()[1];
        for (const auto& tail : run(second, k)) {
          TotalFn k_first = apply_continuation(second.eval().play(tail.profile), k);
          for (const auto& head : run(first, k_first)) {
            Value p = Value::pair(head.profile, tail.profile);
            out.push_back({p, {"seq", p, k, {head.certificate, tail.certificate}}});
          }
        }
        sort(g, out);
        return out;
      }
      case GameExpr::Kind::kTensor: {
        const OpenGame& g1 = e.children()[0].eval();
        const OpenGame& g2 = e.children()[1].eval();
        BoundedCount(bounds_, "separable tensor search").times(g.strategies().size());
        for (const auto& p : g.strategies()) {
          std::vector<Certificate> parts;
          bool ok = true;
          for (const auto& h2 : g2.src().forward) {
            Value y2 = g2.play(p[1]).view(h2);
            auto c = find(e.children()[0], left_continuation(g1.dst(), y2, k), p[0]);
            if (!c) {
              ok = false;
              break;
            }
            parts.push_back(*c);
          }
          for (std::size_t i = 0; ok && i < g1.src().forward.size(); ++i) {
            Value y1 = g1.play(p[0]).view(g1.src().forward[i]);
            auto c = find(e.children()[1], right_continuation(g2.dst(), y1, k), p[1]);
            if (!c) {
              ok = false;
              break;
            }
            parts.push_back(*c);
          }
          if (ok) out.push_back({p, {"tensor", p, k, std::move(parts)}});
        }
        return out;
      }
      case GameExpr::Kind::kProduct: {
        std::vector<std::vector<SeparableState>> factors;
        std::size_t total = 1;
        for (std::size_t j = 0; j < e.children().size(); ++j) {
          const OpenGame& gj = e.children()[j].eval();
          factors.push_back(run(e.children()[j], restrict_continuation(k, j, gj.dst())));
          total *= factors.back().size();
        }
        BoundedCount(bounds_, "separable product search").times(total);
        std::vector<std::size_t> digits(factors.size(), 0);
        if (total == 0) return out;
        while (true) {
          std::vector<Value> profile;
          std::vector<Certificate> parts;
          for (std::size_t j = 0; j < factors.size(); ++j) {
            profile.push_back(factors[j][digits[j]].profile);
            parts.push_back(factors[j][digits[j]].certificate);
          }
          Value p = Value::tuple(std::move(profile));
          out.push_back({p, {"product", p, k, std::move(parts)}});
          std::size_t j = factors.size();
          while (j > 0 && ++digits[j - 1] == factors[j - 1].size()) digits[--j] = 0;
          if (j == 0) break;
        }
        return out;
      }
    }
    return out;
  }

  std::optional<Certificate> find(const GameExpr& e, const TotalFn& k, const Value& s) {
    for (const auto& st : run(e, k))
      if (st.profile == s) return st.certificate;
    return std::nullopt;
  }

  static void sort(const OpenGame& g, std::vector<SeparableState>& states) {
    std::stable_sort(states.begin(), states.end(), [&](const auto& a, const auto& b) {
      return g.index(a.profile) < g.index(b.profile);
    });
  }

  const Bounds& bounds_;
  std::map<std::pair<const void*, std::size_t>,
           std::vector<std::pair<TotalFn, std::shared_ptr<std::vector<SeparableState>>>>>
      memo_;
};

}  // namespace detail

// States that factor along the expression's cuts: at Seq(G, H), τ separable
// for H over k and σ separable for G over K(H(τ))(k); at Tensor, each factor
// separable in every context projected through the other factor's play; at
// Product, componentwise over k ∘ ι_j; at atoms, all states.
inline std::vector<SeparableState> separable_states_over(const GameExpr& e, const TotalFn& k,
                                                         const Bounds& bounds = {}) {
  if (!is_continuation_for(k, e.eval().dst()))
    throw TypeMismatch("continuation does not fit " + e.eval().dst().to_string());
  detail::SeparableSearch search(bounds);
  return search.run(e, k);
}

struct SolutionReport {
  TotalFn continuation;
  std::vector<Value> states;
  std::vector<SeparableState> separable;
};

inline SolutionReport solve(const GameExpr& e, const TotalFn& k, const Bounds& bounds = {}) {
  return {k, states_over(e, k, bounds), separable_states_over(e, k, bounds)};
}

}  // namespace og

#endif  // OPENGAMES_SOLVE_SOLVE_HPP_
