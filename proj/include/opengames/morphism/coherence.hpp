#ifndef OPENGAMES_MORPHISM_COHERENCE_HPP_
#define OPENGAMES_MORPHISM_COHERENCE_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/game/operators.hpp"
#include "opengames/game/random.hpp"
#include "opengames/lens/equality.hpp"
#include "opengames/lens/structure.hpp"
#include "opengames/morphism/cells.hpp"
#include "opengames/morphism/morphism.hpp"
#include "opengames/morphism/states.hpp"

namespace og {

// Pass/fail counts per named law, in first-seen order, with the first few
// failure descriptions.
class LawTally {
 public:
  struct Entry {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> witnesses;
  };

  void record(const std::string& name, const std::optional<std::string>& failure) {
    Entry& e = entry(name);
    if (!failure) {
      ++e.passed;
      return;
    }
    ++e.failed;
    if (e.witnesses.size() < 3) e.witnesses.push_back(*failure);
  }

  // Runs `law`, turning exceptions into failures.
  void run(const std::string& name, const std::function<std::optional<std::string>()>& law) {
    std::optional<std::string> failure;
    try {
      failure = law();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    record(name, failure);
  }

  void merge(const LawTally& other) {
    for (const auto& o : other.entries_) {
      Entry& e = entry(o.name);
      e.passed += o.passed;
      e.failed += o.failed;
      for (const auto& w : o.witnesses)
        if (e.witnesses.size() < 3) e.witnesses.push_back(w);
    }
  }

  const std::vector<Entry>& entries() const { return entries_; }
  std::uint64_t failures() const {
    std::uint64_t n = 0;
    for (const auto& e : entries_) n += e.failed;
    return n;
  }
  std::uint64_t checks() const {
    std::uint64_t n = 0;
    for (const auto& e : entries_) n += e.passed + e.failed;
    return n;
  }

 private:
  Entry& entry(const std::string& name) {
    for (auto& e : entries_)
      if (e.name == name) return e;
    entries_.push_back({name, 0, 0, {}});
    return entries_.back();
  }
  std::vector<Entry> entries_;
};

inline std::optional<std::string> lens_mismatch(const Lens& a, const Lens& b,
                                                const Bounds& bounds = {}) {
  if (auto d = lens_difference(a, b, bounds)) {
    std::string out = d->reason;
    if (d->x) out += " at x=" + d->x->to_string();
    if (d->r) out += " r=" + d->r->to_string();
    return out;
  }
  return std::nullopt;
}

inline std::optional<std::string> cell_invalid(const GameMorphism& a, const Bounds& bounds = {}) {
  auto check = check_morphism(a, {}, bounds);
  if (check.valid) return std::nullopt;
  return check.witness->to_string();
}

// A fixed family of continuations into `psi`: the probes plus `n`
// pseudo-random tables when the backward carrier is finite.
inline std::vector<TotalFn> sampled_continuations(const Diset& psi, std::size_t n) {
  std::vector<TotalFn> out = probe_continuations(psi);
  if (!psi.backward.is_finite() || psi.backward.set().empty()) return out;
  Rng rng(0x9e3779b97f4a7c15ULL ^ (psi.forward.size() * 1315423911ULL) ^ psi.backward.set().size());
  const FiniteSet& r = psi.backward.set();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Value> table;
    for (std::size_t y = 0; y < psi.forward.size(); ++y) table.push_back(r[rng.below(r.size())]);
    out.emplace_back(psi.forward, psi.backward, std::move(table));
  }
  return out;
}

// Validity over every continuation, or over sampled_continuations under
// "<name>.sampled" when the exhaustive check exceeds the bound.
inline void record_cell_validity(LawTally& tally, const std::string& name,
                                 const std::function<GameMorphism()>& make,
                                 const Bounds& bounds = {}) {
  std::optional<GameMorphism> cell;
  try {
    cell = make();
    auto check = check_morphism(*cell, {}, bounds);
    tally.record(name, check.valid ? std::nullopt : std::optional(check.witness->to_string()));
    return;
  } catch (const EnumerationBound&) {
  } catch (const std::exception& e) {
    tally.record(name, std::string("exception: ") + e.what());
    return;
  }
  tally.run(name + ".sampled", [&]() -> std::optional<std::string> {
    auto check = check_morphism_on(*cell, sampled_continuations(cell->from().dst(), 256), bounds);
    if (check.valid) return std::nullopt;
    return check.witness->to_string();
  });
}

inline std::optional<std::string> cells_differ(const GameMorphism& a, const GameMorphism& b,
                                               const Bounds& bounds = {}) {
  return morphism_difference(a, b, bounds);
}

// inv ∘ cell and cell ∘ inv are identities.
inline std::optional<std::string> not_inverse(const GameMorphism& cell, const GameMorphism& inv,
                                              const Bounds& bounds = {}) {
  if (auto d = morphism_difference(vcompose(inv, cell), identity_morphism(cell.from()), bounds))
    return "inverse after cell: " + *d;
  if (auto d = morphism_difference(vcompose(cell, inv), identity_morphism(cell.to()), bounds))
    return "cell after inverse: " + *d;
  return std::nullopt;
}

inline GameMorphism vchain(const std::vector<GameMorphism>& steps) {
  GameMorphism out = steps.front();
  for (std::size_t i = 1; i < steps.size(); ++i) out = vcompose(steps[i], out);
  return out;
}

// ---------------------------------------------------------------------------
// Lens category

inline void lens_triple_laws(const Lens& f, const Lens& g, const Lens& h, LawTally& tally,
                             const Bounds& bounds = {}) {
  tally.run("lens.associativity", [&] {
    return lens_mismatch(lens_compose(h, lens_compose(g, f)), lens_compose(lens_compose(h, g), f),
                         bounds);
  });
}

inline void lens_identity_laws(const Lens& f, LawTally& tally, const Bounds& bounds = {}) {
  tally.run("lens.left_identity", [&] {
    return lens_mismatch(lens_compose(lens_identity(f.cod()), f), f, bounds);
  });
  tally.run("lens.right_identity", [&] {
    return lens_mismatch(lens_compose(f, lens_identity(f.dom())), f, bounds);
  });
}

// Every composable triple over disets whose components have size ≤ max_size.
inline void exhaustive_lens_laws(std::size_t max_size, LawTally& tally, const Bounds& bounds = {}) {
  std::vector<Diset> disets;
  for (std::size_t x = 0; x <= max_size; ++x)
    for (std::size_t s = 0; s <= max_size; ++s)
      disets.push_back({named_set("x", x), Carrier::finite(named_set("s", s))});
  const std::size_t n = disets.size();
  std::vector<std::vector<std::vector<Lens>>> lenses(n, std::vector<std::vector<Lens>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) lenses[a][b] = enumerate_lenses(disets[a], disets[b], bounds);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& f : lenses[a][b]) lens_identity_laws(f, tally, bounds);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (lenses[a][b].empty() || lenses[b][c].empty()) continue;
        for (const auto& f : lenses[a][b])
          for (const auto& g : lenses[b][c]) {
            Lens gf = lens_compose(g, f);
            for (std::size_t d = 0; d < n; ++d)
              for (const auto& h : lenses[c][d]) {
                tally.run("lens.associativity", [&] {
                  return lens_mismatch(lens_compose(h, gf), lens_compose(lens_compose(h, g), f),
                                       bounds);
                });
              }
          }
      }
}

// One random composable triple over disets with components of size ≤ max_size,
// plus tensor functoriality and the structure isomorphisms.
inline void random_lens_laws(Rng& rng, std::size_t max_size, LawTally& tally,
                             const Bounds& bounds = {}) {
  auto diset = [&] { return random_diset(rng, max_size, rng.below(4) == 0 ? 2 : 0); };
  Diset a = diset(), b = diset(), c = diset(), d = diset();
  Lens f = random_lens(rng, a, b), g = random_lens(rng, b, c), h = random_lens(rng, c, d);
  lens_triple_laws(f, g, h, tally, bounds);
  lens_identity_laws(f, tally, bounds);
  Diset e = diset();
  Lens f2 = random_lens(rng, c, e), g2 = random_lens(rng, a, c);
  tally.run("lens.tensor_functor", [&] {
    return lens_mismatch(lens_compose(lens_tensor(h, f2), lens_tensor(g, g2)),
                         lens_tensor(lens_compose(h, g), lens_compose(f2, g2)), bounds);
  });
  tally.run("lens.tensor_identity", [&] {
    return lens_mismatch(lens_tensor(lens_identity(a), lens_identity(b)),
                         lens_identity(tensor(a, b)), bounds);
  });
  tally.run("lens.structure_inverses", [&]() -> std::optional<std::string> {
    auto check = [&](const Lens& x, const Lens& y) {
      return lens_mismatch(lens_compose(y, x), lens_identity(x.dom()), bounds);
    };
    if (auto m = check(assoc_lens(a, b, c), assoc_inv_lens(a, b, c))) return "assoc: " + *m;
    if (auto m = check(assoc_inv_lens(a, b, c), assoc_lens(a, b, c))) return "assoc inv: " + *m;
    if (auto m = check(lunit_lens(a), lunit_inv_lens(a))) return "lunit: " + *m;
    if (auto m = check(lunit_inv_lens(a), lunit_lens(a))) return "lunit inv: " + *m;
    if (auto m = check(runit_lens(a), runit_inv_lens(a))) return "runit: " + *m;
    if (auto m = check(runit_inv_lens(a), runit_lens(a))) return "runit inv: " + *m;
    if (auto m = check(swap_lens(a, b), swap_lens(b, a))) return "swap: " + *m;
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Open games

// Games arranged so that every diagram below is well typed:
// G_i : A_i ⇸ B_i, H_i : B_i ⇸ C_i, J_i : C_i ⇸ E_i for i = 1, 2, 3, and
// K : E_1 ⇸ F; `lift` is a lens D -> A_2.
struct CoherenceGames {
  std::vector<Diset> a, b, c, e;
  Diset f;
  std::vector<OpenGame> g, h, j;
  OpenGame k;
  Lens lift;
};

inline CoherenceGames random_coherence_games(Rng& rng, std::size_t max_size) {
  auto diset = [&] { return random_diset(rng, max_size); };
  std::vector<Diset> a, b, c, e;
  std::vector<OpenGame> g, h, j;
  for (std::size_t i = 0; i < 3; ++i) {
    a.push_back(diset());
    b.push_back(diset());
    c.push_back(diset());
    e.push_back(diset());
  }
  Diset f = diset();
  for (std::size_t i = 0; i < 3; ++i) {
    std::string n = std::to_string(i + 1);
    g.push_back(random_game(rng, a[i], b[i], "G" + n));
    h.push_back(random_game(rng, b[i], c[i], "H" + n));
    j.push_back(random_game(rng, c[i], e[i], "J" + n));
  }
  OpenGame k = random_game(rng, e[0], f, "K");
  Lens lift = random_lens(rng, diset(), a[1]);
  return {a, b, c, e, f, g, h, j, k, lift};
}

// Validity and invertibility of every structure cell.
inline void structure_cell_laws(const CoherenceGames& cg, LawTally& tally, const Bounds& bounds = {}) {
  const auto& g = cg.g;
  const auto& h = cg.h;
  const auto& j = cg.j;
  auto cell = [&](const std::string& name, const std::function<GameMorphism()>& make,
                  const std::function<GameMorphism()>& make_inv) {
    record_cell_validity(tally, "cell." + name + ".valid", make, bounds);
    record_cell_validity(tally, "cell." + name + ".inverse_valid", make_inv, bounds);
    tally.run("cell." + name + ".inverses", [&] { return not_inverse(make(), make_inv(), bounds); });
  };
  cell("assoc", [&] { return assoc_cell(g[0], h[0], j[0]); },
       [&] { return assoc_cell_inv(g[0], h[0], j[0]); });
  cell("lunit", [&] { return lunit_cell(g[0]); }, [&] { return lunit_cell_inv(g[0]); });
  cell("runit", [&] { return runit_cell(g[0]); }, [&] { return runit_cell_inv(g[0]); });
  cell("identitor", [&] { return identitor_cell(cg.a[0], cg.a[1]); },
       [&] { return identitor_cell_inv(cg.a[0], cg.a[1]); });
  cell("interchange", [&] { return interchange_cell(g[0], g[1], h[0], h[1]); },
       [&] { return interchange_cell_inv(g[0], g[1], h[0], h[1]); });
  cell("tensor_assoc", [&] { return tensor_assoc_cell(g[0], g[1], g[2]); },
       [&] { return tensor_assoc_cell_inv(g[0], g[1], g[2]); });
  cell("tensor_lunit", [&] { return tensor_lunit_cell(g[0]); },
       [&] { return tensor_lunit_cell_inv(g[0]); });
  cell("tensor_runit", [&] { return tensor_runit_cell(g[0]); },
       [&] { return tensor_runit_cell_inv(g[0]); });
  cell("symmetry", [&] { return symmetry_cell(g[0], g[1]); },
       [&] { return symmetry_cell(g[1], g[0]); });
  tally.run("cell.unit_of_lens.valid", [&] {
    return cell_invalid(unit_cell(swap_lens(cg.a[1], cg.a[0])), bounds);
  });
}

// Pentagon and triangle for ⊙, interchange of ∘ and ⊙, functoriality of ⊗.
inline void sequential_laws(const CoherenceGames& cg, LawTally& tally, const Bounds& bounds = {}) {
  const OpenGame& g = cg.g[0];
  const OpenGame& h = cg.h[0];
  const OpenGame& j = cg.j[0];
  const OpenGame& k = cg.k;
  tally.run("seq.pentagon", [&] {
    auto lhs = vcompose(assoc_cell(seq_compose(g, h), j, k), assoc_cell(g, h, seq_compose(j, k)));
    auto rhs = vchain({hcompose(assoc_cell(h, j, k), identity_morphism(g), bounds),
                       assoc_cell(g, seq_compose(h, j), k),
                       hcompose(identity_morphism(k), assoc_cell(g, h, j), bounds)});
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("seq.triangle", [&] {
    OpenGame u = unit_game(g.dst());
    auto lhs = hcompose(runit_cell(h), identity_morphism(g), bounds);
    auto rhs = vcompose(hcompose(identity_morphism(h), lunit_cell(g), bounds), assoc_cell(g, u, h));
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("seq.interchange", [&] {
    auto alpha = lunit_cell_inv(g), alpha2 = lunit_cell(g);
    auto beta = runit_cell_inv(h), beta2 = runit_cell(h);
    auto lhs = vcompose(hcompose(beta2, alpha2, bounds), hcompose(beta, alpha, bounds));
    auto rhs = hcompose(vcompose(beta2, beta), vcompose(alpha2, alpha), bounds);
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("seq.identity", [&] {
    return cells_differ(hcompose(identity_morphism(h), identity_morphism(g), bounds),
                        identity_morphism(seq_compose(g, h)), bounds);
  });
  tally.run("tensor.functor", [&] {
    auto a = tensor_lunit_cell_inv(cg.g[0]), a2 = tensor_lunit_cell(cg.g[0]);
    auto b = source_lifting(cg.g[1], cg.lift);
    auto b2 = identity_morphism(b.to());
    auto lhs = vcompose(tensor_morphisms(a2, b2), tensor_morphisms(a, b));
    auto rhs = tensor_morphisms(vcompose(a2, a), vcompose(b2, b));
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("tensor.identity", [&] {
    return cells_differ(tensor_morphisms(identity_morphism(cg.g[0]), identity_morphism(cg.g[1])),
                        identity_morphism(tensor_games(cg.g[0], cg.g[1])), bounds);
  });
  tally.run("tensor.symmetry_involution", [&] {
    return cells_differ(vcompose(symmetry_cell(cg.g[1], cg.g[0]), symmetry_cell(cg.g[0], cg.g[1])),
                        identity_morphism(tensor_games(cg.g[0], cg.g[1])), bounds);
  });
  tally.run("tensor.triangle", [&] {
    OpenGame u = unit_game(unit_diset());
    auto lhs = vcompose(tensor_morphisms(identity_morphism(cg.g[0]), tensor_lunit_cell(cg.g[1])),
                        tensor_assoc_cell(cg.g[0], u, cg.g[1]));
    auto rhs = tensor_morphisms(tensor_runit_cell(cg.g[0]), identity_morphism(cg.g[1]));
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("tensor.pentagon", [&] {
    const auto& a = cg.g[0];
    const auto& b = cg.g[1];
    const auto& c = cg.g[2];
    const auto& d = cg.h[0];
    auto lhs = vcompose(tensor_assoc_cell(a, b, tensor_games(c, d)),
                        tensor_assoc_cell(tensor_games(a, b), c, d));
    auto rhs = vchain({tensor_morphisms(tensor_assoc_cell(a, b, c), identity_morphism(d)),
                       tensor_assoc_cell(a, tensor_games(b, c), d),
                       tensor_morphisms(identity_morphism(a), tensor_assoc_cell(b, c, d))});
    return cells_differ(lhs, rhs, bounds);
  });
}

// The literal context projections agree with their closed forms, and the
// tensor relation is the conjunction of the projected relations.
inline void projection_laws(const CoherenceGames& cg, LawTally& tally, const Bounds& bounds = {}) {
  const OpenGame& g1 = cg.g[0];
  const OpenGame& g2 = cg.g[1];
  OpenGame gg = tensor_games(g1, g2);
  tally.run("tensor.projection", [&]() -> std::optional<std::string> {
    auto ks = continuations_for(gg.dst(), {}, bounds);
    if (ks.size() > 64) ks.resize(64);
    for (const auto& h : gg.src().forward)
      for (const auto& k : ks)
        for (const auto& p : gg.strategies()) {
          Context c{h, k};
          Context l = left_context(g2.play(p[1]), g1.dst(), c);
          Context r = right_context(g1.play(p[0]), g2.dst(), c);
          if (!(l.history == h[0]) || !(r.history == h[1])) return "projected histories";
          Value y1 = g1.play(p[0]).view(h[0]);
          Value y2 = g2.play(p[1]).view(h[1]);
          if (!(l.continuation == detail::left_continuation(g1.dst(), y2, k)))
            return "left context at h=" + h.to_string() + " k=" + k.to_string();
          if (!(r.continuation == detail::right_continuation(g2.dst(), y1, k)))
            return "right context at h=" + h.to_string() + " k=" + k.to_string();
          for (const auto& p2 : gg.strategies()) {
            bool joint = gg.best(c, p, p2);
            bool split = g1.best(l, p[0], p2[0]) && g2.best(r, p[1], p2[1]);
            if (joint != split) return "relation at sigma=" + p.to_string() + " sigma'=" + p2.to_string();
          }
        }
    return std::nullopt;
  });
}

// The commuting diagrams relating 𝔘 and 𝔛 to the remaining structure.
inline void interchange_diagrams(const CoherenceGames& cg, LawTally& tally,
                                 const Bounds& bounds = {}) {
  const auto& g = cg.g;
  const auto& h = cg.h;
  const auto& j = cg.j;
  const Diset& i = unit_diset();
  auto u = [](const Diset& d) { return unit_game(d); };
  auto id = [](const OpenGame& x) { return identity_morphism(x); };

  tally.run("diagram.identitor_lunit", [&] {
    OpenGame gg = tensor_games(g[0], g[1]);
    auto lhs = lunit_cell(gg);
    auto rhs = vchain({hcompose(identitor_cell(cg.b[0], cg.b[1]), id(gg), bounds),
                       interchange_cell(g[0], g[1], u(cg.b[0]), u(cg.b[1])),
                       tensor_morphisms(lunit_cell(g[0]), lunit_cell(g[1]))});
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.identitor_runit", [&] {
    OpenGame gg = tensor_games(g[0], g[1]);
    auto lhs = runit_cell(gg);
    auto rhs = vchain({hcompose(id(gg), identitor_cell(cg.a[0], cg.a[1]), bounds),
                       interchange_cell(u(cg.a[0]), u(cg.a[1]), g[0], g[1]),
                       tensor_morphisms(runit_cell(g[0]), runit_cell(g[1]))});
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.interchange_assoc", [&] {
    OpenGame gg = tensor_games(g[0], g[1]);
    OpenGame hh = tensor_games(h[0], h[1]);
    OpenGame jj = tensor_games(j[0], j[1]);
    auto lhs = vchain({hcompose(interchange_cell(h[0], h[1], j[0], j[1]), id(gg), bounds),
                       interchange_cell(g[0], g[1], seq_compose(h[0], j[0]), seq_compose(h[1], j[1])),
                       tensor_morphisms(assoc_cell(g[0], h[0], j[0]), assoc_cell(g[1], h[1], j[1]))});
    auto rhs = vchain({assoc_cell(gg, hh, jj),
                       hcompose(id(jj), interchange_cell(g[0], g[1], h[0], h[1]), bounds),
                       interchange_cell(seq_compose(g[0], h[0]), seq_compose(g[1], h[1]), j[0], j[1])});
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.identitor_tensor_assoc", [&] {
    const Diset& x1 = cg.a[0];
    const Diset& x2 = cg.a[1];
    const Diset& x3 = cg.a[2];
    auto lhs = vchain({identitor_cell(tensor(x1, x2), x3),
                       tensor_morphisms(identitor_cell(x1, x2), id(u(x3))),
                       tensor_assoc_cell(u(x1), u(x2), u(x3))});
    auto rhs = vchain({unit_cell(assoc_inv_lens(x1, x2, x3)), identitor_cell(x1, tensor(x2, x3)),
                       tensor_morphisms(id(u(x1)), identitor_cell(x2, x3))});
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.interchange_tensor_assoc", [&] {
    OpenGame g12 = tensor_games(g[0], g[1]);
    OpenGame h12 = tensor_games(h[0], h[1]);
    auto lhs = vchain({interchange_cell(g12, g[2], h12, h[2]),
                       tensor_morphisms(interchange_cell(g[0], g[1], h[0], h[1]),
                                        id(seq_compose(g[2], h[2]))),
                       tensor_assoc_cell(seq_compose(g[0], h[0]), seq_compose(g[1], h[1]),
                                         seq_compose(g[2], h[2]))});
    auto rhs = vchain({hcompose(tensor_assoc_cell(h[0], h[1], h[2]),
                                tensor_assoc_cell(g[0], g[1], g[2]), bounds),
                       interchange_cell(g[0], tensor_games(g[1], g[2]), h[0], tensor_games(h[1], h[2])),
                       tensor_morphisms(id(seq_compose(g[0], h[0])),
                                        interchange_cell(g[1], g[2], h[1], h[2]))});
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.identitor_lunit_unit", [&] {
    const Diset& x = cg.a[0];
    auto lhs = vcompose(tensor_lunit_cell(u(x)), identitor_cell(i, x));
    return cells_differ(lhs, unit_cell(lunit_inv_lens(x)), bounds);
  });
  tally.run("diagram.interchange_lunit", [&] {
    OpenGame ui = u(i);
    auto lhs = vchain({interchange_cell(ui, g[0], ui, h[0]),
                       tensor_morphisms(lunit_cell(ui), id(seq_compose(g[0], h[0]))),
                       tensor_lunit_cell(seq_compose(g[0], h[0]))});
    auto rhs = hcompose(tensor_lunit_cell(h[0]), tensor_lunit_cell(g[0]), bounds);
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.identitor_runit_unit", [&] {
    const Diset& x = cg.a[0];
    auto lhs = vcompose(tensor_runit_cell(u(x)), identitor_cell(x, i));
    return cells_differ(lhs, unit_cell(runit_inv_lens(x)), bounds);
  });
  tally.run("diagram.interchange_runit", [&] {
    OpenGame ui = u(i);
    auto lhs = vchain({interchange_cell(g[0], ui, h[0], ui),
                       tensor_morphisms(id(seq_compose(g[0], h[0])), runit_cell(ui)),
                       tensor_runit_cell(seq_compose(g[0], h[0]))});
    auto rhs = hcompose(tensor_runit_cell(h[0]), tensor_runit_cell(g[0]), bounds);
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.identitor_symmetry", [&] {
    const Diset& x1 = cg.a[0];
    const Diset& x2 = cg.a[1];
    auto lhs = vcompose(symmetry_cell(u(x1), u(x2)), identitor_cell(x1, x2));
    auto rhs = vcompose(identitor_cell(x2, x1), unit_cell(swap_lens(x2, x1)));
    return cells_differ(lhs, rhs, bounds);
  });
  tally.run("diagram.interchange_symmetry", [&] {
    auto lhs = vcompose(interchange_cell(g[1], g[0], h[1], h[0]),
                        hcompose(symmetry_cell(h[0], h[1]), symmetry_cell(g[0], g[1]), bounds));
    auto rhs = vcompose(symmetry_cell(seq_compose(g[0], h[0]), seq_compose(g[1], h[1])),
                        interchange_cell(g[0], g[1], h[0], h[1]));
    return cells_differ(lhs, rhs, bounds);
  });
}

// All coherence suites on `trials` random instances. Instances are drawn from
// `rng` in order and checked on worker threads; the merged tally does not
// depend on the thread count.
inline LawTally coherence_trials(Rng& rng, std::size_t max_size, std::size_t trials,
                                 const Bounds& bounds = {}, unsigned threads = 0) {
  std::vector<CoherenceGames> games;
  games.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) games.push_back(random_coherence_games(rng, max_size));
  std::vector<LawTally> tallies(trials);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < trials; t = next++) {
      structure_cell_laws(games[t], tallies[t], bounds);
      sequential_laws(games[t], tallies[t], bounds);
      projection_laws(games[t], tallies[t], bounds);
      interchange_diagrams(games[t], tallies[t], bounds);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  LawTally out;
  for (const auto& t : tallies) out.merge(t);
  return out;
}

}  // namespace og

#endif  // OPENGAMES_MORPHISM_COHERENCE_HPP_
