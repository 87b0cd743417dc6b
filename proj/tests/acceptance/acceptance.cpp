// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "opengames/classical/extensive.hpp"
#include "opengames/classical/normal_form.hpp"
#include "opengames/classical/random.hpp"
#include "opengames/classical/sequential.hpp"
#include "opengames/dsl/document.hpp"
#include "opengames/dsl/report.hpp"
#include "opengames/game/decision.hpp"
#include "opengames/game/random.hpp"
#include "opengames/morphism/coherence.hpp"
#include "opengames/morphism/iso_search.hpp"
#include "opengames/morphism/states.hpp"
#include "opengames/solve/solve.hpp"
#include "opengames/solve/theorems.hpp"
#include "support/oracles.hpp"

using namespace og;
using dsl::Json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  Json report = Json::object();
  double seconds = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Json keys_json(const std::vector<Value>& vs) {
  Json out = Json::array();
  for (const auto& k : oracle::keys(vs)) out.push_back(k);
  return out;
}

Value fn1(const Value& v) { return Value::function({v}); }

// ---------------------------------------------------------------------------

Outcome market_entry_criterion() {
  Outcome o;
  dsl::Document doc = dsl::parse_document(read_file(std::string(OG_DATA_DIR) + "/market_entry.og"));
  const GameExpr& h = doc.games.at("H");
  TotalFn k = trivial_continuation(h.eval().dst());
  std::vector<Value> states = states_over(h, k);
  std::vector<Value> separable;
  for (const auto& s : separable_states_over(h, k)) separable.push_back(s.profile);

  // Profile shape of (quit × G) ⊙ D0, written out by hand.
  auto profile = [](std::size_t entry, const char* e, const char* i) {
    Value tensor = Value::pair(Value::pair(fn1(Value::atom(e)), fn1(Value::atom(i))), Value::unit());
    Value g = Value::pair(Value::pair(Value::unit(), tensor), Value::unit());
    return Value::pair(fn1(Value::tagged(entry, Value::unit())), Value::tuple({Value::unit(), g}));
  };
  std::vector<Value> want_states{profile(1, "A", "A"), profile(0, "A", "F"), profile(0, "F", "F")};
  std::vector<Value> want_sep{profile(1, "A", "A")};

  const OpenGame& quit = doc.games.at("quit").eval();
  const OpenGame& g = doc.games.at("G").eval();
  TotalFn kq = trivial_continuation(quit.dst());
  TotalFn kg = trivial_continuation(g.dst());
  auto g_states = states_over(g, kg);
  GameMorphism med = product_mediator(
      h.children()[1].eval(),
      {state_to_morphism(quit, {quit.strategies()[0], kq}), state_to_morphism(g, {g_states.at(0), kg})});
  Value u1 = med.s().update(Value::tagged(0, Value::unit()), Value::unit());
  Value u2 = med.s().update(Value::tagged(1, Value::unit()), Value::unit());
  bool med_ok = u1 == Value::vector({Rational(0)}) && u2 == Value::vector({Rational(3)}) &&
                check_morphism(med).valid;

  bool states_ok = oracle::keys(states) == oracle::keys(want_states);
  bool sep_ok = oracle::keys(separable) == oracle::keys(want_sep);
  o.pass = states_ok && sep_ok && med_ok;
  o.detail = std::to_string(states.size()) + " states, " + std::to_string(separable.size()) +
             " separable, mediator update " + u1.to_string() + "/" + u2.to_string();
  o.report = Json{{"states", keys_json(states)},
                  {"separable", keys_json(separable)},
                  {"mediator", Json::array({u1.to_string(), u2.to_string()})}};
  return o;
}

Outcome normal_form_criterion() {
  Outcome o;
  Rng rng(2);
  std::size_t agree = 0, total_eq = 0;
  Json sizes = Json::array();
  for (int t = 0; t < 200; ++t) {
    NormalFormGame g = random_normal_form(rng, 3, 3);
    auto got = oracle::keys(nash_normal_form(g));
    auto want = oracle::keys(oracle::nash(g));
    if (got == want) ++agree;
    else if (o.detail.empty()) o.detail = "first disagreement at game " + std::to_string(t) + "; ";
    total_eq += want.size();
    sizes.push_back(got.size());
  }
  o.pass = agree == 200;
  o.detail += std::to_string(agree) + "/200 agree, " + std::to_string(total_eq) + " equilibria";
  o.report = Json{{"agree", agree}, {"equilibria", sizes}};
  return o;
}

Outcome sequential_criterion() {
  Outcome o;
  Rng rng(3);
  std::size_t agree = 0;
  Json rows = Json::array();
  for (int t = 0; t < 100; ++t) {
    SequentialGame g = random_sequential(rng, 3, 2);
    SequentialSolution sol = spe_sequential(g);
    oracle::Sequential ref(g);
    auto nash_norm = oracle::keys(oracle::nash(normalize_sequential(g)));
    std::vector<Value> tree_spe;
    for (const auto& p : oracle_spe(to_extensive(g))) tree_spe.push_back(tree_to_sequential_profile(g, p));
    bool ok = oracle::keys(sol.nash) == nash_norm && oracle::keys(sol.nash) == oracle::keys(ref.nash()) &&
              oracle::keys(sol.spe) == oracle::keys(tree_spe) &&
              oracle::keys(sol.spe) == oracle::keys(ref.spe());
    if (ok) ++agree;
    else if (o.detail.empty()) o.detail = "first disagreement at game " + std::to_string(t) + "; ";
    rows.push_back(Json::array({sol.nash.size(), sol.spe.size()}));
  }
  o.pass = agree == 100;
  o.detail += std::to_string(agree) + "/100 agree";
  o.report = Json{{"agree", agree}, {"nash_spe_counts", rows}};
  return o;
}

Outcome lens_law_criterion() {
  Outcome o;
  LawTally exhaustive;
  exhaustive_lens_laws(2, exhaustive);
  LawTally randomized;
  Rng rng(4);
  for (int t = 0; t < 300; ++t) random_lens_laws(rng, 3, randomized);
  std::uint64_t triples = 0;
  for (const auto& e : exhaustive.entries())
    if (e.name == "lens.associativity") triples = e.passed + e.failed;
  o.pass = exhaustive.failures() == 0 && randomized.failures() == 0 && triples > 0;
  o.detail = std::to_string(triples) + " exhaustive triples, " +
             std::to_string(exhaustive.checks() + randomized.checks()) + " checks, " +
             std::to_string(exhaustive.failures() + randomized.failures()) + " failures";
  o.report = Json{{"exhaustive", dsl::tally_json(exhaustive)}, {"random", dsl::tally_json(randomized)}};
  return o;
}

Outcome coherence_criterion() {
  Outcome o;
  Rng rng(5);
  LawTally tally = coherence_trials(rng, 2, 100);
  std::uint64_t sampled = 0;
  for (const auto& e : tally.entries())
    if (e.name.size() > 8 && e.name.substr(e.name.size() - 8) == ".sampled") sampled += e.passed + e.failed;
  o.pass = tally.failures() == 0;
  o.detail = std::to_string(tally.checks()) + " checks, " + std::to_string(tally.failures()) +
             " failures (" + std::to_string(sampled) + " sampled-continuation cell checks)";
  if (!o.pass) o.detail += "; " + dsl::tally_witnesses(tally).dump();
  o.report = dsl::tally_json(tally);
  return o;
}

// A small game with a payoff target: a decision, a tensor of decisions or a
// random relation.
OpenGame small_game(Rng& rng, std::size_t t) {
  switch (t % 3) {
    case 0:
      return decision(random_set(rng, 1, 2, "h"), random_set(rng, 1, 3, "y"));
    case 1:
      return tensor_games(decision(unit_set(), random_set(rng, 1, 2, "a")),
                          decision(unit_set(), random_set(rng, 1, 2, "b")));
    default: {
      Diset src{random_set(rng, 1, 2, "h"), Carrier::finite(unit_set())};
      return random_game(rng, src, random_diset(rng, 2, 1), "R");
    }
  }
}

TotalFn random_continuation(Rng& rng, const Diset& psi) {
  return TotalFn::tabulate(psi.forward, psi.backward, [&](const Value&) {
    std::vector<Rational> q = rng.rationals(payoff_width(psi.backward));
    return shape_payoff(q, psi.backward);
  });
}

Outcome states_hom_criterion() {
  Outcome o;
  Rng rng(6);
  std::size_t round_trips = 0, failures = 0;
  Json counts = Json::array();
  for (std::size_t t = 0; t < 50; ++t) {
    OpenGame g = small_game(rng, t);
    std::vector<TotalFn> ks;
    std::size_t n = rng.between(1, 8);
    for (std::size_t i = 0; i < n; ++i) ks.push_back(random_continuation(rng, g.dst()));
    std::size_t here = 0;
    for (const auto& k : ks) {
      for (const auto& s : oracle::states(g, k)) {
        StateCert cert{s, k};
        GameMorphism m = state_to_morphism(g, cert);
        bool ok = morphism_to_state(m) == cert && check_morphism(m, ks).valid;
        ok = ok && state_to_morphism(g, morphism_to_state(m)).sigma_map().as_value() == m.sigma_map().as_value();
        if (!ok) ++failures;
        ++round_trips;
        ++here;
      }
    }
    counts.push_back(here);
  }
  o.pass = failures == 0 && round_trips > 0;
  o.detail = std::to_string(round_trips) + " states round-tripped, " + std::to_string(failures) + " failures";
  o.report = Json{{"round_trips", counts}, {"failures", failures}};
  return o;
}

Outcome product_criterion() {
  Outcome o;
  Rng rng(7);
  std::size_t agree = 0;
  Json counts = Json::array();
  for (int t = 0; t < 20; ++t) {
    std::size_t n = rng.between(1, 3);
    std::vector<OpenGame> family;
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.coin()) {
        family.push_back(decision(random_set(rng, 1, 2, "h"), random_set(rng, 1, 3, "y")));
      } else {
        Diset src{random_set(rng, 1, 2, "h"), Carrier::finite(unit_set())};
        family.push_back(random_game(rng, src, payoff_diset(random_set(rng, 1, 2, "y"), 1), "R"));
      }
    }
    OpenGame prod = product_games(family);
    TotalFn k = random_continuation(rng, prod.dst());
    std::vector<std::vector<Value>> factor_states;
    for (std::size_t j = 0; j < n; ++j)
      factor_states.push_back(oracle::states(family[j], restrict_continuation(k, j, family[j].dst())));
    std::vector<Value> tuples;
    std::vector<std::size_t> radix;
    for (const auto& fs : factor_states) radix.push_back(fs.size());
    oracle::for_each_index(radix, [&](const std::vector<std::size_t>& d) {
      std::vector<Value> parts;
      for (std::size_t j = 0; j < n; ++j) parts.push_back(factor_states[j][d[j]]);
      tuples.push_back(Value::tuple(parts));
    });
    auto got = states_over(prod, k);
    if (oracle::keys(got) == oracle::keys(tuples) && got.size() == tuples.size()) ++agree;
    counts.push_back(got.size());
  }
  o.pass = agree == 20;
  o.detail = std::to_string(agree) + "/20 families agree";
  o.report = Json{{"agree", agree}, {"states", counts}};
  return o;
}

Outcome copy_decision_criterion() {
  Outcome o;
  FiniteSet bits = FiniteSet::of_atoms({"0", "1"});
  OpenGame direct = copy_decision({bits, bits});
  OpenGame composite = copy_decision_composite({bits, bits});
  Rng rng(8);
  std::vector<TotalFn> ks;
  for (int i = 0; i < 16; ++i) ks.push_back(random_continuation(rng, direct.dst()));
  auto iso = find_globular_iso(direct, composite, ks);
  bool verified = iso && iso->forward.is_globular() && iso->backward.is_globular() &&
                  check_morphism(iso->forward, ks).valid && check_morphism(iso->backward, ks).valid &&
                  morphism_equal(vcompose(iso->backward, iso->forward), identity_morphism(direct)) &&
                  morphism_equal(vcompose(iso->forward, iso->backward), identity_morphism(composite));
  o.pass = verified;
  o.detail = iso ? "isomorphism on " + std::to_string(direct.strategies().size()) + " strategies" +
                       (verified ? " verified" : " failed verification")
                 : "no isomorphism found";
  o.report = iso ? dsl::function_json(iso->forward.sigma_map()) : Json(nullptr);
  return o;
}

}  // namespace

int main() {
  using Criterion = std::function<Outcome()>;
  std::vector<std::pair<std::string, Criterion>> criteria{
      {"market entry reproduction", market_entry_criterion},
      {"normal-form equilibria", normal_form_criterion},
      {"sequential equilibria", sequential_criterion},
      {"lens category laws", lens_law_criterion},
      {"double-category coherence", coherence_criterion},
      {"states and 2-cells from the unit", states_hom_criterion},
      {"product states", product_criterion},
      {"copy-decision agreement", copy_decision_criterion},
  };
  const double limits[] = {1, 30, 60, 0, 0, 0, 0, 0};

  auto run = [](const Criterion& c) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return o;
  };

  bool all = true;
  std::vector<std::string> first;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o = run(criteria[i].second);
    if (limits[i] > 0 && o.seconds >= limits[i]) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    first.push_back(o.report.dump());
    std::printf("criterion %zu %s: %s (%s, %.2f s)\n", i + 1, o.pass ? "PASS" : "FAIL",
                criteria[i].first.c_str(), o.detail.c_str(), o.seconds);
    std::fflush(stdout);
    all = all && o.pass;
  }

  std::size_t same = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i)
    if (run(criteria[i].second).report.dump() == first[i]) ++same;
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool det = same == criteria.size();
  std::printf("criterion 9 %s: determinism (%zu/%zu reports byte-identical on rerun, %.2f s)\n",
              det ? "PASS" : "FAIL", same, criteria.size(), seconds);
  all = all && det;
  return all ? 0 : 1;
}
