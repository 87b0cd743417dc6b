#ifndef OPENGAMES_DSL_CLI_HPP_
#define OPENGAMES_DSL_CLI_HPP_

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opengames/classical/extensive.hpp"
#include "opengames/classical/normal_form.hpp"
#include "opengames/classical/sequential.hpp"
#include "opengames/dsl/document.hpp"
#include "opengames/dsl/report.hpp"
#include "opengames/game/payoff_shape.hpp"
#include "opengames/game/random.hpp"
#include "opengames/morphism/coherence.hpp"
#include "opengames/solve/market_entry.hpp"
#include "opengames/solve/solve.hpp"
#include "opengames/solve/theorems.hpp"

namespace og::dsl {

// Bad flags, unreadable input or names that do not resolve.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct CliOptions {
  std::string input;
  std::string mode = "states";
  std::string continuation = "trivial";
  std::string game;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t max_table = Bounds{}.max_table;
  std::uint64_t trials = 100;
  std::size_t size = 2;
  bool timing = false;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
  std::stringstream ss;
  if (path == "-") {
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  ss << f.rdbuf();
  return ss.str();
}

inline Json profile_entries(const std::vector<Value>& profiles, const ProfileText& text) {
  Json out = Json::array();
  for (const auto& p : profiles)
    out.push_back(Json{{"profile", value_json(p)}, {"display", text(p)}});
  return out;
}

inline std::string profiles_text(const Json& entries) {
  std::string out = std::to_string(entries.size()) +
                    (entries.size() == 1 ? " profile\n" : " profiles\n");
  for (const auto& e : entries) out += e["display"].get<std::string>() + "\n";
  return out;
}

inline const Declaration& solve_target(const Document& doc, const CliOptions& o, bool classical) {
  if (!o.game.empty()) {
    const Declaration* d = doc.find(o.game);
    if (!d) throw UsageError("no declaration named '" + o.game + "'");
    return *d;
  }
  const Declaration* d = classical ? doc.last_of({"normal-form", "sequential", "extensive"})
                                   : doc.last_of({"expr"});
  if (!d && !classical) d = doc.last_of({"game"});
  if (!d) throw UsageError(std::string("the document declares no ") +
                           (classical ? "classical game" : "game"));
  return *d;
}

inline TotalFn resolve_continuation(const Document& doc, const std::string& name,
                                    const OpenGame& g) {
  if (name == "trivial") return trivial_continuation(g.dst());
  auto it = doc.continuations.find(name);
  if (it == doc.continuations.end()) throw UsageError("no continuation named '" + name + "'");
  return continuation_from_payoff(doc.payoffs.at(it->second).table, g.dst());
}

inline void solve_open(const Document& doc, const CliOptions& o, const Bounds& bounds,
                       Report& report, std::string& text) {
  const Declaration& d = solve_target(doc, o, false);
  auto it = doc.games.find(d.name);
  if (it == doc.games.end())
    throw UsageError("mode " + o.mode + " needs an open game; '" + d.name + "' is a " + d.keyword);
  const GameExpr& e = it->second;
  TotalFn k = resolve_continuation(doc, o.continuation, e.eval());
  ProfileText show(doc.labels);
  std::vector<Value> profiles;
  if (o.mode == "states") {
    profiles = states_over(e, k, bounds);
  } else {
    for (const auto& s : separable_states_over(e, k, bounds)) {
      profiles.push_back(s.profile);
      report.witnesses.push_back(certificate_json(s.certificate));
    }
  }
  Json entries = profile_entries(profiles, show);
  report.results = Json{{"game", d.name},
                        {"mode", o.mode},
                        {"continuation", o.continuation},
                        {"count", profiles.size()},
                        {"profiles", entries}};
  text = d.name + " (" + o.mode + ", continuation " + o.continuation + ")\n" + profiles_text(entries);
}

inline void solve_classical(const Document& doc, const CliOptions& o, const Bounds& bounds,
                            Report& report, std::string& text) {
  const Declaration& d = solve_target(doc, o, true);
  std::vector<Value> profiles;
  if (auto nf = doc.normal_forms.find(d.name); nf != doc.normal_forms.end()) {
    profiles = nash_normal_form(nf->second, bounds);
  } else if (auto sq = doc.sequentials.find(d.name); sq != doc.sequentials.end()) {
    auto sol = spe_sequential(sq->second, false, bounds);
    profiles = o.mode == "nash" ? sol.nash : sol.spe;
  } else if (auto ex = doc.extensives.find(d.name); ex != doc.extensives.end()) {
    profiles = o.mode == "nash" ? brute_nash(normalize_extensive(ex->second, 0, bounds), bounds)
                                : oracle_spe(ex->second, bounds);
  } else {
    throw UsageError("mode " + o.mode + " needs a classical game; '" + d.name + "' is a " +
                     d.keyword);
  }
  Json entries = profile_entries(profiles, ProfileText(doc.labels));
  report.results = Json{{"game", d.name},
                        {"mode", o.mode},
                        {"kind", d.keyword},
                        {"count", profiles.size()},
                        {"profiles", entries}};
  text = d.name + " (" + o.mode + ")\n" + profiles_text(entries);
}

inline void run_laws(const CliOptions& o, const Bounds& bounds, Report& report, std::string& text) {
  Rng rng(o.seed);
  LawTally tally;
  for (std::uint64_t t = 0; t < o.trials; ++t) random_lens_laws(rng, o.size, tally, bounds);
  tally.merge(coherence_trials(rng, o.size, o.trials, bounds));
  report.results = Json{{"size", o.size},
                        {"trials", o.trials},
                        {"checks", tally.checks()},
                        {"failures", tally.failures()},
                        {"laws", tally_json(tally)}};
  report.witnesses = tally_witnesses(tally);
  for (const auto& e : tally.entries())
    text += e.name + ": " + std::to_string(e.passed) + " passed, " + std::to_string(e.failed) +
            " failed\n";
  text += std::to_string(tally.checks()) + " checks, " + std::to_string(tally.failures()) +
          " failures\n";
}

inline void run_example(const Bounds& bounds, Report& report, std::string& text) {
  MarketEntry me = market_entry();
  ProfileText show({{Value::tagged(0, Value::unit()), "Q"}, {Value::tagged(1, Value::unit()), "C"}});
  TotalFn k = trivial_continuation(me.h.eval().dst());
  SolutionReport sol = solve(me.h, k, bounds);
  std::vector<Value> separable;
  for (const auto& s : sol.separable) {
    separable.push_back(s.profile);
    report.witnesses.push_back(certificate_json(s.certificate));
  }
  GameMorphism med = market_entry_mediator(me);
  MorphismCheck check = check_morphism(med, {}, bounds);
  Json mediator = Json::array();
  std::string med_text;
  for (const auto& h : med.s().dom().forward) {
    Value u = med.s().update(h, Value::unit());
    mediator.push_back(Json{{"history", show.show(h)}, {"update", value_json(u)}});
    med_text += "  " + show.show(h) + " -> " + u.coords().at(0).to_string() + "\n";
  }
  ExtensiveGame tree = market_entry_tree();
  Json tree_nash = profile_entries(brute_nash(normalize_extensive(tree, 0, bounds), bounds), show);
  Json tree_spe = profile_entries(oracle_spe(tree, bounds), show);
  Json states = profile_entries(sol.states, show);
  Json sep = profile_entries(separable, show);
  report.results = Json{{"states", states},
                        {"separable", sep},
                        {"mediator", Json{{"source_update", mediator}, {"valid", check.valid}}},
                        {"tree", Json{{"nash", tree_nash}, {"spe", tree_spe}}}};
  text = "states: " + profiles_text(states) + "separable: " + profiles_text(sep) +
         "mediator source update (" + (check.valid ? "valid" : "invalid") + "):\n" + med_text +
         "tree nash: " + profiles_text(tree_nash) + "tree spe: " + profiles_text(tree_spe);
}

}  // namespace detail

// Runs the `og` command line. Reports go to `out`, diagnostics to `err`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                   std::istream& in = std::cin) {
  CliOptions o;
  CLI::App app{"Compositional game solver", "og"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-table", o.max_table, "Enumeration bound");
    sub->add_flag("--timing", o.timing, "Record elapsed_ms in the report");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a game from a description");
  solve_cmd->add_option("--input", o.input, "Description file, or - for stdin")->required();
  solve_cmd->add_option("--mode", o.mode, "Solution concept")
      ->check(CLI::IsMember({"states", "separable", "nash", "spe"}));
  solve_cmd->add_option("--continuation", o.continuation, "Continuation name or trivial");
  solve_cmd->add_option("--game", o.game, "Declaration to solve (default: the last one)");
  solve_cmd->add_option("--seed", o.seed, "Seed echoed in the report");
  solve_cmd->add_option("--trials", o.trials, "Unused by solve");
  add_common(solve_cmd);

  CLI::App* laws_cmd = app.add_subcommand("laws", "Check lens and game laws on random instances");
  laws_cmd->add_option("--seed", o.seed, "Random seed");
  laws_cmd->add_option("--size", o.size, "Largest carrier size")->check(CLI::Range(1, 3));
  laws_cmd->add_option("--trials", o.trials, "Number of random trials per suite");
  add_common(laws_cmd);

  CLI::App* example_cmd = app.add_subcommand("example", "Solve the built-in market entry game");
  add_common(example_cmd);

  CLI::App* print_cmd = app.add_subcommand("print", "Check and pretty-print a description");
  print_cmd->add_option("--input", o.input, "Description file, or - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "og: " << e.what() << "\n\n";
    const CLI::App* sub = nullptr;
    for (auto* s : {solve_cmd, laws_cmd, example_cmd, print_cmd})
      if (s->parsed()) sub = s;
    err << (sub ? sub->help() : app.help());
    return 2;
  }

  Report report;
  for (int i = 1; i < argc; ++i) report.command += (i > 1 ? " " : "") + std::string(argv[i]);
  report.seed = o.seed;
  report.bounds.max_table = o.max_table;
  if (!o.input.empty()) report.input = o.input;
  std::string text;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (print_cmd->parsed()) {
      out << print_document(parse_document(detail::read_input(o.input, in)));
      return 0;
    }
    if (solve_cmd->parsed()) {
      Document doc = parse_document(detail::read_input(o.input, in));
      if (o.mode == "states" || o.mode == "separable")
        detail::solve_open(doc, o, report.bounds, report, text);
      else
        detail::solve_classical(doc, o, report.bounds, report, text);
    } else if (laws_cmd->parsed()) {
      detail::run_laws(o, report.bounds, report, text);
    } else {
      detail::run_example(report.bounds, report, text);
    }
  } catch (const SourceError& e) {
    err << (o.input == "-" ? "<stdin>" : o.input) << ":" << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "og: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "og: " << e.what() << "\n";
    return 1;
  }
  if (o.timing)
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                  start).count();
  if (o.format == "text")
    out << text;
  else
    out << report.dump();
  if (laws_cmd->parsed() && report.results["failures"].get<std::uint64_t>() > 0) return 1;
  return 0;
}

}  // namespace og::dsl

#endif  // OPENGAMES_DSL_CLI_HPP_
