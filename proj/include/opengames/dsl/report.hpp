#ifndef OPENGAMES_DSL_REPORT_HPP_
#define OPENGAMES_DSL_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "opengames/core/bounds.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/core/value.hpp"
#include "opengames/morphism/coherence.hpp"
#include "opengames/solve/solve.hpp"
#include "opengames/version.hpp"

namespace og::dsl {

using Json = nlohmann::ordered_json;

// Atoms are strings, tuples arrays, tagged values {"in": n, "value": v},
// functions {"fn": [images]} and payoff vectors arrays of rational strings.
inline Json value_json(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::kAtom:
      return v.name();
    case Value::Kind::kTagged:
      return Json{{"in", v.tag() + 1}, {"value", value_json(v.inner())}};
    case Value::Kind::kTuple: {
      Json out = Json::array();
      for (const auto& e : v.elements()) out.push_back(value_json(e));
      return out;
    }
    case Value::Kind::kFunction: {
      Json images = Json::array();
      for (const auto& e : v.elements()) images.push_back(value_json(e));
      return Json{{"fn", std::move(images)}};
    }
    case Value::Kind::kVector: {
      Json out = Json::array();
      for (const auto& q : v.coords()) out.push_back(q.to_string());
      return out;
    }
  }
  return nullptr;
}

// A finite function as its graph.
inline Json function_json(const TotalFn& f) {
  Json out = Json::array();
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    out.push_back(Json::array({value_json(f.domain()[i]), value_json(f.table()[i])}));
  return out;
}

inline Json certificate_json(const Certificate& c) {
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(certificate_json(p));
  return Json{{"node", c.node},
              {"profile", value_json(c.profile)},
              {"continuation", function_json(c.continuation)},
              {"parts", std::move(parts)}};
}

inline Json tally_json(const LawTally& tally) {
  Json laws = Json::array();
  for (const auto& e : tally.entries())
    laws.push_back(Json{{"law", e.name}, {"passed", e.passed}, {"failed", e.failed}});
  return laws;
}

inline Json tally_witnesses(const LawTally& tally) {
  Json out = Json::array();
  for (const auto& e : tally.entries())
    for (const auto& w : e.witnesses) out.push_back(Json{{"law", e.name}, {"detail", w}});
  return out;
}

struct Report {
  std::string command;
  std::optional<std::string> input;
  std::uint64_t seed = 0;
  Bounds bounds;
  Json results = Json::object();
  Json witnesses = Json::array();
  std::optional<double> elapsed_ms;

  Json to_json() const {
    Json out;
    out["command"] = command;
    out["version"] = kVersion;
    out["input"] = input ? Json(*input) : Json(nullptr);
    out["seed"] = seed;
    out["bounds"] = Json{{"max_table", bounds.max_table}};
    out["results"] = results;
    out["witnesses"] = witnesses;
    out["elapsed_ms"] = elapsed_ms ? Json(*elapsed_ms) : Json(nullptr);
    return out;
  }

  std::string dump() const { return to_json().dump(2) + "\n"; }
};

// Human-readable profiles: unit strategies are dropped, functions out of a
// one-point set are replaced by their value and declared labels are applied.
class ProfileText {
 public:
  explicit ProfileText(std::vector<std::pair<Value, std::string>> labels = {})
      : labels_(std::move(labels)) {}

  std::string operator()(const Value& profile) const {
    std::vector<std::string> leaves;
    collect(profile, leaves);
    if (leaves.size() == 1) return leaves[0];
    std::string out = "(";
    for (std::size_t i = 0; i < leaves.size(); ++i) out += (i ? ", " : "") + leaves[i];
    return out + ")";
  }

  std::string show(const Value& v) const {
    for (const auto& [value, name] : labels_)
      if (value == v) return name;
    switch (v.kind()) {
      case Value::Kind::kTagged:
        return "in" + std::to_string(v.tag() + 1) + "(" + show(v.inner()) + ")";
      case Value::Kind::kTuple:
      case Value::Kind::kFunction: {
        std::string out = v.is_tuple() ? "(" : "fn(";
        for (std::size_t i = 0; i < v.elements().size(); ++i)
          out += (i ? ", " : "") + show(v.elements()[i]);
        return out + ")";
      }
      default:
        return v.to_string();
    }
  }

 private:
  void collect(const Value& v, std::vector<std::string>& out) const {
    if (v.is_unit()) return;
    if (v.is_tuple()) {
      for (const auto& e : v.elements()) collect(e, out);
      return;
    }
    if (v.is_function() && v.elements().size() == 1) {
      out.push_back(show(v.elements()[0]));
      return;
    }
    out.push_back(show(v));
  }

  std::vector<std::pair<Value, std::string>> labels_;
};

}  // namespace og::dsl

#endif  // OPENGAMES_DSL_REPORT_HPP_
