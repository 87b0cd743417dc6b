#ifndef OPENGAMES_DSL_DOCUMENT_HPP_
#define OPENGAMES_DSL_DOCUMENT_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opengames/classical/extensive.hpp"
#include "opengames/classical/normal_form.hpp"
#include "opengames/classical/sequential.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/rational.hpp"
#include "opengames/core/total_fn.hpp"
#include "opengames/dsl/sexpr.hpp"
#include "opengames/game/decision.hpp"
#include "opengames/game/operators.hpp"
#include "opengames/lens/structure.hpp"
#include "opengames/solve/expr.hpp"

namespace og::dsl {

struct PayoffTable {
  std::vector<FiniteSet> sets;
  TotalFn table;
};

struct Declaration {
  std::string keyword;
  std::string name;
  SExpr form;
};

// A parsed and checked game description.
struct Document {
  std::vector<Declaration> declarations;
  std::map<std::string, FiniteSet> sets;
  std::map<std::string, PayoffTable> payoffs;
  std::map<std::string, GameExpr> games;  // atoms and expressions
  std::map<std::string, std::string> continuations;  // name -> payoff
  std::map<std::string, NormalFormGame> normal_forms;
  std::map<std::string, SequentialGame> sequentials;
  std::map<std::string, ExtensiveGame> extensives;
  std::vector<std::pair<Value, std::string>> labels;

  const Declaration* find(const std::string& name) const {
    for (const auto& d : declarations)
      if (d.name == name) return &d;
    return nullptr;
  }

  // Last declaration whose keyword is one of `keywords`.
  const Declaration* last_of(std::initializer_list<std::string_view> keywords) const {
    for (auto it = declarations.rbegin(); it != declarations.rend(); ++it)
      for (auto k : keywords)
        if (it->keyword == k) return &*it;
    return nullptr;
  }

  std::optional<std::string> label_of(const Value& v) const {
    for (const auto& [value, name] : labels)
      if (value == v) return name;
    return std::nullopt;
  }

  friend bool operator==(const Document& a, const Document& b) {
    if (a.declarations.size() != b.declarations.size()) return false;
    for (std::size_t i = 0; i < a.declarations.size(); ++i) {
      const auto& x = a.declarations[i];
      const auto& y = b.declarations[i];
      if (x.keyword != y.keyword || x.name != y.name || !(x.form == y.form)) return false;
    }
    return true;
  }
};

namespace detail {

class Builder {
 public:
  Document build(std::vector<SExpr> forms) {
    for (auto& f : forms) declare(f);
    return std::move(doc_);
  }

 private:
  [[noreturn]] static void type_error(const SExpr& at, const std::string& message) {
    throw TypeError(message, at.span);
  }

  static void expect_list(const SExpr& e, const std::string& what, std::size_t min_items) {
    if (!e.is_list) throw ParseError("expected " + what, e.span, {"'('"});
    if (e.items.size() < min_items) throw ParseError("incomplete " + what, e.span);
  }

  static const std::string& symbol(const SExpr& e, const std::string& what) {
    if (e.is_list) throw ParseError("expected " + what, e.span, {what});
    return e.atom;
  }

  static std::size_t natural(const SExpr& e, const std::string& what) {
    const std::string& s = symbol(e, what);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("expected " + what, e.span, {"a natural number"});
    return static_cast<std::size_t>(std::stoull(s));
  }

  static Rational rational(const SExpr& e) {
    const std::string& s = symbol(e, "a rational");
    if (!Rational::looks_like(s)) throw ParseError("malformed rational '" + s + "'", e.span, {"p or p/q"});
    try {
      return Rational::parse(s);
    } catch (const Error& err) {
      throw ParseError(err.what(), e.span);
    }
  }

  void define(const std::string& keyword, const std::string& name, const SExpr& form) {
    if (doc_.find(name)) throw NameError("'" + name + "' is already declared", form.items[1].span);
    doc_.declarations.push_back({keyword, name, form});
  }

  void declare(const SExpr& f) {
    expect_list(f, "a declaration", 1);
    const std::string& keyword = symbol(f.items[0], "a declaration keyword");
    static const std::vector<std::string> keywords{
        "set", "payoff", "game", "expr", "continuation", "normal-form", "sequential", "extensive", "label"};
    if (keyword == "label") {
      if (f.items.size() != 3) throw ParseError("label takes a value and a name", f.span);
      doc_.labels.emplace_back(value(f.items[1]), symbol(f.items[2], "a label"));
      doc_.declarations.push_back({keyword, "", f});
      return;
    }
    if (std::find(keywords.begin(), keywords.end(), keyword) == keywords.end())
      throw ParseError("unknown declaration '" + keyword + "'", f.items[0].span,
                       {"set", "payoff", "game", "expr", "continuation", "normal-form",
                        "sequential", "extensive", "label"});
    if (f.items.size() < 3) throw ParseError("incomplete " + keyword + " declaration", f.span);
    const std::string& name = symbol(f.items[1], "a name");
    if (keyword == "set") {
      if (f.items.size() != 3) throw ParseError("set takes a name and a set", f.span);
      FiniteSet s = set(f.items[2]);
      define(keyword, name, f);
      doc_.sets.emplace(name, s);
    } else if (keyword == "payoff") {
      PayoffTable p = payoff(f);
      define(keyword, name, f);
      doc_.payoffs.emplace(name, std::move(p));
    } else if (keyword == "game") {
      if (f.items.size() != 3) throw ParseError("game takes a name and a definition", f.span);
      GameExpr g = GameExpr::atom(game(f.items[2]), f.items[2].items.empty() ? "" : f.items[2].items[0].atom, name);
      define(keyword, name, f);
      doc_.games.emplace(name, g);
    } else if (keyword == "expr") {
      if (f.items.size() != 3) throw ParseError("expr takes a name and an expression", f.span);
      GameExpr e = expr(f.items[2]);
      define(keyword, name, f);
      doc_.games.emplace(name, e);
    } else if (keyword == "continuation") {
      if (f.items.size() != 3) throw ParseError("continuation takes a name and a payoff", f.span);
      const std::string& p = symbol(f.items[2], "a payoff name");
      if (!doc_.payoffs.count(p)) throw NameError("undeclared payoff '" + p + "'", f.items[2].span);
      define(keyword, name, f);
      doc_.continuations.emplace(name, p);
    } else if (keyword == "normal-form" || keyword == "sequential") {
      if (f.items.size() != 4)
        throw ParseError(keyword + " takes a name, a list of sets and a payoff", f.span);
      expect_list(f.items[2], "a list of choice sets", 1);
      std::vector<FiniteSet> sets;
      for (const auto& s : f.items[2].items) sets.push_back(set(s));
      const PayoffTable& p = payoff_ref(f.items[3]);
      if (!(p.table.domain() == tuple_set(sets)) || p.table.codomain().dimension() != sets.size())
        type_error(f.items[3], "payoff does not match the choice sets");
      define(keyword, name, f);
      try {
        if (keyword == "normal-form")
          doc_.normal_forms.emplace(name, NormalFormGame(sets, p.table));
        else
          doc_.sequentials.emplace(name, SequentialGame(sets, p.table));
      } catch (const Error& e) {
        type_error(f, e.what());
      }
    } else if (keyword == "extensive") {
      ExtensiveGame t = extensive(f);
      define(keyword, name, f);
      doc_.extensives.emplace(name, std::move(t));
    }
  }

  // VALUE := * | SYMBOL | (inN VALUE) | (VALUE ...)
  Value value(const SExpr& e) const {
    if (!e.is_list) return e.atom == "*" ? Value::unit() : Value::atom(e.atom);
    if (e.items.size() == 2 && e.items[0].is_atom() && e.items[0].atom.size() > 2 &&
        e.items[0].atom.rfind("in", 0) == 0 &&
        e.items[0].atom.find_first_not_of("0123456789", 2) == std::string::npos) {
      std::size_t tag = std::stoull(e.items[0].atom.substr(2));
      if (tag == 0) throw ParseError("injections are numbered from in1", e.items[0].span);
      return Value::tagged(tag - 1, value(e.items[1]));
    }
    std::vector<Value> parts;
    for (const auto& i : e.items) parts.push_back(value(i));
    return Value::tuple(std::move(parts));
  }

  // SET := 1 | NAME | (sum SET ...) | (prod SET ...) | (VALUE ...)
  FiniteSet set(const SExpr& e) const {
    if (!e.is_list) {
      if (e.atom == "1") return unit_set();
      auto it = doc_.sets.find(e.atom);
      if (it == doc_.sets.end()) throw NameError("undeclared set '" + e.atom + "'", e.span);
      return it->second;
    }
    if (e.head_is("sum") || e.head_is("prod")) {
      std::vector<FiniteSet> parts;
      for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(set(e.items[i]));
      if (e.head_is("sum")) return coproduct_set(parts);
      return tuple_set(parts);
    }
    std::vector<Value> elements;
    for (const auto& i : e.items) elements.push_back(value(i));
    try {
      return FiniteSet::make(std::move(elements));
    } catch (const DuplicateElement& err) {
      type_error(e, err.what());
    }
  }

  // CARRIER := (real D) | SET
  Carrier carrier(const SExpr& e) const {
    if (e.head_is("real")) {
      if (e.items.size() != 2) throw ParseError("real takes a dimension", e.span);
      std::size_t d = natural(e.items[1], "a dimension");
      if (d == 0) type_error(e, "payoff dimension must be positive");
      return Carrier::payoff(d);
    }
    return Carrier::finite(set(e));
  }

  // DISET := I | (diset SET CARRIER) | (tensor DISET DISET)
  Diset diset(const SExpr& e) const {
    if (e.is("I")) return unit_diset();
    if (e.head_is("diset")) {
      if (e.items.size() != 3) throw ParseError("diset takes a set and a carrier", e.span);
      return {set(e.items[1]), carrier(e.items[2])};
    }
    if (e.head_is("tensor")) {
      if (e.items.size() != 3) throw ParseError("tensor takes two disets", e.span);
      return tensor(diset(e.items[1]), diset(e.items[2]));
    }
    throw ParseError("expected a diset", e.span, {"I", "(diset ...)", "(tensor ...)"});
  }

  // LENS := (identity D) | (lunit D) | (lunit-inv D) | (runit D) | (runit-inv D)
  //       | (assoc D D D) | (assoc-inv D D D) | (swap D D) | (counit SET)
  //       | (then LENS ...) | (tensor LENS LENS)
  Lens lens(const SExpr& e) const {
    expect_list(e, "a lens", 1);
    const std::string& head = symbol(e.items[0], "a lens constructor");
    auto arity = [&](std::size_t n) {
      if (e.items.size() != n + 1)
        throw ParseError(head + " takes " + std::to_string(n) + " argument(s)", e.span);
    };
    try {
      if (head == "identity") return arity(1), lens_identity(diset(e.items[1]));
      if (head == "lunit") return arity(1), lunit_lens(diset(e.items[1]));
      if (head == "lunit-inv") return arity(1), lunit_inv_lens(diset(e.items[1]));
      if (head == "runit") return arity(1), runit_lens(diset(e.items[1]));
      if (head == "runit-inv") return arity(1), runit_inv_lens(diset(e.items[1]));
      if (head == "assoc")
        return arity(3), assoc_lens(diset(e.items[1]), diset(e.items[2]), diset(e.items[3]));
      if (head == "assoc-inv")
        return arity(3), assoc_inv_lens(diset(e.items[1]), diset(e.items[2]), diset(e.items[3]));
      if (head == "swap") return arity(2), swap_lens(diset(e.items[1]), diset(e.items[2]));
      if (head == "counit") return arity(1), counit_lens(set(e.items[1]));
      if (head == "tensor") return arity(2), lens_tensor(lens(e.items[1]), lens(e.items[2]));
      if (head == "then") {
        if (e.items.size() < 2) throw ParseError("then takes at least one lens", e.span);
        Lens out = lens(e.items[1]);
        for (std::size_t i = 2; i < e.items.size(); ++i) out = lens_compose(lens(e.items[i]), out);
        return out;
      }
    } catch (const TypeMismatch& err) {
      type_error(e, err.what());
    }
    throw ParseError("unknown lens '" + head + "'", e.items[0].span,
                     {"identity", "lunit", "lunit-inv", "runit", "runit-inv", "assoc",
                      "assoc-inv", "swap", "counit", "then", "tensor"});
  }

  const PayoffTable& payoff_ref(const SExpr& e) const {
    const std::string& name = symbol(e, "a payoff name");
    auto it = doc_.payoffs.find(name);
    if (it == doc_.payoffs.end()) throw NameError("undeclared payoff '" + name + "'", e.span);
    return it->second;
  }

  // (payoff NAME ((S ...) -> (real D)) (((v ...) (q ...)) ...))
  PayoffTable payoff(const SExpr& f) const {
    if (f.items.size() != 4) throw ParseError("payoff takes a name, a signature and a table", f.span);
    const SExpr& sig = f.items[2];
    expect_list(sig, "a signature ((S ...) -> (real D))", 3);
    if (sig.items.size() != 3 || !sig.items[1].is("->"))
      throw ParseError("malformed signature", sig.span, {"((S ...) -> (real D))"});
    if (!sig.items[0].is_list) throw ParseError("expected a list of sets", sig.items[0].span, {"'('"});
    std::vector<FiniteSet> sets;
    for (const auto& s : sig.items[0].items) sets.push_back(set(s));
    Carrier c = carrier(sig.items[2]);
    if (c.kind() != Carrier::Kind::kPayoff) type_error(sig.items[2], "payoffs must be real vectors");
    const std::size_t d = c.dimension();
    FiniteSet domain = tuple_set(sets);
    std::vector<std::optional<Value>> table(domain.size());
    expect_list(f.items[3], "a payoff table", 0);
    for (const auto& entry : f.items[3].items) {
      expect_list(entry, "an entry ((v ...) (q ...))", 2);
      if (entry.items.size() != 2) throw ParseError("an entry is a key and a payoff", entry.span);
      const SExpr& key = entry.items[0];
      const SExpr& q = entry.items[1];
      expect_list(key, "a key (v ...)", 0);
      expect_list(q, "a payoff (q ...)", 0);
      if (key.items.size() != sets.size())
        type_error(key, "key has " + std::to_string(key.items.size()) + " components, expected " +
                            std::to_string(sets.size()));
      std::vector<Value> parts;
      for (std::size_t i = 0; i < sets.size(); ++i) {
        Value v = value(key.items[i]);
        if (!sets[i].contains(v)) type_error(key.items[i], v.to_string() + " is not in " + sets[i].to_string());
        parts.push_back(v);
      }
      if (q.items.size() != d) type_error(q, "expected " + std::to_string(d) + " payoff coordinates");
      std::vector<Rational> coords;
      for (const auto& r : q.items) coords.push_back(rational(r));
      std::size_t i = domain.index_of(Value::tuple(parts));
      if (table[i]) type_error(key, "duplicate entry for " + Value::tuple(parts).to_string());
      table[i] = Value::vector(std::move(coords));
    }
    std::vector<Value> images;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!table[i]) type_error(f.items[3], "missing entry for " + domain[i].to_string());
      images.push_back(*table[i]);
    }
    return {sets, TotalFn(domain, c, std::move(images))};
  }

  // (decision X Y) | (copy-decision X ...) | (unit DISET) | (utility PAYOFF [(export i ...)])
  // | (trivial-lens LENS)
  OpenGame game(const SExpr& e) const {
    expect_list(e, "a game", 1);
    const std::string& head = symbol(e.items[0], "a game constructor");
    try {
      if (head == "decision") {
        if (e.items.size() != 3) throw ParseError("decision takes two sets", e.span);
        return decision(set(e.items[1]), set(e.items[2]));
      }
      if (head == "copy-decision") {
        if (e.items.size() < 2) throw ParseError("copy-decision takes at least one set", e.span);
        std::vector<FiniteSet> xs;
        for (std::size_t i = 1; i < e.items.size(); ++i) xs.push_back(set(e.items[i]));
        return copy_decision(xs);
      }
      if (head == "unit") {
        if (e.items.size() != 2) throw ParseError("unit takes a diset", e.span);
        return unit_game(diset(e.items[1]));
      }
      if (head == "utility") {
        if (e.items.size() != 2 && e.items.size() != 3)
          throw ParseError("utility takes a payoff and an optional export list", e.span);
        const PayoffTable& p = payoff_ref(e.items[1]);
        std::vector<std::size_t> exports;
        if (e.items.size() == 3) {
          const SExpr& ex = e.items[2];
          if (!ex.head_is("export")) throw ParseError("expected (export i ...)", ex.span, {"(export ...)"});
          for (std::size_t i = 1; i < ex.items.size(); ++i) {
            std::size_t c = natural(ex.items[i], "a coordinate");
            if (c == 0 || c > p.table.codomain().dimension())
              type_error(ex.items[i], "coordinate out of range");
            exports.push_back(c - 1);
          }
        }
        return utility_game(p.table, p.sets, exports, e.items[1].atom);
      }
      if (head == "trivial-lens") {
        if (e.items.size() != 2) throw ParseError("trivial-lens takes a lens", e.span);
        return trivial_game(lens(e.items[1]));
      }
    } catch (const SourceError&) {
      throw;
    } catch (const Error& err) {
      type_error(e, err.what());
    }
    throw ParseError("unknown game '" + head + "'", e.items[0].span,
                     {"decision", "copy-decision", "unit", "utility", "trivial-lens"});
  }

  // EXPR := NAME | (seq EXPR EXPR ...) | (tensor EXPR EXPR) | (product EXPR ...)
  GameExpr expr(const SExpr& e) const {
    if (!e.is_list) {
      auto it = doc_.games.find(e.atom);
      if (it == doc_.games.end()) throw NameError("undeclared game '" + e.atom + "'", e.span);
      return it->second;
    }
    expect_list(e, "an expression", 2);
    const std::string& head = symbol(e.items[0], "an operator");
    std::vector<GameExpr> parts;
    for (std::size_t i = 1; i < e.items.size(); ++i) parts.push_back(expr(e.items[i]));
    std::optional<GameExpr> out;
    if (head == "seq") {
      if (parts.size() < 2) throw ParseError("seq takes at least two games", e.span);
      out = GameExpr::seq(parts);
    } else if (head == "tensor") {
      if (parts.size() != 2) throw ParseError("tensor takes two games", e.span);
      out = GameExpr::tensor(parts[0], parts[1]);
    } else if (head == "product") {
      out = GameExpr::product(parts);
    } else {
      throw ParseError("unknown operator '" + head + "'", e.items[0].span, {"seq", "tensor", "product"});
    }
    try {
      out->eval();
    } catch (const Error& err) {
      type_error(e, err.what());
    }
    return *out;
  }

  // (extensive NAME (players N) NODE (infoset ID ID ...) ...)
  ExtensiveGame extensive(const SExpr& f) const {
    if (f.items.size() < 4) throw ParseError("extensive takes players and a tree", f.span);
    const SExpr& pl = f.items[2];
    if (!pl.head_is("players") || pl.items.size() != 2)
      throw ParseError("expected (players N)", pl.span, {"(players N)"});
    std::size_t players = natural(pl.items[1], "a player count");
    std::vector<ExtensiveNode> nodes;
    node(f.items[3], players, nodes);
    std::vector<std::pair<std::string, std::vector<std::string>>> sets;
    for (std::size_t i = 4; i < f.items.size(); ++i) {
      const SExpr& s = f.items[i];
      if (!s.head_is("infoset")) throw ParseError("expected (infoset ...)", s.span, {"(infoset ID ...)"});
      std::vector<std::string> members;
      for (std::size_t j = 1; j < s.items.size(); ++j) members.push_back(symbol(s.items[j], "a node id"));
      sets.emplace_back("set" + std::to_string(sets.size() + 1), std::move(members));
    }
    try {
      return ExtensiveGame(players, std::move(nodes), std::move(sets));
    } catch (const Error& err) {
      type_error(f, err.what());
    }
  }

  // NODE := (node ID PLAYER (ACTION NODE) ...) | (leaf ID (q ...))
  void node(const SExpr& e, std::size_t players, std::vector<ExtensiveNode>& out) const {
    expect_list(e, "a node", 3);
    if (e.head_is("leaf")) {
      if (e.items.size() != 3) throw ParseError("leaf takes an id and payoffs", e.span);
      expect_list(e.items[2], "payoffs (q ...)", 0);
      std::vector<Rational> q;
      for (const auto& r : e.items[2].items) q.push_back(rational(r));
      if (q.size() != players) type_error(e.items[2], "leaf needs one payoff per player");
      out.push_back({symbol(e.items[1], "a node id"), std::nullopt, {}, std::move(q)});
      return;
    }
    if (!e.head_is("node")) throw ParseError("expected a node", e.span, {"(node ...)", "(leaf ...)"});
    if (e.items.size() < 4) throw ParseError("node takes an id, a player and moves", e.span);
    std::size_t player = natural(e.items[2], "a player");
    if (player == 0 || player > players) type_error(e.items[2], "players are numbered 1.." + std::to_string(players));
    std::size_t self = out.size();
    out.push_back({symbol(e.items[1], "a node id"), player - 1, {}, {}});
    for (std::size_t i = 3; i < e.items.size(); ++i) {
      const SExpr& m = e.items[i];
      expect_list(m, "a move (ACTION NODE)", 2);
      if (m.items.size() != 2) throw ParseError("a move is an action and a subtree", m.span);
      std::string action = symbol(m.items[0], "an action");
      std::size_t child = out.size();
      node(m.items[1], players, out);
      out[self].moves.emplace_back(std::move(action), child);
    }
  }

  Document doc_;
};

}  // namespace detail

inline Document parse_document(std::string_view text) {
  return detail::Builder().build(read_sexprs(text));
}

inline std::string print_document(const Document& doc) {
  std::string out;
  for (const auto& d : doc.declarations) {
    pretty(d.form, 0, out);
    out += "\n";
  }
  return out;
}

}  // namespace og::dsl

#endif  // OPENGAMES_DSL_DOCUMENT_HPP_
