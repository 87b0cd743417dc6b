#ifndef OPENGAMES_CORE_VALUE_HPP_
#define OPENGAMES_CORE_VALUE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opengames/core/errors.hpp"
#include "opengames/core/rational.hpp"

namespace og {

// Immutable symbolic value: atoms, injections, tuples, payoff vectors and
// function tables. Copies share structure.
class Value {
 public:
  enum class Kind : std::uint8_t { kAtom, kTagged, kTuple, kVector, kFunction };

  Value() : Value(unit()) {}

  static Value atom(std::string_view name) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kAtom;
    node->name = std::string(name);
    return Value(std::move(node));
  }
  // The element of the singleton set, written ∗.
  static const Value& unit() {
    static const Value u = atom("*");
    return u;
  }
  // Injection number `tag` (0-based) of a coproduct.
  static Value tagged(std::size_t tag, Value inner) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kTagged;
    node->tag = tag;
    node->elements.push_back(std::move(inner));
    return Value(std::move(node));
  }
  static Value tuple(std::vector<Value> elements) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kTuple;
    node->elements = std::move(elements);
    return Value(std::move(node));
  }
  static Value pair(Value a, Value b) {
    return tuple({std::move(a), std::move(b)});
  }
  static Value vector(std::vector<Rational> coords) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kVector;
    node->coords = std::move(coords);
    return Value(std::move(node));
  }
  // A function given by its images, listed in the order of its domain.
  static Value function(std::vector<Value> images) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::kFunction;
    node->elements = std::move(images);
    return Value(std::move(node));
  }

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_unit() const { return is_atom() && node_->name == "*"; }
  bool is_tagged() const { return kind() == Kind::kTagged; }
  bool is_tuple() const { return kind() == Kind::kTuple; }
  bool is_vector() const { return kind() == Kind::kVector; }
  bool is_function() const { return kind() == Kind::kFunction; }

  const std::string& name() const {
    expect(Kind::kAtom);
    return node_->name;
  }
  std::size_t tag() const {
    expect(Kind::kTagged);
    return node_->tag;
  }
  const Value& inner() const {
    expect(Kind::kTagged);
    return node_->elements[0];
  }
  // Components of a tuple or images of a function.
  const std::vector<Value>& elements() const {
    if (kind() != Kind::kTuple && kind() != Kind::kFunction)
      throw TypeMismatch("value " + to_string() + " has no components");
    return node_->elements;
  }
  const Value& operator[](std::size_t i) const {
    const auto& e = elements();
    if (i >= e.size())
      throw TypeMismatch("component " + std::to_string(i) + " out of range in " +
                         to_string());
    return e[i];
  }
  std::size_t size() const {
    if (kind() == Kind::kVector) return node_->coords.size();
    return elements().size();
  }
  const std::vector<Rational>& coords() const {
    expect(Kind::kVector);
    return node_->coords;
  }

  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.node_ == b.node_) return true;
    if (a.node_->hash != b.node_->hash || a.node_->kind != b.node_->kind)
      return false;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    return x.name == y.name && x.tag == y.tag && x.coords == y.coords &&
           x.elements == y.elements;
  }

  std::string to_string() const {
    std::string out;
    append_to(out);
    return out;
  }

  void append_to(std::string& out) const {
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::kAtom:
        out += n.name;
        break;
      case Kind::kTagged:
        out += "in" + std::to_string(n.tag + 1) + "(";
        n.elements[0].append_to(out);
        out += ")";
        break;
      case Kind::kTuple:
      case Kind::kFunction:
        out += n.kind == Kind::kTuple ? "(" : "fn(";
        for (std::size_t i = 0; i < n.elements.size(); ++i) {
          if (i) out += ", ";
          n.elements[i].append_to(out);
        }
        out += ")";
        break;
      case Kind::kVector:
        out += "[";
        for (std::size_t i = 0; i < n.coords.size(); ++i) {
          if (i) out += ", ";
          out += n.coords[i].to_string();
        }
        out += "]";
        break;
    }
  }

 private:
  struct Node {
    Kind kind = Kind::kAtom;
    std::string name;
    std::size_t tag = 0;
    std::vector<Value> elements;
    std::vector<Rational> coords;
    std::size_t hash = 0;
  };

  explicit Value(std::shared_ptr<Node> node) {
    node->hash = compute_hash(*node);
    node_ = std::move(node);
  }

  static std::size_t mix(std::size_t h, std::size_t v) {
    // FNV-1a over 64-bit words.
    constexpr std::uint64_t kPrime = 1099511628211ull;
    std::uint64_t x = h;
    for (int i = 0; i < 8; ++i) {
      x ^= (v >> (8 * i)) & 0xffu;
      x *= kPrime;
    }
    return static_cast<std::size_t>(x);
  }

  static std::size_t compute_hash(const Node& n) {
    std::size_t h = 14695981039346656037ull;
    h = mix(h, static_cast<std::size_t>(n.kind));
    for (char c : n.name) h = mix(h, static_cast<unsigned char>(c));
    h = mix(h, n.tag);
    for (const auto& e : n.elements) h = mix(h, e.hash());
    for (const auto& q : n.coords) h = mix(h, q.hash());
    h = mix(h, n.elements.size() + n.coords.size());
    return h;
  }

  void expect(Kind k) const {
    if (kind() != k)
      throw TypeMismatch("unexpected value shape: " + to_string());
  }

  std::shared_ptr<const Node> node_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.hash(); }
};

}  // namespace og

#endif  // OPENGAMES_CORE_VALUE_HPP_
