#ifndef OPENGAMES_CORE_FINITE_SET_HPP_
#define OPENGAMES_CORE_FINITE_SET_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "opengames/core/errors.hpp"
#include "opengames/core/value.hpp"

namespace og {

// Ordered set of distinct values. Order is construction order.
class FiniteSet {
 public:
  FiniteSet() : impl_(empty_impl()) {}

  static FiniteSet make(std::vector<Value> elements) {
    auto impl = std::make_shared<Impl>();
    impl->index.reserve(elements.size());
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (!impl->index.emplace(elements[i], i).second)
        throw DuplicateElement("duplicate element " + elements[i].to_string());
      h = (h ^ elements[i].hash()) * 1099511628211ull;
    }
    impl->hash = h ^ elements.size();
    impl->elements = std::move(elements);
    return FiniteSet(std::move(impl));
  }

  static FiniteSet of_atoms(std::initializer_list<std::string_view> names) {
    std::vector<Value> v;
    for (auto n : names) v.push_back(Value::atom(n));
    return make(std::move(v));
  }

  std::size_t size() const { return impl_->elements.size(); }
  bool empty() const { return impl_->elements.empty(); }
  const Value& operator[](std::size_t i) const { return impl_->elements.at(i); }
  const std::vector<Value>& elements() const { return impl_->elements; }
  auto begin() const { return impl_->elements.begin(); }
  auto end() const { return impl_->elements.end(); }

  bool contains(const Value& v) const { return impl_->index.count(v) != 0; }
  std::optional<std::size_t> find(const Value& v) const {
    auto it = impl_->index.find(v);
    if (it == impl_->index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const Value& v) const {
    auto it = impl_->index.find(v);
    if (it == impl_->index.end())
      throw TypeMismatch(v.to_string() + " is not an element of " + to_string());
    return it->second;
  }

  std::size_t hash() const { return impl_->hash; }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->hash == b.impl_->hash &&
           a.impl_->elements == b.impl_->elements;
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < size(); ++i) {
      if (i) out += ", ";
      impl_->elements[i].append_to(out);
    }
    return out + "}";
  }

 private:
  struct Impl {
    std::vector<Value> elements;
    std::unordered_map<Value, std::size_t, ValueHash> index;
    std::size_t hash = 0;
  };

  explicit FiniteSet(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static const std::shared_ptr<const Impl>& empty_impl() {
    static const std::shared_ptr<const Impl> e = [] {
      auto impl = std::make_shared<Impl>();
      impl->hash = 0x9e3779b97f4a7c15ull;
      return impl;
    }();
    return e;
  }

  std::shared_ptr<const Impl> impl_;
};

// The singleton {∗}.
inline const FiniteSet& unit_set() {
  static const FiniteSet s = FiniteSet::make({Value::unit()});
  return s;
}

// Pairs (a, b) in A-major order.
inline FiniteSet product_set(const FiniteSet& a, const FiniteSet& b) {
  std::vector<Value> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(Value::pair(x, y));
  return FiniteSet::make(std::move(out));
}

// Flat n-tuples, first factor most significant. The empty family gives {()}.
inline FiniteSet tuple_set(std::span<const FiniteSet> factors) {
  std::vector<std::vector<Value>> partial{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<Value>> next;
    next.reserve(partial.size() * f.size());
    for (const auto& p : partial) {
      for (const auto& x : f) {
        auto q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    }
    partial = std::move(next);
  }
  std::vector<Value> out;
  out.reserve(partial.size());
  for (auto& p : partial) out.push_back(Value::tuple(std::move(p)));
  return FiniteSet::make(std::move(out));
}

inline FiniteSet coproduct_set(std::span<const FiniteSet> summands) {
  std::vector<Value> out;
  for (std::size_t j = 0; j < summands.size(); ++j)
    for (const auto& x : summands[j]) out.push_back(Value::tagged(j, x));
  return FiniteSet::make(std::move(out));
}

inline FiniteSet coproduct_set(const FiniteSet& a, const FiniteSet& b) {
  const FiniteSet both[] = {a, b};
  return coproduct_set(std::span<const FiniteSet>(both));
}

}  // namespace og

#endif  // OPENGAMES_CORE_FINITE_SET_HPP_
