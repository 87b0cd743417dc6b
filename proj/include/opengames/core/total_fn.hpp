#ifndef OPENGAMES_CORE_TOTAL_FN_HPP_
#define OPENGAMES_CORE_TOTAL_FN_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "opengames/core/bounds.hpp"
#include "opengames/core/carrier.hpp"
#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/value.hpp"

namespace og {

// A total function from a finite set, stored as one image per element.
class TotalFn {
 public:
  TotalFn() : TotalFn(FiniteSet(), Carrier::finite(unit_set()), {}) {}

  TotalFn(FiniteSet domain, Carrier codomain, std::vector<Value> table) {
    if (table.size() != domain.size())
      throw TypeMismatch("table of size " + std::to_string(table.size()) +
                         " for a domain of size " + std::to_string(domain.size()));
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!codomain.contains(table[i]))
        throw TypeMismatch("image " + table[i].to_string() + " of " +
                           domain[i].to_string() + " is not in " +
                           codomain.to_string());
    }
    auto impl = std::make_shared<Impl>();
    impl->domain = std::move(domain);
    impl->codomain = std::move(codomain);
    impl->image = Value::function(std::move(table));
    impl_ = std::move(impl);
  }

  static TotalFn tabulate(const FiniteSet& domain, const Carrier& codomain,
                          const std::function<Value(const Value&)>& f) {
    std::vector<Value> table;
    table.reserve(domain.size());
    for (const auto& x : domain) table.push_back(f(x));
    return TotalFn(domain, codomain, std::move(table));
  }

  static TotalFn from_value(const FiniteSet& domain, const Carrier& codomain,
                            const Value& fn) {
    if (!fn.is_function())
      throw TypeMismatch(fn.to_string() + " is not a function table");
    return TotalFn(domain, codomain, fn.elements());
  }

  static TotalFn identity(const FiniteSet& set) {
    return TotalFn(set, Carrier::finite(set), set.elements());
  }

  static TotalFn constant(const FiniteSet& domain, const Carrier& codomain,
                          const Value& v) {
    return TotalFn(domain, codomain, std::vector<Value>(domain.size(), v));
  }

  const FiniteSet& domain() const { return impl_->domain; }
  const Carrier& codomain() const { return impl_->codomain; }
  const std::vector<Value>& table() const { return impl_->image.elements(); }
  // The table as a function value.
  const Value& as_value() const { return impl_->image; }

  const Value& operator()(const Value& x) const {
    return impl_->image.elements()[impl_->domain.index_of(x)];
  }
  const Value& at(std::size_t i) const { return impl_->image.elements()[i]; }

  std::size_t hash() const { return impl_->image.hash() ^ impl_->domain.hash(); }

  friend bool operator==(const TotalFn& a, const TotalFn& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->domain == b.impl_->domain &&
            a.impl_->codomain == b.impl_->codomain &&
            a.impl_->image == b.impl_->image);
  }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < domain().size(); ++i) {
      if (i) out += ", ";
      domain()[i].append_to(out);
      out += " -> ";
      table()[i].append_to(out);
    }
    return out + "}";
  }

 private:
  struct Impl {
    FiniteSet domain;
    Carrier codomain;
    Value image;
  };
  std::shared_ptr<const Impl> impl_;
};

struct TotalFnHash {
  std::size_t operator()(const TotalFn& f) const { return f.hash(); }
};

// All functions A -> B, first element of A most significant.
inline std::vector<TotalFn> enumerate_functions(const FiniteSet& a,
                                                const FiniteSet& b,
                                                const Bounds& bounds = {}) {
  BoundedCount count(bounds, "function space " + a.to_string() + " -> " +
                                 b.to_string());
  count.power(b.size(), a.size());
  std::vector<TotalFn> out;
  if (b.empty() && !a.empty()) return out;
  out.reserve(count.value());
  const Carrier cod = Carrier::finite(b);
  std::vector<std::size_t> digits(a.size(), 0);
  while (true) {
    std::vector<Value> table;
    table.reserve(a.size());
    for (auto d : digits) table.push_back(b[d]);
    out.emplace_back(a, cod, std::move(table));
    std::size_t i = a.size();
    while (i > 0) {
      --i;
      if (++digits[i] < b.size()) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (a.empty()) return out;
  }
}

// The function space as a set of function values, in enumeration order.
inline FiniteSet function_set(const FiniteSet& a, const FiniteSet& b,
                              const Bounds& bounds = {}) {
  std::vector<Value> out;
  for (const auto& f : enumerate_functions(a, b, bounds)) out.push_back(f.as_value());
  return FiniteSet::make(std::move(out));
}

}  // namespace og

#endif  // OPENGAMES_CORE_TOTAL_FN_HPP_
