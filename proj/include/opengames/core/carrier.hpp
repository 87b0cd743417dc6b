#ifndef OPENGAMES_CORE_CARRIER_HPP_
#define OPENGAMES_CORE_CARRIER_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "opengames/core/errors.hpp"
#include "opengames/core/finite_set.hpp"
#include "opengames/core/rational.hpp"
#include "opengames/core/value.hpp"

namespace og {

// A backward carrier: a finite set, a payoff space ℚ^d, or a binary product
// or finite sum of carriers. Products and sums of finite carriers are
// normalized to finite sets.
class Carrier {
 public:
  enum class Kind { kFinite, kPayoff, kProduct, kSum };

  Carrier() : Carrier(finite(unit_set())) {}

  static Carrier finite(FiniteSet set) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::kFinite;
    impl->set = std::move(set);
    return Carrier(std::move(impl));
  }
  static Carrier payoff(std::size_t dimension) {
    if (dimension == 0) throw TypeMismatch("payoff dimension must be positive");
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::kPayoff;
    impl->dimension = dimension;
    return Carrier(std::move(impl));
  }
  static Carrier product(const Carrier& a, const Carrier& b) {
    if (a.is_finite() && b.is_finite())
      return finite(product_set(a.set(), b.set()));
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::kProduct;
    impl->parts = {a, b};
    return Carrier(std::move(impl));
  }
  static Carrier sum(const std::vector<Carrier>& parts) {
    bool all_finite = true;
    for (const auto& p : parts) all_finite = all_finite && p.is_finite();
    if (all_finite) {
      std::vector<FiniteSet> sets;
      for (const auto& p : parts) sets.push_back(p.set());
      return finite(coproduct_set(sets));
    }
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::kSum;
    impl->parts = parts;
    return Carrier(std::move(impl));
  }

  Kind kind() const { return impl_->kind; }
  bool is_finite() const { return impl_->kind == Kind::kFinite; }
  const FiniteSet& set() const {
    if (!is_finite()) throw TypeMismatch("carrier " + to_string() + " is not finite");
    return impl_->set;
  }
  std::size_t dimension() const { return impl_->dimension; }
  const std::vector<Carrier>& parts() const { return impl_->parts; }

  bool contains(const Value& v) const {
    switch (kind()) {
      case Kind::kFinite:
        return impl_->set.contains(v);
      case Kind::kPayoff:
        return v.is_vector() && v.size() == impl_->dimension;
      case Kind::kProduct:
        return v.is_tuple() && v.size() == 2 && impl_->parts[0].contains(v[0]) &&
               impl_->parts[1].contains(v[1]);
      case Kind::kSum:
        return v.is_tagged() && v.tag() < impl_->parts.size() &&
               impl_->parts[v.tag()].contains(v.inner());
    }
    return false;
  }

  // All elements when finite; otherwise the probe values used to decide
  // equality of updates: the zero vector and d+1 vectors of distinct primes.
  std::vector<Value> samples() const {
    switch (kind()) {
      case Kind::kFinite:
        return impl_->set.elements();
      case Kind::kPayoff: {
        const std::size_t d = impl_->dimension;
        auto primes = first_primes((d + 1) * d);
        std::vector<Value> out;
        out.push_back(Value::vector(std::vector<Rational>(d, Rational(0))));
        for (std::size_t j = 0; j <= d; ++j) {
          std::vector<Rational> c;
          for (std::size_t i = 0; i < d; ++i) c.emplace_back(primes[j * d + i]);
          out.push_back(Value::vector(std::move(c)));
        }
        return out;
      }
      case Kind::kProduct: {
        std::vector<Value> out;
        for (const auto& a : impl_->parts[0].samples())
          for (const auto& b : impl_->parts[1].samples())
            out.push_back(Value::pair(a, b));
        return out;
      }
      case Kind::kSum: {
        std::vector<Value> out;
        for (std::size_t j = 0; j < impl_->parts.size(); ++j)
          for (const auto& v : impl_->parts[j].samples())
            out.push_back(Value::tagged(j, v));
        return out;
      }
    }
    return {};
  }

  friend bool operator==(const Carrier& a, const Carrier& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::kFinite:
        return a.impl_->set == b.impl_->set;
      case Kind::kPayoff:
        return a.impl_->dimension == b.impl_->dimension;
      default:
        return a.impl_->parts == b.impl_->parts;
    }
  }

  std::string to_string() const {
    switch (kind()) {
      case Kind::kFinite:
        return impl_->set.to_string();
      case Kind::kPayoff:
        return "Q^" + std::to_string(impl_->dimension);
      case Kind::kProduct:
        return "(" + impl_->parts[0].to_string() + " x " +
               impl_->parts[1].to_string() + ")";
      case Kind::kSum: {
        std::string out = "(";
        for (std::size_t i = 0; i < impl_->parts.size(); ++i) {
          if (i) out += " + ";
          out += impl_->parts[i].to_string();
        }
        return out + ")";
      }
    }
    return "";
  }

 private:
  struct Impl {
    Kind kind = Kind::kFinite;
    FiniteSet set;
    std::size_t dimension = 0;
    std::vector<Carrier> parts;
  };

  explicit Carrier(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  static std::vector<long long> first_primes(std::size_t n) {
    std::vector<long long> out;
    for (long long c = 2; out.size() < n; ++c) {
      bool prime = true;
      for (long long p : out) {
        if (p * p > c) break;
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(c);
    }
    return out;
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace og

#endif  // OPENGAMES_CORE_CARRIER_HPP_
