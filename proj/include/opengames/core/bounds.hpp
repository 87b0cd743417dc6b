#ifndef OPENGAMES_CORE_BOUNDS_HPP_
#define OPENGAMES_CORE_BOUNDS_HPP_

#include <cstdint>
#include <string>

#include "opengames/core/errors.hpp"

namespace og {

struct Bounds {
  std::uint64_t max_table = 1'000'000;
};

// Product of `factors` that throws EnumerationBound once it passes the limit.
class BoundedCount {
 public:
  BoundedCount(const Bounds& bounds, std::string what)
      : limit_(bounds.max_table), what_(std::move(what)) {}

  BoundedCount& times(std::uint64_t factor) {
    if (factor == 0) {
      zero_ = true;
      value_ = 0;
      return *this;
    }
    if (zero_) return *this;
    if (value_ > limit_ / factor) overflow();
    value_ *= factor;
    if (value_ > limit_) overflow();
    return *this;
  }

  BoundedCount& power(std::uint64_t base, std::uint64_t exponent) {
    for (std::uint64_t i = 0; i < exponent; ++i) times(base);
    return *this;
  }

  std::uint64_t value() const { return value_; }

 private:
  [[noreturn]] void overflow() const {
    throw EnumerationBound(what_ + " exceeds the enumeration bound of " +
                           std::to_string(limit_));
  }

  std::uint64_t limit_;
  std::string what_;
  std::uint64_t value_ = 1;
  bool zero_ = false;
};

}  // namespace og

#endif  // OPENGAMES_CORE_BOUNDS_HPP_
