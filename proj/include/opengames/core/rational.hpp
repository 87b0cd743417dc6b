#ifndef OPENGAMES_CORE_RATIONAL_HPP_
#define OPENGAMES_CORE_RATIONAL_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "opengames/core/errors.hpp"

namespace og {

// Exact rational number in reduced form with a positive denominator.
class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() = default;
  Rational(long long n) : value_(n) {}  // NOLINT: implicit from integers
  Rational(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    value_ = Rep(n, d);
  }
  explicit Rational(Rep value) : value_(std::move(value)) {}

  // Accepts "p", "-p", "p/q".
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) throw Error("malformed rational '" + std::string(text) + "'");
      std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (i == s.size()) throw Error("malformed rational '" + std::string(text) + "'");
      for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9')
          throw Error("malformed rational '" + std::string(text) + "'");
      }
      return boost::multiprecision::cpp_int(std::string(s));
    };
    if (slash == std::string_view::npos) return Rational(Rep(parse_int(text)));
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("rational with zero denominator");
    return Rational(Rep(num, den));
  }

  static bool looks_like(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    bool slash = false;
    bool digit_after = false;
    for (std::size_t j = i; j < text.size(); ++j) {
      if (text[j] == '/') {
        if (slash || j == i) return false;
        slash = true;
        digit_after = false;
      } else if (text[j] >= '0' && text[j] <= '9') {
        digit_after = true;
      } else {
        return false;
      }
    }
    return digit_after;
  }

  const Rep& rep() const { return value_; }

  std::string to_string() const {
    auto num = boost::multiprecision::numerator(value_);
    auto den = boost::multiprecision::denominator(value_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
  }

  std::size_t hash() const {
    const auto& num = boost::multiprecision::numerator(value_);
    const auto& den = boost::multiprecision::denominator(value_);
    return small_hash(num) * 1000003u ^ small_hash(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(Rep(a.value_ + b.value_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(Rep(a.value_ - b.value_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(Rep(a.value_ * b.value_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.value_ == 0) throw Error("division by zero");
    return Rational(Rep(a.value_ / b.value_));
  }
  Rational operator-() const { return Rational(Rep(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    int c = a.value_.compare(b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  static std::size_t small_hash(const boost::multiprecision::cpp_int& z) {
    static const boost::multiprecision::cpp_int lo = -(1ll << 62);
    static const boost::multiprecision::cpp_int hi = 1ll << 62;
    if (z > lo && z < hi) return std::hash<long long>{}(z.convert_to<long long>());
    return std::hash<std::string>{}(z.str());
  }

  Rep value_;
};

}  // namespace og

#endif  // OPENGAMES_CORE_RATIONAL_HPP_
