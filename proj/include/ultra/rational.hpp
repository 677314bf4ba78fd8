#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace boost {

// Boost 1.74's mixed rational/integer == recurses forever under C++20
// rewritten comparisons. These exact overloads win overload resolution.
inline bool operator==(const rational<std::int64_t>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(const rational<std::int64_t>& a, std::int64_t b) { return !(a == b); }
inline bool operator!=(int b, const rational<std::int64_t>& a) { return !(a == b); }
inline bool operator!=(std::int64_t b, const rational<std::int64_t>& a) { return !(a == b); }

}  // namespace boost

namespace ultra {

// Exact distances. Only comparisons are used on the hot paths; the metric
// gate for d* also adds.
using Rational = boost::rational<std::int64_t>;

Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// A nonnegative rational or +infinity. Used for path thresholds; arithmetic
// on the infinite value is not offered.
class ExtRational {
 public:
  ExtRational(Rational v) : value_(v) {}  // NOLINT: implicit by intent
  ExtRational(std::int64_t v) : value_(Rational(v)) {}  // NOLINT

  static ExtRational infinity() { return ExtRational(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() == b.is_infinite()
                 ? std::strong_ordering::equal
                 : (a.is_infinite() ? std::strong_ordering::greater
                                    : std::strong_ordering::less);
    }
    return compare(*a.value_, *b.value_);
  }

 private:
  ExtRational() = default;
  std::optional<Rational> value_;
};

ExtRational parse_ext_rational(std::string_view text);
std::string format_ext_rational(const ExtRational& r);

}  // namespace ultra
