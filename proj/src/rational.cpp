#include "ultra/rational.hpp"

#include <charconv>

#include "ultra/error.hpp"

namespace ultra {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

const Rational& ExtRational::value() const {
  if (!value_) throw Error("value() on infinite threshold");
  return *value_;
}

ExtRational parse_ext_rational(std::string_view text) {
  if (text == "inf") return ExtRational::infinity();
  return ExtRational(parse_rational(text));
}

std::string format_ext_rational(const ExtRational& r) {
  return r.is_infinite() ? std::string("inf") : format_rational(r.value());
}

}  // namespace ultra
