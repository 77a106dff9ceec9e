#include "scltwist/rational.hpp"

#include <charconv>

#include "scltwist/errors.hpp"

namespace scltwist {

std::string to_string(const Rational& value) {
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t out = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') {
    ++first;
  }
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("not a rational number: '" + std::string(whole) + "'");
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

}  // namespace scltwist
