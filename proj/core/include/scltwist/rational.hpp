#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace scltwist {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q" with q > 0, including integers ("3/1").
std::string to_string(const Rational& value);

/// Accepts "p/q" or a bare integer "p". Throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace scltwist
