#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace foliate {

using Rational = boost::rational<std::int64_t>;

// "p/q", or "p" when q == 1.
std::string format_rational(const Rational& r);
// Accepts "p", "p/q" and "-p/q". Throws Error(ParseError).
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

}  // namespace foliate
