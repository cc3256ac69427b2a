#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace segcalc {

using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-1", "0.5", "-1.25", "1/2", "-3/4".
Rational parse_rational(std::string_view text);

// "3", "-1/2".
std::string to_string(const Rational& q);

}  // namespace segcalc
