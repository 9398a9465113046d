#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace orbit_duality {

using Rational = boost::rational<std::int64_t>;

/// "3/4", "-1/2", "0", "2".
std::string to_string(const Rational& q);
/// Accepts "a/b", "-a/b" or an integer.
Rational parse_rational(const std::string& text);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

}  // namespace orbit_duality
