#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace galintel {

/// Exact rational arithmetic for intelligibility scores and literals.
using Rational = boost::rational<long long>;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(num, den);
}

/// Decimal rendering used in CSV/JSON payloads, e.g. "0.75", "-0.333333".
std::string to_decimal(const Rational& r);

/// Parse a decimal literal ("12", "0.75") into an exact rational.
Rational rational_from_decimal(const std::string& text);

}  // namespace galintel
