#include "galintel/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace galintel {

std::string to_decimal(const Rational& r) {
    const double value = static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

Rational rational_from_decimal(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
        return Rational(std::stoll(text), 1);
    }
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty()) {
        throw std::invalid_argument("decimal literal missing fraction digits: " + text);
    }
    long long den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) {
        den *= 10;
    }
    const long long num = std::stoll(whole.empty() ? "0" : whole) * den + std::stoll(frac);
    return Rational(num, den);
}

}  // namespace galintel
