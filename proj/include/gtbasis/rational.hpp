#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace gtb {

/// Exact arbitrary-precision integers and rationals. All coefficient
/// arithmetic in the library is exact; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical serialization: "p" for integers, "p/q" otherwise (q > 0).
inline std::string coeff_to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rational coeff_from_string(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(Integer(std::string(s)));
        }
        Integer num{std::string(s.substr(0, slash))};
        Integer den{std::string(s.substr(slash + 1))};
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("malformed rational '" + std::string(s) + "': " + e.what());
    }
}

}  // namespace gtb
