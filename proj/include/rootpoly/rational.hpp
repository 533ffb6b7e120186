#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "rootpoly/errors.hpp"

namespace rootpoly {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact point of R^V, indexed by vertex id.
using RationalVector = std::vector<Rational>;

inline std::string format_rational(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Accepts "p/q" or a bare integer.
inline Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw parse_error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw parse_error("bad rational '" + text + "': " + e.what());
    }
}

inline Rational vector_sum(const RationalVector& v) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s;
}

}  // namespace rootpoly
