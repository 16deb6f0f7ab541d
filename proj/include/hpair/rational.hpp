#ifndef HPAIR_RATIONAL_HPP
#define HPAIR_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace hpair {

// Exact arbitrary-precision rational. Always stored reduced with a
// positive denominator; arithmetic never rounds.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p" or "p/q" with q > 1.
inline std::string rationalToString(const Rational& r) {
    return r.str();
}

// Accepts "p" or "p/q" with optional sign on p; q must be positive.
inline Rational rationalFromString(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den <= 0)
            throw std::invalid_argument("denominator must be positive: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace hpair

#endif
