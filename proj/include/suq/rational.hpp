#pragma once

// Exact rational arithmetic. Backed by boost::multiprecision so that
// numerators and denominators never overflow; the backend keeps values
// canonical (coprime, positive denominator).

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace suq {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero to a negative power");
        return Rational(0);
    }
    Rational acc(1), b = base;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (e < 0) return Rational(1) / acc;
    return acc;
}

// Exact square root, or nullopt if the argument is not a perfect square.
inline std::optional<Integer> exact_sqrt(const Integer& n) {
    if (n < 0) return std::nullopt;
    Integer r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline std::optional<Rational> exact_sqrt(const Rational& x) {
    auto sn = exact_sqrt(numerator(x));
    if (!sn) return std::nullopt;
    auto sd = exact_sqrt(denominator(x));
    if (!sd) return std::nullopt;
    return Rational(*sn, *sd);
}

inline std::string rat_str(const Rational& x) {
    return x.str();
}

} // namespace suq
