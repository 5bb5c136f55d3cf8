#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace ybe {

// Exact rational coefficient field. cpp_rational keeps gcd(|num|,den)=1 and
// den >= 1 as class invariants.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long n, long d = 1) { return Rational(n, d); }

inline std::string rat_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rat_parse(const std::string& s);

} // namespace ybe
