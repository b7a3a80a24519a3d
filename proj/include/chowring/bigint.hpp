#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace chowring {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Thrown when an internal invariant breaks (inexact division, bad certificate).
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const BigRational& x) {
    if (boost::multiprecision::denominator(x) == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
    BigInt v(s.substr(start));
    return s[0] == '-' ? BigInt(-v) : v;
}

inline BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Floor division and nonnegative remainder.
inline void floor_divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    q = a / b;
    r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0))) {
        q -= 1;
        r += b;
    }
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

// Extended gcd: g = s*a + t*b with g >= 0.
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& s, BigInt& t) {
    BigInt r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt tmp = r0 - q * r1; r0 = r1; r1 = tmp;
        tmp = s0 - q * s1; s0 = s1; s1 = tmp;
        tmp = t0 - q * t1; t0 = t1; t1 = tmp;
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    s = s0;
    t = t0;
    return r0;
}

}  // namespace chowring
