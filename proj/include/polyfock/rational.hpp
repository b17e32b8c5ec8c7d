#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyfock {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer acc = 1;
    for (int i = 2; i <= n; ++i) acc *= i;
    return acc;
}

/// Binomial coefficient with the out-of-range convention
/// binom(n, k) = 0 for k < 0 or k > n.  The upper index must be >= 0.
inline Integer binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Integer acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i; // exact: product of i consecutive integers is divisible by i!
    }
    return acc;
}

/// Falling product n(n-1)...(n-len+1), i.e. n!/(n-len)!.
inline Integer falling_factorial(int n, int len) {
    if (n < 0 || len < 0 || len > n) throw std::invalid_argument("falling_factorial: bad range");
    Integer acc = 1;
    for (int i = 0; i < len; ++i) acc *= n - i;
    return acc;
}

namespace detail {
inline Integer parse_integer(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("sign without digits: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("bad integer literal: '" + text + "'");
    // cpp_int's string constructor rejects an explicit '+'.
    const Integer magnitude(text.substr(start));
    return text[0] == '-' ? Integer(-magnitude) : magnitude;
}
} // namespace detail

/// Parses "p/q" or a bare integer "p"; throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_integer(text));
    const Integer num = detail::parse_integer(text.substr(0, slash));
    const Integer den = detail::parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return Rational(num, den);
}

/// Canonical "p/q" form with the denominator always present.
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace polyfock
