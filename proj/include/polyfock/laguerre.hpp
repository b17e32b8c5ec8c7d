#pragma once

#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace polyfock {

/// Generalized Laguerre polynomial L_k^alpha with exact rational
/// coefficients:
///
///   L_k^alpha(y) = sum_{i=0}^{k} (-1)^i binom(k+alpha, k-i) y^i / i!
///
/// Only nonnegative integer alpha is supported; that is the only case
/// the library needs and it keeps every coefficient rational.
struct LaguerrePoly {
    int k = 0;
    int alpha = 0;
    std::vector<Rational> coeffs; // coeffs[i] multiplies y^i
};

inline LaguerrePoly laguerre_coeffs(int k, int alpha) {
    if (k < 0 || alpha < 0) throw std::invalid_argument("laguerre_coeffs: negative index");
    LaguerrePoly p;
    p.k = k;
    p.alpha = alpha;
    p.coeffs.resize(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) {
        Rational c(binomial(k + alpha, k - i), factorial(i));
        if (i % 2 != 0) c = -c;
        p.coeffs[static_cast<std::size_t>(i)] = c;
    }
    return p;
}

/// Floating-point evaluation by the three-term recurrence in k.  Direct
/// summation of the coefficient form cancels catastrophically for large
/// k, the recurrence does not.  T is any floating type (double or a
/// multiprecision binary float).
template <class T>
T laguerre_eval(int k, int alpha, const T& x) {
    if (k < 0 || alpha < 0) throw std::invalid_argument("laguerre_eval: negative index");
    if (k == 0) return T(1);
    T prev(1);
    T cur = T(1 + alpha) - x;
    for (int j = 1; j < k; ++j) {
        T next = ((T(2 * j + 1 + alpha) - x) * cur - T(j + alpha) * prev) / T(j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// Gamma-weighted Laguerre moment
///
///   I_{a,b,c} = integral_0^inf y^a L_b^c(y) e^{-y} dy
///             = sum_{i=0}^{b} (-1)^i binom(b+c, b-i) (a+i)!/i!
///
/// evaluated exactly by termwise Gamma integrals.
inline Rational moment_I(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("moment_I: negative index");
    Rational acc = 0;
    for (int i = 0; i <= b; ++i) {
        Rational term(binomial(b + c, b - i) * factorial(a + i), factorial(i));
        if (i % 2 != 0) term = -term;
        acc += term;
    }
    return acc;
}

/// Closed form of the special moment I_{n,r,n-s}:
///
///   I_{n,r,n-s} = s!(r+n-s)!/r! * (-1)^r binom(n, s-r),   n >= s,
///
/// with the out-of-range binomial convention.  Must agree with
/// moment_I(n, r, n-s) wherever defined.
inline Rational moment_I_closed(int n, int r, int s) {
    if (s < 0 || r < 0) throw std::invalid_argument("moment_I_closed: negative index");
    if (n < s) throw std::invalid_argument("moment_I_closed: requires n >= s");
    Rational value(factorial(s) * factorial(r + n - s) * binomial(n, s - r), factorial(r));
    if (r % 2 != 0) value = -value;
    return value;
}

/// Alternating binomial identity
///   sum_{i=0}^{r} (-1)^i binom(r,i) binom(n+i,s) = (-1)^r binom(n, s-r).
inline bool identity_gould(int r, int n, int s) {
    if (r < 0 || n < 0 || s < 0) throw std::invalid_argument("identity_gould: negative index");
    Integer lhs = 0;
    for (int i = 0; i <= r; ++i) {
        const Integer term = binomial(r, i) * binomial(n + i, s);
        lhs += (i % 2 == 0) ? term : -term;
    }
    Integer rhs = binomial(n, s - r);
    if (r % 2 != 0) rhs = -rhs;
    return lhs == rhs;
}

/// Vandermonde convolution
///   sum_{r=0}^{s} binom(n, s-r) binom(s, r) = binom(n+s, s).
inline bool identity_vandermonde(int n, int s) {
    if (n < 0 || s < 0) throw std::invalid_argument("identity_vandermonde: negative index");
    Integer lhs = 0;
    for (int r = 0; r <= s; ++r) lhs += binomial(n, s - r) * binomial(s, r);
    return lhs == binomial(n + s, s);
}

} // namespace polyfock
