#pragma once

#include <stdexcept>

#include "laguerre.hpp"
#include "polypoly.hpp"

namespace polyfock {

enum class BasisKind {
    e1,       // z^i L_r^i(m|z|^2), analytic-dominant family
    e2,       // zbar^k L_j^k(m|z|^2), antiholomorphic-dominant family
    standard, // e_n = m^((n+1)/2) z^n / sqrt(n!), the N = 1 Fock basis
};

/// One orthogonal basis vector of F^{N,m}, stored unnormalized so that all
/// coefficients stay in the scalar field (the normalizing constants
/// sqrt(r!/(r+i)!) are irrational in general).
///
/// `vec` carries the factor m^((i+1)/2) (resp. m^((k+1)/2)) as a power of t,
/// so  vec / sqrt(norm_sq)  is the unit vector.  norm_sq is a pure rational:
/// e1(i,r) has norm_sq = (r+i)!/r!, e2(j,k) has norm_sq = (j+k)!/j!.
struct BasisElement {
    BasisKind kind;
    int a = 0, b = 0; // (i, r) for e1; (j, k) for e2; (n, 0) for standard
    PolyPoly vec;
    Scalar norm_sq;
};

/// e^1_{i,r} ~ m^((i+1)/2) z^i L_r^i(m|z|^2), for i >= 0, 0 <= r <= N-1.
/// Expanding the Laguerre polynomial in y = m|z|^2 = m zbar z gives
///   t^(i+1) sum_q (-1)^q binom(r+i, r-q) (1/q!) t^(2q) zbar^q z^(q+i).
inline BasisElement basis_e1(int i, int r, int N) {
    if (N < 1) throw std::invalid_argument("basis_e1: N must be >= 1");
    if (i < 0 || r < 0 || r > N - 1) throw std::invalid_argument("basis_e1: need i >= 0, 0 <= r <= N-1");
    BasisElement e;
    e.kind = BasisKind::e1;
    e.a = i;
    e.b = r;
    const auto lag = laguerre_coeffs(r, i);
    for (int q = 0; q <= r; ++q) {
        if (lag.coeffs[q] == 0) continue;
        e.vec += PolyPoly::monomial(q, q + i, Scalar::monomial(i + 1 + 2 * q, lag.coeffs[q]));
    }
    e.norm_sq = Scalar(Rational(factorial(r + i), factorial(r)));
    return e;
}

/// e^2_{j,k} ~ m^((k+1)/2) zbar^k L_j^k(m|z|^2), for 1 <= k <= N-1,
/// 0 <= j <= N-1-k.  Together with the e1 family this spans F^{N,m}.
inline BasisElement basis_e2(int j, int k, int N) {
    if (N < 1) throw std::invalid_argument("basis_e2: N must be >= 1");
    if (k < 1 || k > N - 1 || j < 0 || j > N - 1 - k)
        throw std::invalid_argument("basis_e2: need 1 <= k <= N-1, 0 <= j <= N-1-k");
    BasisElement e;
    e.kind = BasisKind::e2;
    e.a = j;
    e.b = k;
    const auto lag = laguerre_coeffs(j, k);
    for (int q = 0; q <= j; ++q) {
        if (lag.coeffs[q] == 0) continue;
        e.vec += PolyPoly::monomial(q + k, q, Scalar::monomial(k + 1 + 2 * q, lag.coeffs[q]));
    }
    e.norm_sq = Scalar(Rational(factorial(j + k), factorial(j)));
    return e;
}

/// e_n = m^((n+1)/2) z^n / sqrt(n!): the classical Fock basis, which is
/// the r = 0 slice of the e1 family (L_0^n == 1).
inline BasisElement basis_standard(int n) {
    if (n < 0) throw std::invalid_argument("basis_standard: n must be >= 0");
    BasisElement e = basis_e1(n, 0, 1);
    e.kind = BasisKind::standard;
    return e;
}

inline BasisElement basis_element(BasisKind kind, int a, int b, int N) {
    switch (kind) {
        case BasisKind::e1: return basis_e1(a, b, N);
        case BasisKind::e2: return basis_e2(a, b, N);
        case BasisKind::standard: return basis_standard(a);
    }
    throw std::invalid_argument("basis_element: unknown kind");
}

} // namespace polyfock
