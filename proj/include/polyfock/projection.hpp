#pragma once

#include <stdexcept>
#include <vector>

#include "basis.hpp"

namespace polyfock {

/// An orthogonal (deliberately unnormalized) vector with its exact
/// squared norm, the unit of currency for every projection here:
/// normalizing would introduce irrational square roots, dividing by the
/// squared norm does not.
struct OrthoVector {
    PolyPoly vec;
    Scalar norm_sq;
};

/// Classical Gram-Schmidt in the given order, exact, dropping zero
/// vectors.  Every squared norm arising from the sector monomial lists
/// used in this library is a single Laurent term, which div_unit
/// requires; a multi-term norm would signal a bug upstream.
inline std::vector<OrthoVector> gram_schmidt(const std::vector<PolyPoly>& raw) {
    std::vector<OrthoVector> out;
    for (const auto& v : raw) {
        PolyPoly w = v;
        for (const auto& u : out)
            w -= u.vec.scaled(inner(v, u.vec).div_unit(u.norm_sq));
        if (!w.is_zero()) out.push_back({w, inner(w, w)});
    }
    return out;
}

/// sum over u of <f, u>/||u||^2 u.
inline PolyPoly project_onto(const PolyPoly& f, const std::vector<OrthoVector>& basis) {
    PolyPoly r;
    for (const auto& u : basis) {
        const Scalar c = inner(f, u.vec);
        if (!c.is_zero()) r += u.vec.scaled(c.div_unit(u.norm_sq));
    }
    return r;
}

/// Closed form of P_{F^{N,m}}(zbar^s z^n), three branches:
///
///   n >= s:            sum_{r<N}   r!/(r+n-s)! m^{-s} I_{n,r,n-s} L_r^{n-s}(m|z|^2) z^{n-s}
///   s > n >= s-N+1:    sum_{j<N+n-s} j!/(j+s-n)! m^{-n} I_{s,j,s-n} L_j^{s-n}(m|z|^2) zbar^{s-n}
///   s - n >= N:        0
///
/// The Laguerre argument m|z|^2 contributes t^(2q) per power, the
/// prefactor m^{-s} (resp. m^{-n}) contributes t^(-2s) (resp. t^(-2n)).
inline PolyPoly project_monomial_F(int s, int n, int N) {
    if (s < 0 || n < 0) throw std::invalid_argument("project_monomial_F: negative exponent");
    if (N < 1) throw std::invalid_argument("project_monomial_F: N must be >= 1");
    PolyPoly out;
    if (n >= s) {
        const int c = n - s;
        for (int r = 0; r < N; ++r) {
            const Rational I = moment_I(n, r, c);
            if (I == 0) continue;
            const Rational pref = I * Rational(factorial(r), factorial(r + c));
            const auto lag = laguerre_coeffs(r, c);
            for (int q = 0; q <= r; ++q) {
                if (lag.coeffs[q] == 0) continue;
                out += PolyPoly::monomial(q, q + c,
                                          Scalar::monomial(2 * q - 2 * s, pref * lag.coeffs[q]));
            }
        }
    } else if (s - n <= N - 1) {
        const int c = s - n;
        for (int j = 0; j <= N + n - s - 1; ++j) {
            const Rational I = moment_I(s, j, c);
            if (I == 0) continue;
            const Rational pref = I * Rational(factorial(j), factorial(j + c));
            const auto lag = laguerre_coeffs(j, c);
            for (int q = 0; q <= j; ++q) {
                if (lag.coeffs[q] == 0) continue;
                out += PolyPoly::monomial(q + c, q,
                                          Scalar::monomial(2 * q - 2 * n, pref * lag.coeffs[q]));
            }
        }
    }
    return out;
}

/// Basis-expansion path for P_{F^{N,m}}: a sector-d component meets only
/// the e1 family (d >= 0, i = d) or the e2 family (d < 0, k = -d <= N-1),
/// so the expansion is a finite exact sum with no truncation.
inline PolyPoly project_F_generic(const PolyPoly& f, int N) {
    if (N < 1) throw std::invalid_argument("project_F_generic: N must be >= 1");
    PolyPoly out;
    for (const auto& [d, fd] : sector_decompose(f)) {
        if (d >= 0) {
            for (int r = 0; r < N; ++r) {
                const auto e = basis_e1(d, r, N);
                const Scalar c = inner(fd, e.vec);
                if (!c.is_zero()) out += e.vec.scaled(c.div_unit(e.norm_sq));
            }
        } else if (-d <= N - 1) {
            for (int j = 0; j <= N - 1 + d; ++j) {
                const auto e = basis_e2(j, -d, N);
                const Scalar c = inner(fd, e.vec);
                if (!c.is_zero()) out += e.vec.scaled(c.div_unit(e.norm_sq));
            }
        }
    }
    return out;
}

/// Orthogonalized spanning set of the sector-d slice of S^{N,m},
/// span{zbar^j z^(j+d) : 0 <= j <= N-1}.  S^{N,m} has no negative
/// sectors (its monomials satisfy k >= j).
struct SectorBasisS {
    int N = 0;
    int d = 0;
    std::vector<OrthoVector> vectors;
};

inline SectorBasisS build_sector_basis_S(int N, int d) {
    if (N < 1) throw std::invalid_argument("build_sector_basis_S: N must be >= 1");
    if (d < 0) throw std::invalid_argument("build_sector_basis_S: sector must be >= 0");
    std::vector<PolyPoly> raw;
    raw.reserve(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) raw.push_back(PolyPoly::monomial(j, j + d));
    SectorBasisS b;
    b.N = N;
    b.d = d;
    b.vectors = gram_schmidt(raw);
    return b;
}

inline PolyPoly project_S(const PolyPoly& f, int N) {
    if (N < 1) throw std::invalid_argument("project_S: N must be >= 1");
    PolyPoly out;
    for (const auto& [d, fd] : sector_decompose(f)) {
        if (d < 0) continue;
        out += project_onto(fd, build_sector_basis_S(N, d).vectors);
    }
    return out;
}

/// Projection onto conj(F0_m), the closure of span{zbar^k : k >= 1}.
/// Per sector -k the target is one-dimensional and ||zbar^k||^2 =
/// k!/m^(k+1), so the component is <f, zbar^k> m^(k+1)/k! zbar^k.
inline PolyPoly project_conjF0(const PolyPoly& f) {
    PolyPoly out;
    for (const auto& [d, fd] : sector_decompose(f)) {
        if (d >= 0) continue;
        const int k = -d;
        const PolyPoly zbk = PolyPoly::monomial(k, 0);
        const Scalar c = inner(fd, zbk);
        if (c.is_zero()) continue;
        out += zbk.scaled(c.div_unit(Scalar::monomial(-2 * (k + 1), Rational(factorial(k)))));
    }
    return out;
}

/// Projection onto span{zbar^j z^k : 0 <= k < j <= N-1}, dimension
/// N(N-1)/2: the finite-rank gap between P_{F^{N,m}} and P_{S^{N,m}}.
/// Orthogonalized directly from the monomials, independently of the e2
/// family, so agreement with project_F_generic - project_S is a real
/// cross-check rather than a restatement.
inline PolyPoly project_corrector(const PolyPoly& f, int N) {
    if (N < 1) throw std::invalid_argument("project_corrector: N must be >= 1");
    PolyPoly out;
    for (const auto& [d, fd] : sector_decompose(f)) {
        if (d >= 0 || -d > N - 1) continue;
        std::vector<PolyPoly> raw;
        for (int j = -d; j <= N - 1; ++j) raw.push_back(PolyPoly::monomial(j, j + d));
        out += project_onto(fd, gram_schmidt(raw));
    }
    return out;
}

} // namespace polyfock
