#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "basis.hpp"

namespace polyfock {

/// Deterministic source for every randomized check.  Raw mt19937_64
/// draws are reduced by modulo rather than through
/// std::uniform_int_distribution, whose output is implementation
/// defined; byte-identical runs across standard libraries are part of
/// the CLI contract.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform-ish integer in [lo, hi], inclusive.  The modulo bias is
    /// irrelevant here: draws only steer test-case generation.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("SeededRng::uniform_int: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(eng_() % span);
    }

    Rational rational(int num_lo, int num_hi, int den_max) {
        const int num = uniform_int(num_lo, num_hi);
        const int den = uniform_int(1, den_max);
        return Rational(num, den);
    }

    Rational nonzero_rational(int num_lo, int num_hi, int den_max) {
        for (;;) {
            const Rational r = rational(num_lo, num_hi, den_max);
            if (r != 0) return r;
        }
    }

    /// Random analytic polynomial of degree <= deg_max (possibly sparse,
    /// possibly zero).
    PolyPoly analytic_poly(int deg_max) {
        PolyPoly p;
        for (int k = 0; k <= deg_max; ++k)
            if (uniform_int(0, 2) != 0)
                p += PolyPoly::monomial(0, k, Scalar(rational(-10, 10, 6)));
        return p;
    }

    PolyPoly nonzero_analytic_poly(int deg_max) {
        for (;;) {
            PolyPoly p = analytic_poly(deg_max);
            if (!p.is_zero()) return p;
        }
    }

    /// Random polyanalytic polynomial with zbar-degree <= j_max and
    /// z-degree <= k_max.
    PolyPoly polyanalytic_poly(int j_max, int k_max) {
        PolyPoly p;
        const int terms = uniform_int(1, 6);
        for (int t = 0; t < terms; ++t)
            p += PolyPoly::monomial(uniform_int(0, j_max), uniform_int(0, k_max),
                                    Scalar(rational(-10, 10, 6)));
        return p;
    }

    /// Random nonzero element of F^{N,m}: a rational combination of e1
    /// and e2 expansions with indices <= idx_max.
    PolyPoly kernel_element(int N, int idx_max) {
        for (;;) {
            PolyPoly h;
            const int terms = uniform_int(1, 4);
            for (int t = 0; t < terms; ++t) {
                const Scalar c{nonzero_rational(-10, 10, 10)};
                if (N > 1 && uniform_int(0, 3) == 0) {
                    const int k = uniform_int(1, N - 1);
                    const int j = uniform_int(0, N - 1 - k);
                    h += basis_e2(j, k, N).vec.scaled(c);
                } else {
                    const int i = uniform_int(0, idx_max);
                    const int r = uniform_int(0, N - 1);
                    h += basis_e1(i, r, N).vec.scaled(c);
                }
            }
            if (!h.is_zero()) return h;
        }
    }

private:
    std::mt19937_64 eng_;
};

} // namespace polyfock
