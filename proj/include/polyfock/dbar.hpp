#pragma once

#include <cstdint>
#include <stdexcept>

#include "projection.hpp"
#include "rng.hpp"

namespace polyfock {

/// Minimal-norm solution of (dbar)^N u = f together with its exact
/// certificates.  Both flags must come back true for any accepted solve;
/// they are computed, not assumed.
struct SolutionReport {
    PolyPoly u;
    bool residual_ok = false;   // dbar^N u == f, exact
    bool orthogonal_ok = false; // u is orthogonal to F^{N,m}, exact
    Scalar norm_sq;
};

/// u = (I - P_{F^{N,m}})(zbar^N/N! f).  The first factor solves the
/// equation since dbar^N(zbar^N/N! f) = f for analytic f, and removing
/// the F^{N,m} component (the kernel of dbar^N) changes nothing in the
/// residual while minimizing the norm.
inline SolutionReport solve_min_norm(const PolyPoly& f, int N) {
    if (!f.is_analytic()) throw std::invalid_argument("solve_min_norm: rhs must be analytic");
    if (N < 1) throw std::invalid_argument("solve_min_norm: N must be >= 1");
    const PolyPoly particular =
        PolyPoly::monomial(N, 0, Scalar(Rational(Integer(1), factorial(N)))) * f;
    SolutionReport rep;
    rep.u = particular - project_F_generic(particular, N);
    rep.residual_ok = dbar(rep.u, N) == f || (rep.u.is_zero() && f.is_zero());
    rep.orthogonal_ok = project_F_generic(rep.u, N).is_zero();
    rep.norm_sq = inner(rep.u, rep.u);
    return rep;
}

/// Randomized minimality evidence: for `trials` random nonzero kernel
/// elements h, checks ||u + h||^2 > ||u||^2 exactly at m = 1.  True
/// minimality over the whole kernel already follows from orthogonal_ok;
/// this exercises it against concrete competitors.
inline bool verify_minimality(const SolutionReport& rep, int N, int trials, std::uint64_t seed) {
    if (N < 1) throw std::invalid_argument("verify_minimality: N must be >= 1");
    if (trials < 0) throw std::invalid_argument("verify_minimality: negative trial count");
    SeededRng rng(seed);
    const Rational base = rep.norm_sq.at_one();
    for (int t = 0; t < trials; ++t) {
        const PolyPoly competitor = rep.u + rng.kernel_element(N, 10);
        if (inner(competitor, competitor).at_one() <= base) return false;
    }
    return true;
}

} // namespace polyfock
