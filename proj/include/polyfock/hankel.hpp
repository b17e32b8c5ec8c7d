#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"
#include "projection.hpp"

namespace polyfock {

/// Big Hankel operator relative to F^{N,m}: f -> (I - P_{F^{N,m}})(gbar f).
inline PolyPoly apply_tilde(const PolyPoly& g, int N, const PolyPoly& f) {
    if (!f.is_analytic()) throw std::invalid_argument("apply_tilde: argument must be analytic");
    const PolyPoly gf = mul_conj_symbol(f, g);
    return gf - project_F_generic(gf, N);
}

/// Middle Hankel operator: f -> (I - P_{S^{N,m}})(gbar f).
inline PolyPoly apply_middle_Y(const PolyPoly& g, int N, const PolyPoly& f) {
    if (!f.is_analytic()) throw std::invalid_argument("apply_middle_Y: argument must be analytic");
    const PolyPoly gf = mul_conj_symbol(f, g);
    return gf - project_S(gf, N);
}

/// Small Hankel operator: f -> Q(gbar f) with Q onto conj(F0_m).
inline PolyPoly apply_small(const PolyPoly& g, const PolyPoly& f) {
    if (!f.is_analytic()) throw std::invalid_argument("apply_small: argument must be analytic");
    return project_conjF0(mul_conj_symbol(f, g));
}

/// Classical big Hankel operator: F^{1,m} is the Fock space itself.
inline PolyPoly apply_big(const PolyPoly& g, const PolyPoly& f) {
    return apply_tilde(g, 1, f);
}

/// The diagonal norm sequence n -> ||Htilde^N_{zbar^s} e_n||^2 for the
/// monomial symbol g = z^s, exact in the scalar field.
struct NormSequence {
    int s = 0;
    int N = 1;
    std::vector<Scalar> values; // index n = 0 .. n_max
    bool closed_form_used = false;
};

/// Closed form
///   ||Htilde^N_{zbar^s} e_n||^2
///     = (s!/m^s) { binom(n+s, s) - sum_{r=0}^{N-1} binom(n, s-r) binom(s, r) },
/// valid for every n >= 0 under the out-of-range binomial convention.
/// For s < N the brace vanishes (Vandermonde), for s = N it is
/// identically 1, for s > N it is a degree-(s-N) polynomial in n.
inline Scalar norm_sq_closed(int s, int N, int n) {
    if (s < 0 || n < 0) throw std::invalid_argument("norm_sq_closed: negative index");
    if (N < 1) throw std::invalid_argument("norm_sq_closed: N must be >= 1");
    Integer brace = binomial(n + s, s);
    for (int r = 0; r < N && r <= s; ++r) brace -= binomial(n, s - r) * binomial(s, r);
    if (brace == 0) return Scalar();
    return Scalar::monomial(-2 * s, Rational(factorial(s) * brace));
}

/// Gram path: e_n = m^((n+1)/2) z^n / sqrt(n!), so the squared norm is
/// (m^(n+1)/n!) <w, w> with w = (I - P_{F^{N,m}})(zbar^s z^n).
inline Scalar norm_sq_gram(int s, int N, int n) {
    if (s < 0 || n < 0) throw std::invalid_argument("norm_sq_gram: negative index");
    const PolyPoly w = apply_tilde(PolyPoly::monomial(0, s), N, PolyPoly::monomial(0, n));
    return Scalar::monomial(2 * (n + 1), Rational(Integer(1), factorial(n))) * inner(w, w);
}

/// Computes the sequence by BOTH paths and insists they coincide; a
/// mismatch is a library defect, not a user error.
inline NormSequence norm_sq_sequence(int s, int N, int n_max) {
    if (s < 0 || n_max < 0) throw std::invalid_argument("norm_sq_sequence: negative index");
    if (N < 1) throw std::invalid_argument("norm_sq_sequence: N must be >= 1");
    NormSequence seq;
    seq.s = s;
    seq.N = N;
    seq.closed_form_used = true;
    seq.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const Scalar closed = norm_sq_closed(s, N, n);
        if (closed != norm_sq_gram(s, N, n))
            throw VerificationError("norm_sq_sequence: closed form and Gram path disagree at s=" +
                                    std::to_string(s) + " N=" + std::to_string(N) +
                                    " n=" + std::to_string(n));
        seq.values.push_back(closed);
    }
    return seq;
}

/// <Htilde(zbar^s z^p), Htilde(zbar^s z^n)> for p != n.  The images of
/// the unnormalized monomials are returned; the normalizing factors
/// 1/sqrt(p! n!) are positive, so this vanishes iff the inner product of
/// the images of e_p, e_n does.  Contract: always zero.
inline Scalar cross_orthogonality(int s, int N, int p, int n) {
    if (p == n) throw std::invalid_argument("cross_orthogonality: requires p != n");
    if (s < 0 || p < 0 || n < 0) throw std::invalid_argument("cross_orthogonality: negative index");
    const PolyPoly g = PolyPoly::monomial(0, s);
    return inner(apply_tilde(g, N, PolyPoly::monomial(0, p)),
                 apply_tilde(g, N, PolyPoly::monomial(0, n)));
}

enum class OperatorKind { tilde, middleY };

enum class Verdict { zero, bounded_compact, bounded_noncompact, unbounded };

inline const char* kind_name(OperatorKind k) {
    return k == OperatorKind::tilde ? "tilde" : "middleY";
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::zero: return "zero";
        case Verdict::bounded_compact: return "bounded_compact";
        case Verdict::bounded_noncompact: return "bounded_noncompact";
        case Verdict::unbounded: return "unbounded";
    }
    return "?";
}

struct Classification {
    OperatorKind operator_kind = OperatorKind::tilde;
    int symbol_degree = -1; // -1 for the zero symbol
    int N = 1;
    Verdict verdict = Verdict::zero;
    std::optional<int> growth_degree; // nullopt: norm sequence identically zero
};

/// Exact finite-difference degree of the eventually-polynomial tail
/// n >= s of the sequence at m = 1.  Returns nullopt for the identically
/// zero sequence.  Requires values up to n = s + max(s-N, 0) + 2 so the
/// top difference level still holds two entries to confirm constancy.
inline std::optional<int> growth_degree(const NormSequence& seq) {
    bool all_zero = true;
    for (const auto& v : seq.values)
        if (!v.is_zero()) { all_zero = false; break; }
    if (all_zero) return std::nullopt;

    const int n_max = static_cast<int>(seq.values.size()) - 1;
    if (n_max < seq.s + std::max(seq.s - seq.N, 0) + 2)
        throw std::invalid_argument("growth_degree: need values up to n = s + (s-N) + 2");

    std::vector<Rational> cur;
    for (int n = seq.s; n <= n_max; ++n) cur.push_back(seq.values[static_cast<std::size_t>(n)].at_one());
    int deg = 0;
    auto constant = [](const std::vector<Rational>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != v[0]) return false;
        return true;
    };
    while (!constant(cur)) {
        std::vector<Rational> next;
        next.reserve(cur.size() - 1);
        for (std::size_t i = 1; i < cur.size(); ++i) next.push_back(cur[i] - cur[i - 1]);
        cur = std::move(next);
        ++deg;
        if (cur.size() < 2)
            throw std::invalid_argument("growth_degree: sequence too short to confirm degree");
    }
    return deg;
}

/// Degree rule for monomial-dominated polynomial symbols:
///   tilde:   deg < N zero, deg = N bounded (not compact), deg > N unbounded.
///   middleY: deg <= 0 zero (gbar f stays analytic), 0 < deg < N finite
///            rank hence compact, deg = N bounded (not compact),
///            deg > N unbounded.
/// Evidence: growth degree of the norm sequence of the dominant monomial.
inline Classification classify(const PolyPoly& g, int N, OperatorKind kind) {
    if (!g.is_analytic()) throw std::invalid_argument("classify: symbol must be analytic");
    if (N < 1) throw std::invalid_argument("classify: N must be >= 1");
    Classification c;
    c.operator_kind = kind;
    c.N = N;
    c.symbol_degree = g.analytic_degree();
    const int s = c.symbol_degree;
    if (kind == OperatorKind::tilde) {
        if (s < N) c.verdict = Verdict::zero;
        else if (s == N) c.verdict = Verdict::bounded_noncompact;
        else c.verdict = Verdict::unbounded;
    } else {
        if (s <= 0) c.verdict = Verdict::zero;
        else if (s < N) c.verdict = Verdict::bounded_compact;
        else if (s == N) c.verdict = Verdict::bounded_noncompact;
        else c.verdict = Verdict::unbounded;
    }
    if (s >= 0) {
        const int need = s + std::max(s - N, 0) + 2;
        c.growth_degree = growth_degree(norm_sq_sequence(s, N, need));
    }
    return c;
}

} // namespace polyfock
