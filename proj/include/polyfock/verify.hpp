#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "dbar.hpp"
#include "hankel.hpp"
#include "oracle.hpp"
#include "rng.hpp"

namespace polyfock {

/// Sweep bounds for the invariant battery.  The defaults reproduce the
/// full battery; scaled(v) caps the n-type ranges at v for quick runs,
/// and scaled(0) empties every sweep (a vacuous pass).
struct VerifyBounds {
    int seq_n_max = 40;
    int seq_s_max = 6;
    int seq_N_max = 4;
    int proj_max = 12;
    int proj_N_max = 5;
    int cross_n_max = 25;
    int cross_s_max = 5;
    int cross_N_max = 3;
    int identity_max = 30;
    int moment_n_max = 20;
    int moment_r_max = 10;
    int quad_a_max = 20;
    int quad_b_max = 10;
    int quad_c_max = 10;
    int ortho_idx_max = 8;
    int ortho_N_max = 4;
    int chain_trials = 50;
    int rank_trials = 200;
    std::uint64_t seed = 12345;
    bool inject_fault = false;

    static VerifyBounds scaled(int n_scale) {
        VerifyBounds b;
        if (n_scale < 0) return b;
        if (n_scale == 0) {
            b.seq_n_max = -1;
            b.proj_max = -1;
            b.cross_n_max = -1;
            b.identity_max = -1;
            b.moment_n_max = -1;
            b.quad_a_max = -1;
            b.ortho_idx_max = -1;
            b.chain_trials = 0;
            b.rank_trials = 0;
            return b;
        }
        b.seq_n_max = std::min(b.seq_n_max, n_scale);
        b.proj_max = std::min(b.proj_max, n_scale);
        b.cross_n_max = std::min(b.cross_n_max, n_scale);
        b.identity_max = std::min(b.identity_max, n_scale);
        b.moment_n_max = std::min(b.moment_n_max, n_scale);
        b.moment_r_max = std::min(b.moment_r_max, n_scale);
        b.quad_a_max = std::min(b.quad_a_max, n_scale);
        b.quad_b_max = std::min(b.quad_b_max, n_scale);
        b.quad_c_max = std::min(b.quad_c_max, n_scale);
        b.ortho_idx_max = std::min(b.ortho_idx_max, n_scale);
        return b;
    }
};

struct CheckResult {
    std::string name;
    long long cases = 0;
    long long failures = 0;
    bool passed() const { return failures == 0; }
    bool vacuous() const { return cases == 0; }
};

/// Exact rank at m = 1 of the Gram matrix of the given vectors.
inline int gram_rank_at_one(const std::vector<PolyPoly>& vs) {
    const std::size_t k = vs.size();
    std::vector<std::vector<Rational>> g(k, std::vector<Rational>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j) {
            const Rational v = inner(vs[i], vs[j]).at_one();
            g[i][j] = v;
            g[j][i] = v;
        }
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < k; ++col) {
        std::size_t pivot = row;
        while (pivot < k && g[pivot][col] == 0) ++pivot;
        if (pivot == k) continue;
        std::swap(g[pivot], g[row]);
        for (std::size_t r = row + 1; r < k; ++r) {
            if (g[r][col] == 0) continue;
            const Rational factor = g[r][col] / g[row][col];
            for (std::size_t c = col; c < k; ++c) g[r][c] -= factor * g[row][c];
        }
        ++rank;
        ++row;
    }
    return rank;
}

namespace detail {

inline bool close_rel(double got, double want, double rel, double abs_at_zero) {
    if (want == 0.0) return std::fabs(got) <= abs_at_zero;
    return std::fabs(got - want) <= rel * std::max(1.0, std::fabs(want));
}

/// All unnormalized F^{N,m} basis vectors with e1 index i <= idx_max.
inline std::vector<BasisElement> ortho_family(int N, int idx_max) {
    std::vector<BasisElement> fam;
    for (int i = 0; i <= idx_max; ++i)
        for (int r = 0; r < N; ++r) fam.push_back(basis_e1(i, r, N));
    for (int k = 1; k <= N - 1; ++k)
        for (int j = 0; j <= N - 1 - k; ++j) fam.push_back(basis_e2(j, k, N));
    return fam;
}

} // namespace detail

inline std::vector<CheckResult> run_verification(const VerifyBounds& b) {
    std::vector<CheckResult> results;

    {
        CheckResult c{"identity_gould"};
        for (int r = 0; r <= b.identity_max; ++r)
            for (int n = 0; n <= b.identity_max; ++n)
                for (int s = 0; s <= b.identity_max; ++s) {
                    ++c.cases;
                    if (!identity_gould(r, n, s)) ++c.failures;
                }
        results.push_back(c);
    }

    {
        CheckResult c{"identity_vandermonde"};
        for (int n = 0; n <= b.identity_max; ++n)
            for (int s = 0; s <= b.identity_max; ++s) {
                ++c.cases;
                if (!identity_vandermonde(n, s)) ++c.failures;
            }
        results.push_back(c);
    }

    {
        CheckResult c{"moment_closed_form"};
        for (int n = 0; n <= b.moment_n_max; ++n)
            for (int r = 0; r <= b.moment_r_max; ++r)
                for (int s = 0; s <= n; ++s) {
                    ++c.cases;
                    if (moment_I(n, r, n - s) != moment_I_closed(n, r, s)) ++c.failures;
                }
        results.push_back(c);
    }

    {
        CheckResult c{"projection_two_path"};
        for (int N = 1; N <= b.proj_N_max; ++N)
            for (int s = 0; s <= b.proj_max; ++s)
                for (int n = 0; n <= b.proj_max; ++n) {
                    ++c.cases;
                    if (project_monomial_F(s, n, N) !=
                        project_F_generic(PolyPoly::monomial(s, n), N))
                        ++c.failures;
                }
        results.push_back(c);
    }

    {
        CheckResult exact{"basis_orthogonality_exact"};
        CheckResult oracle{"basis_orthogonality_oracle"};
        const std::vector<Rational> ms = {Rational(1), Rational(3), Rational(1, 2)};
        for (int N = 1; b.ortho_idx_max >= 0 && N <= b.ortho_N_max; ++N) {
            const auto fam = detail::ortho_family(N, b.ortho_idx_max);
            int max_deg = 0;
            for (const auto& e : fam)
                for (const auto& [key, coef] : e.vec.terms())
                    max_deg = std::max(max_deg, key.first + key.second);
            const QuadRule rule = nodes_for_degree(2 * max_deg);
            for (std::size_t a = 0; a < fam.size(); ++a)
                for (std::size_t bb = a; bb < fam.size(); ++bb) {
                    const Scalar ip = inner(fam[a].vec, fam[bb].vec);
                    const Scalar want = (a == bb) ? fam[a].norm_sq : Scalar();
                    ++exact.cases;
                    if (ip != want) ++exact.failures;
                    for (const auto& m : ms) {
                        ++oracle.cases;
                        const double num = quad_inner(fam[a].vec, fam[bb].vec, m, rule);
                        if (!detail::close_rel(num, ip.eval(m), 1e-10, 1e-12)) ++oracle.failures;
                    }
                }
        }
        results.push_back(exact);
        results.push_back(oracle);
    }

    {
        CheckResult c{"norm_sequence_two_path"};
        for (int s = 0; b.seq_n_max >= 0 && s <= b.seq_s_max; ++s)
            for (int N = 1; N <= b.seq_N_max; ++N) {
                c.cases += b.seq_n_max + 1;
                try {
                    norm_sq_sequence(s, N, b.seq_n_max);
                } catch (const VerificationError&) {
                    ++c.failures;
                }
            }
        results.push_back(c);
    }

    {
        CheckResult c{"cross_orthogonality"};
        for (int s = 0; s <= b.cross_s_max && b.cross_n_max >= 0; ++s)
            for (int N = 1; N <= b.cross_N_max; ++N)
                for (int p = 0; p <= b.cross_n_max; ++p)
                    for (int n = p + 1; n <= b.cross_n_max; ++n) {
                        ++c.cases;
                        if (!cross_orthogonality(s, N, p, n).is_zero()) ++c.failures;
                    }
        results.push_back(c);
    }

    {
        CheckResult c{"norm_chain"};
        SeededRng rng(b.seed);
        for (int t = 0; t < b.chain_trials; ++t) {
            const PolyPoly g = rng.nonzero_analytic_poly(5);
            const PolyPoly f = rng.nonzero_analytic_poly(5);
            const PolyPoly small = apply_small(g, f);
            const PolyPoly big = apply_big(g, f);
            const Rational small_n = inner(small, small).at_one();
            const Rational big_n = inner(big, big).at_one();
            Rational prev_mid = -1;
            for (int N = 1; N <= 4; ++N) {
                ++c.cases;
                const PolyPoly mid = apply_middle_Y(g, N, f);
                const Rational mid_n = inner(mid, mid).at_one();
                bool ok = small_n <= mid_n && mid_n <= big_n;
                if (prev_mid >= 0 && mid_n > prev_mid) ok = false; // Y_{N+1} nested in Y_N
                prev_mid = mid_n;
                if (!ok) ++c.failures;
            }
        }
        results.push_back(c);
    }

    {
        CheckResult c{"finite_rank_difference"};
        SeededRng rng(b.seed + 1);
        const int per_N = b.rank_trials / 5;
        for (int N = 1; N <= 5 && per_N > 0; ++N) {
            std::vector<PolyPoly> images;
            images.reserve(static_cast<std::size_t>(per_N));
            for (int t = 0; t < per_N; ++t) {
                const PolyPoly g = rng.nonzero_analytic_poly(5);
                const PolyPoly f = rng.nonzero_analytic_poly(5);
                const PolyPoly diff = apply_middle_Y(g, N, f) - apply_tilde(g, N, f);
                ++c.cases;
                if (diff != project_corrector(mul_conj_symbol(f, g), N)) ++c.failures;
                images.push_back(diff);
            }
            ++c.cases;
            if (gram_rank_at_one(images) > N * (N - 1) / 2) ++c.failures;
        }
        results.push_back(c);
    }

    {
        CheckResult c{"quad_moment_oracle"};
        if (b.quad_a_max >= 0) {
            const QuadRule rule = nodes_for_degree(b.quad_a_max + b.quad_b_max);
            for (int a = 0; a <= b.quad_a_max; ++a)
                for (int bb = 0; bb <= b.quad_b_max; ++bb)
                    for (int cc = 0; cc <= b.quad_c_max; ++cc) {
                        ++c.cases;
                        double num = quad_moment(a, bb, cc, rule);
                        if (b.inject_fault && a == 2 && bb == 1 && cc == 1) num += 1.0;
                        const double want = moment_I(a, bb, cc).convert_to<double>();
                        if (!detail::close_rel(num, want, 1e-10, 1e-12)) ++c.failures;
                    }
        }
        results.push_back(c);
    }

    return results;
}

} // namespace polyfock
