#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "laguerre.hpp"
#include "polypoly.hpp"

namespace polyfock {

/// Working precision of the quadrature oracle.  Plain double is not
/// enough: the integrands y^a L_b^c(y) reach ~1e23 while integrating to
/// 0, so meeting a 1e-10 contract through that cancellation needs ~35
/// guard digits.  Results are handed back as double at the end.
using OracleReal = boost::multiprecision::cpp_bin_float_50;

/// Gauss-Laguerre rule for the weight e^{-y} on (0, inf): exact (up to
/// rounding) on polynomials of degree <= 2*node_count - 1.
struct QuadRule {
    int node_count = 0;
    std::vector<OracleReal> nodes;
    std::vector<OracleReal> weights;
};

/// Golub-Welsch seeds, Newton-polished to oracle precision.  The L^0
/// recurrence gives the symmetric Jacobi matrix with diagonal 2q+1 and
/// off-diagonal q+1; its eigenvalues (double precision) seed a Newton
/// iteration on L_n, whose derivative is -L_{n-1}^1.  Weights use the
/// classical closed form w = x / ((n+1) L_{n+1}(x))^2.
inline QuadRule gauss_laguerre(int node_count) {
    if (node_count < 1 || node_count > 64)
        throw std::invalid_argument("gauss_laguerre: node_count out of range [1, 64]");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(node_count, node_count);
    for (int q = 0; q < node_count; ++q) {
        J(q, q) = 2.0 * q + 1.0;
        if (q + 1 < node_count) {
            J(q, q + 1) = q + 1.0;
            J(q + 1, q) = q + 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_laguerre: eigensolver failed");

    QuadRule rule;
    rule.node_count = node_count;
    rule.nodes.reserve(static_cast<std::size_t>(node_count));
    rule.weights.reserve(static_cast<std::size_t>(node_count));
    const int n = node_count;
    for (int q = 0; q < n; ++q) {
        OracleReal x(es.eigenvalues()(q));
        for (int it = 0; it < 6; ++it)
            x += laguerre_eval(n, 0, x) / laguerre_eval(n - 1, 1, x);
        const OracleReal l = OracleReal(n + 1) * laguerre_eval(n + 1, 0, x);
        rule.nodes.push_back(x);
        rule.weights.push_back(x / (l * l));
    }
    return rule;
}

/// Smallest rule exact for radial degree `deg`, plus two guard nodes.
inline QuadRule nodes_for_degree(int deg) {
    if (deg < 0) throw std::invalid_argument("nodes_for_degree: negative degree");
    const int wanted = (deg + 2) / 2 + 2;
    return gauss_laguerre(wanted > 64 ? 64 : wanted);
}

/// Numerical I_{a,b,c} = integral of y^a L_b^c(y) e^{-y}.
inline double quad_moment(int a, int b, int c, const QuadRule& rule) {
    if (a < 0 || b < 0 || c < 0) throw std::invalid_argument("quad_moment: negative index");
    if (2 * rule.node_count - 1 < a + b)
        throw std::invalid_argument("quad_moment: insufficient node_count for degree");
    OracleReal acc = 0;
    for (int q = 0; q < rule.node_count; ++q) {
        const OracleReal& y = rule.nodes[static_cast<std::size_t>(q)];
        acc += rule.weights[static_cast<std::size_t>(q)] * pow(y, a) * laguerre_eval(b, c, y);
    }
    return acc.convert_to<double>();
}

namespace detail {

/// Scalar evaluated in oracle precision: sum of c * t^h with t = sqrt(m).
inline OracleReal scalar_eval_hp(const Scalar& s, const OracleReal& t) {
    OracleReal acc = 0;
    for (const auto& [h, c] : s.terms()) {
        const OracleReal th = h >= 0 ? pow(t, h) : 1 / pow(t, -h);
        acc += c.convert_to<OracleReal>() * th;
    }
    return acc;
}

} // namespace detail

/// Numerical <f, g> in L^2(mu_m).  The angular integral is done
/// analytically (the sector Kronecker delta); only the radial Gamma
/// moments are sampled, after the substitution y = m|z|^2 which turns
/// <zbar^a z^b, zbar^c z^d> into m^{-(p+1)} integral y^p e^{-y} dy with
/// p = a + d.
inline double quad_inner(const PolyPoly& f, const PolyPoly& g, const Rational& m,
                         const QuadRule& rule) {
    if (m <= 0) throw std::domain_error("quad_inner: m must be positive");
    int max_p = -1;
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
            if (kf.first + kg.second == kf.second + kg.first && kf.first + kg.second > max_p)
                max_p = kf.first + kg.second;
    if (max_p < 0) return 0.0; // no sector-matched term pairs
    if (2 * rule.node_count - 1 < max_p)
        throw std::invalid_argument("quad_inner: insufficient node_count for degree");

    const OracleReal mh(m);
    const OracleReal th = sqrt(mh);
    std::vector<OracleReal> radial(static_cast<std::size_t>(max_p) + 1, OracleReal(0));
    for (int p = 0; p <= max_p; ++p)
        for (int q = 0; q < rule.node_count; ++q)
            radial[static_cast<std::size_t>(p)] +=
                rule.weights[static_cast<std::size_t>(q)] *
                pow(rule.nodes[static_cast<std::size_t>(q)], p);

    OracleReal acc = 0;
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms()) {
            if (kf.first + kg.second != kf.second + kg.first) continue;
            const int p = kf.first + kg.second;
            acc += detail::scalar_eval_hp(cf, th) * detail::scalar_eval_hp(cg, th) *
                   radial[static_cast<std::size_t>(p)] / pow(mh, p + 1);
        }
    return acc.convert_to<double>();
}

} // namespace polyfock
