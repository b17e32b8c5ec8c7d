#pragma once

#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "scalar.hpp"

namespace polyfock {

/// A polyanalytic polynomial: a finite sum  sum c_{jk} zbar^j z^k  with
/// Scalar coefficients, stored as a term map keyed by
/// (j = antiholomorphic degree, k = holomorphic degree).
///
/// The coefficients are real (rational in t = sqrt(m)), so conjugation
/// acts purely on the term keys by swapping j and k.
///
/// Canonical form: no zero coefficients are stored.
class PolyPoly {
public:
    using Key = std::pair<int, int>; // (j, k)

    PolyPoly() = default;

    static PolyPoly monomial(int j, int k, const Scalar& c = Scalar(1)) {
        if (j < 0 || k < 0) throw std::invalid_argument("PolyPoly::monomial: negative degree");
        PolyPoly p;
        if (!c.is_zero()) p.terms_[{j, k}] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    Scalar coefficient(int j, int k) const {
        auto it = terms_.find({j, k});
        return it == terms_.end() ? Scalar() : it->second;
    }

    /// true iff no antiholomorphic powers occur (an analytic polynomial)
    bool is_analytic() const {
        for (const auto& [key, c] : terms_)
            if (key.first != 0) return false;
        return true;
    }

    /// Degree in z of an analytic polynomial; -1 for the zero polynomial.
    int analytic_degree() const {
        if (!is_analytic()) throw std::invalid_argument("analytic_degree: polynomial has zbar terms");
        int deg = -1;
        for (const auto& [key, c] : terms_) deg = std::max(deg, key.second);
        return deg;
    }

    int max_zbar_degree() const {
        int deg = -1;
        for (const auto& [key, c] : terms_) deg = std::max(deg, key.first);
        return deg;
    }
    int max_z_degree() const {
        int deg = -1;
        for (const auto& [key, c] : terms_) deg = std::max(deg, key.second);
        return deg;
    }

    /// Complex conjugate: swaps zbar and z degrees (coefficients are real).
    PolyPoly conjugate() const {
        PolyPoly r;
        for (const auto& [key, c] : terms_) r.terms_[{key.second, key.first}] = c;
        return r;
    }

    PolyPoly operator-() const {
        PolyPoly r;
        for (const auto& [key, c] : terms_) r.terms_[key] = -c;
        return r;
    }

    PolyPoly& operator+=(const PolyPoly& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    PolyPoly& operator-=(const PolyPoly& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, -c);
        return *this;
    }

    friend PolyPoly operator+(PolyPoly a, const PolyPoly& b) { return a += b; }
    friend PolyPoly operator-(PolyPoly a, const PolyPoly& b) { return a -= b; }

    friend PolyPoly operator*(const PolyPoly& a, const PolyPoly& b) {
        PolyPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }

    PolyPoly scaled(const Scalar& c) const {
        PolyPoly r;
        if (c.is_zero()) return r;
        for (const auto& [key, coeff] : terms_) r.terms_[key] = coeff * c;
        return r;
    }

    friend bool operator==(const PolyPoly& a, const PolyPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PolyPoly& a, const PolyPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const PolyPoly& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [key, c] : p.terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (key.first > 0) os << "*zb^" << key.first;
            if (key.second > 0) os << "*z^" << key.second;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    void add_term(const Key& key, const Scalar& c) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(key, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Key, Scalar> terms_;
};

/// Gaussian moment of a monomial pair under dmu_m = (1/pi) e^{-m|z|^2} dA:
///
///   <zbar^a z^b, zbar^c z^d> = delta_{a+d, b+c} (a+d)! / m^(a+d+1).
///
/// The Kronecker delta is the sector selection rule: the product
/// zbar^(a+d) z^(b+c) integrates to zero unless its angular exponents
/// match, and the radial integral is a Gamma moment.
inline Scalar monomial_inner(int a, int b, int c, int d) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("monomial_inner: negative degree");
    if (a + d != b + c) return Scalar();
    const int p = a + d;
    return Scalar::monomial(-2 * (p + 1), Rational(factorial(p)));
}

/// L^2(mu_m) inner product, extended bilinearly from monomial_inner.
/// Conjugate-linearity in the second slot is plain linearity here because
/// all coefficients are real.
inline Scalar inner(const PolyPoly& f, const PolyPoly& g) {
    Scalar acc;
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms()) {
            if (kf.first + kg.second != kf.second + kg.first) continue;
            const int p = kf.first + kg.second;
            acc += cf * cg * Scalar::monomial(-2 * (p + 1), Rational(factorial(p)));
        }
    return acc;
}

/// Forms gbar * f for an analytic symbol g: conjugates g (z^k -> zbar^k)
/// and multiplies into f.  The symbol must have no zbar terms.
inline PolyPoly mul_conj_symbol(const PolyPoly& f, const PolyPoly& g) {
    if (!g.is_analytic())
        throw std::invalid_argument("mul_conj_symbol: symbol has antiholomorphic terms");
    return f * g.conjugate();
}

/// The Wirtinger derivative d/dzbar iterated `order` times:
/// zbar^j z^k -> j(j-1)...(j-order+1) zbar^(j-order) z^k.
inline PolyPoly dbar(const PolyPoly& f, int order) {
    if (order < 1) throw std::invalid_argument("dbar: order must be >= 1");
    PolyPoly r;
    for (const auto& [key, c] : f.terms()) {
        if (key.first < order) continue;
        const Scalar factor{Rational(falling_factorial(key.first, order))};
        r += PolyPoly::monomial(key.first - order, key.second, c * factor);
    }
    return r;
}

/// Splits f by sector d = k - j.  Distinct sectors are orthogonal, so
/// this is an orthogonal decomposition and every projection in the
/// library acts sector by sector.
inline std::map<int, PolyPoly> sector_decompose(const PolyPoly& f) {
    std::map<int, PolyPoly> parts;
    for (const auto& [key, c] : f.terms())
        parts[key.second - key.first] += PolyPoly::monomial(key.first, key.second, c);
    return parts;
}

} // namespace polyfock
