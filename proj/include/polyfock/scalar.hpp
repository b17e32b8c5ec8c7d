#pragma once

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rational.hpp"

namespace polyfock {

/// Exact scalar field used throughout: Laurent polynomials in t = m^(1/2)
/// with rational coefficients, where m > 0 is the Gaussian weight
/// parameter.  Every inner product, squared norm and projection
/// coefficient in the library is a value of this type, so results stay
/// exact for all m simultaneously; `eval` substitutes a concrete m.
///
/// Canonical form: no zero coefficients are stored; the zero scalar is
/// the empty term map.
class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    Scalar(long c) : Scalar(Rational(c)) {}
    Scalar(int c) : Scalar(Rational(c)) {}
    Scalar(const Integer& c) : Scalar(Rational(c)) {}

    /// c * t^h
    static Scalar monomial(int h, const Rational& c) {
        Scalar s;
        if (c != 0) s.terms_[h] = c;
        return s;
    }

    bool is_zero() const { return terms_.empty(); }

    /// true iff the scalar is a single term c * t^h (c != 0)
    bool is_unit() const { return terms_.size() == 1; }

    const std::map<int, Rational>& terms() const { return terms_; }

    Scalar operator-() const {
        Scalar r;
        for (const auto& [h, c] : terms_) r.terms_[h] = -c;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [h, c] : o.terms_) add_term(h, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [h, c] : o.terms_) add_term(h, -c);
        return *this;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ha, ca] : a.terms_)
            for (const auto& [hb, cb] : b.terms_) r.add_term(ha + hb, ca * cb);
        return r;
    }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Division by a unit c * t^h.  General scalar division is
    /// deliberately unsupported: every divisor arising in the library's
    /// formulas (squared norms of orthogonal vectors, normalization
    /// constants) is a single Laurent term.
    Scalar div_unit(const Scalar& unit) const {
        if (!unit.is_unit())
            throw std::invalid_argument("Scalar::div_unit: divisor is not a single Laurent term");
        const auto& [hu, cu] = *unit.terms_.begin();
        Scalar r;
        for (const auto& [h, c] : terms_) r.terms_[h - hu] = c / cu;
        return r;
    }

    /// Exact value at m = 1 (every t power collapses to 1).
    Rational at_one() const {
        Rational acc = 0;
        for (const auto& [h, c] : terms_) acc += c;
        return acc;
    }

    /// Floating-point value at a concrete m > 0: sum of c * m^(h/2).
    double eval(const Rational& m) const {
        if (m <= 0) throw std::domain_error("Scalar::eval: m must be positive");
        const double md = m.convert_to<double>();
        double acc = 0.0;
        for (const auto& [h, c] : terms_)
            acc += c.convert_to<double>() * std::pow(md, static_cast<double>(h) / 2.0);
        return acc;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
        if (s.is_zero()) return os << "0";
        bool first = true;
        for (const auto& [h, c] : s.terms_) {
            if (!first) os << " + ";
            first = false;
            os << c;
            if (h != 0) os << "*t^" << h;
        }
        return os;
    }

    std::string str() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

private:
    void add_term(int h, const Rational& c) {
        auto it = terms_.find(h);
        if (it == terms_.end()) {
            if (c != 0) terms_.emplace(h, c);
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    std::map<int, Rational> terms_;
};

} // namespace polyfock
