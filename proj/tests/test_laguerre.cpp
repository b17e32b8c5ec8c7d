#include <catch2/catch_amalgamated.hpp>

#include <polyfock/laguerre.hpp>

#include <stdexcept>

using namespace polyfock;

namespace {

Rational eval_from_coeffs(const LaguerrePoly& p, const Rational& x) {
    Rational acc = 0;
    Rational pow = 1;
    for (const Rational& c : p.coeffs) {
        acc += c * pow;
        pow *= x;
    }
    return acc;
}

} // namespace

TEST_CASE("laguerre_coeffs small closed forms", "[laguerre]") {
    // L_0^a = 1 for every a.
    for (int a = 0; a <= 4; ++a) {
        const auto p = laguerre_coeffs(0, a);
        REQUIRE(p.coeffs.size() == 1);
        CHECK(p.coeffs[0] == 1);
    }

    // L_1^1 = 2 - y.
    const auto l11 = laguerre_coeffs(1, 1);
    REQUIRE(l11.coeffs.size() == 2);
    CHECK(l11.coeffs[0] == 2);
    CHECK(l11.coeffs[1] == -1);

    // L_2^1 = 3 - 3y + y^2/2.
    const auto l21 = laguerre_coeffs(2, 1);
    REQUIRE(l21.coeffs.size() == 3);
    CHECK(l21.coeffs[0] == 3);
    CHECK(l21.coeffs[1] == -3);
    CHECK(l21.coeffs[2] == Rational(1, 2));

    // L_2^0 = 1 - 2y + y^2/2.
    const auto l20 = laguerre_coeffs(2, 0);
    REQUIRE(l20.coeffs.size() == 3);
    CHECK(l20.coeffs[0] == 1);
    CHECK(l20.coeffs[1] == -2);
    CHECK(l20.coeffs[2] == Rational(1, 2));

    CHECK_THROWS_AS(laguerre_coeffs(-1, 0), std::invalid_argument);
}

TEST_CASE("laguerre_eval recurrence matches the coefficient expansion", "[laguerre]") {
    // Rational instantiation, exact equality.
    CHECK(laguerre_eval(2, 0, Rational(3)) == Rational(-1, 2));
    for (int k = 0; k <= 6; ++k)
        for (int a = 0; a <= 3; ++a) {
            const auto p = laguerre_coeffs(k, a);
            for (const auto& x : {Rational(0), Rational(1), Rational(-2), Rational(5, 3)})
                CHECK(laguerre_eval(k, a, x) == eval_from_coeffs(p, x));
        }

    // Double instantiation of the same recurrence.
    CHECK(laguerre_eval(2, 0, 3.0) == Catch::Approx(-0.5));
    CHECK(laguerre_eval(0, 2, 7.5) == Catch::Approx(1.0));
}

TEST_CASE("moment_I hand values", "[laguerre]") {
    // I(a, 0, c) = a! since L_0^c = 1.
    CHECK(moment_I(0, 0, 0) == 1);
    CHECK(moment_I(1, 0, 0) == 1);
    CHECK(moment_I(4, 0, 2) == 24);

    // L_1^1 = 2 - y: I(2, 1, 1) = 2*2! - 3! = -2.
    CHECK(moment_I(2, 1, 1) == -2);

    // L_1^0 = 1 - y: I(1, 1, 0) = 1! - 2! = -1.
    CHECK(moment_I(1, 1, 0) == -1);

    // Orthogonality against 1 = L_0: I(0, b, 0) = 0 for b >= 1.
    for (int b = 1; b <= 8; ++b) CHECK(moment_I(0, b, 0) == 0);
}

TEST_CASE("moment_I agrees with its closed form", "[laguerre]") {
    // moment_I_closed(n, r, s) = I(n, r, n - s), shifted so the closed
    // form's binomial argument is explicit.
    for (int n = 0; n <= 12; ++n)
        for (int s = 0; s <= n; ++s)
            for (int r = 0; r <= 6; ++r)
                CHECK(moment_I(n, r, n - s) == moment_I_closed(n, r, s));

    CHECK_THROWS_AS(moment_I_closed(2, 0, 3), std::invalid_argument);
}

TEST_CASE("binomial identities hold on a block", "[laguerre]") {
    for (int n = 0; n <= 12; ++n)
        for (int s = 0; s <= 12; ++s) {
            CHECK(identity_vandermonde(n, s));
            for (int r = 0; r <= 12; ++r) CHECK(identity_gould(r, n, s));
        }
}
