#include <catch2/catch_amalgamated.hpp>

#include <polyfock/polyfock.hpp>

#include <stdexcept>

using namespace polyfock;

namespace {

const PolyPoly zb = PolyPoly::monomial(1, 0);
const PolyPoly z = PolyPoly::monomial(0, 1);
const PolyPoly one = PolyPoly::monomial(0, 0);

PolyPoly zpow(int n) { return PolyPoly::monomial(0, n); }

} // namespace

TEST_CASE("big Hankel frozen values", "[hankel]") {
    // H_z z^n = zbar z^n - (n/m) z^(n-1).
    CHECK(apply_big(z, one) == zb);
    for (int n = 1; n <= 6; ++n)
        CHECK(apply_big(z, zpow(n)) ==
              zb * zpow(n) - zpow(n - 1).scaled(Scalar::monomial(-2, Rational(n))));

    // Analytic symbols of degree 0 give the zero operator.
    CHECK(apply_big(one.scaled(Scalar(7)), zpow(3)).is_zero());
    CHECK(apply_big(PolyPoly(), zpow(3)).is_zero());
}

TEST_CASE("small Hankel frozen values", "[hankel]") {
    CHECK(apply_small(z, one) == zb);
    CHECK(apply_small(z, z).is_zero());
    CHECK(apply_small(z * z, one) == zb * zb);
    CHECK(apply_small(z * z, z) == zb.scaled(Scalar::monomial(-2, Rational(2))));
    CHECK(apply_small(one, zpow(4)).is_zero());
}

TEST_CASE("middle and tilde operators on frozen inputs", "[hankel]") {
    // zbar lies in F^{2,m} but S^{2,m} has no negative sectors.
    CHECK(apply_tilde(z, 2, one).is_zero());
    CHECK(apply_middle_Y(z, 2, one) == zb);

    // N = 1 collapses all three large operators onto the big one.
    SeededRng rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        const PolyPoly g = rng.analytic_poly(4);
        const PolyPoly f = rng.nonzero_analytic_poly(4);
        const PolyPoly big = apply_big(g, f);
        CHECK(apply_tilde(g, 1, f) == big);
        CHECK(apply_middle_Y(g, 1, f) == big);
    }

    CHECK_THROWS_AS(apply_tilde(z, 1, zb), std::invalid_argument);
    CHECK_THROWS_AS(apply_middle_Y(z, 1, zb), std::invalid_argument);
    CHECK_THROWS_AS(apply_small(z, zb), std::invalid_argument);
    CHECK_THROWS_AS(apply_tilde(zb, 1, z), std::invalid_argument);
}

TEST_CASE("middle minus tilde is the finite-rank corrector term", "[hankel]") {
    SeededRng rng(600);
    for (int trial = 0; trial < 12; ++trial) {
        const int N = rng.uniform_int(1, 5);
        const PolyPoly g = rng.analytic_poly(4);
        const PolyPoly f = rng.nonzero_analytic_poly(4);
        const PolyPoly diff = apply_middle_Y(g, N, f) - apply_tilde(g, N, f);
        CHECK(diff == project_corrector(mul_conj_symbol(f, g), N));
    }
}

TEST_CASE("norm chain small <= middle <= big", "[hankel]") {
    SeededRng rng(1234);
    for (int trial = 0; trial < 12; ++trial) {
        const int N = rng.uniform_int(1, 4);
        const PolyPoly g = rng.analytic_poly(5);
        const PolyPoly f = rng.nonzero_analytic_poly(5);
        const Rational small_n = inner(apply_small(g, f), apply_small(g, f)).at_one();
        const Rational mid_n =
            inner(apply_middle_Y(g, N, f), apply_middle_Y(g, N, f)).at_one();
        const Rational big_n = inner(apply_big(g, f), apply_big(g, f)).at_one();
        CHECK(small_n <= mid_n);
        CHECK(mid_n <= big_n);

        // S^{N,m} grows with N, so the middle norms shrink.
        const PolyPoly next = apply_middle_Y(g, N + 1, f);
        CHECK(inner(next, next).at_one() <= mid_n);
    }
}

TEST_CASE("norm_sq_closed frozen values", "[hankel][norms]") {
    // s = N: constant s!/m^s.
    for (int n = 0; n <= 12; ++n) {
        CHECK(norm_sq_closed(1, 1, n) == Scalar::monomial(-2, Rational(1)));
        CHECK(norm_sq_closed(2, 2, n) == Scalar::monomial(-4, Rational(2)));
        CHECK(norm_sq_closed(3, 3, n) == Scalar::monomial(-6, Rational(6)));
    }

    // s = 2, N = 1: 2(2n+1)/m^2, the linear growth 4n+2 at m = 1.
    for (int n = 0; n <= 12; ++n) {
        CHECK(norm_sq_closed(2, 1, n) == Scalar::monomial(-4, Rational(4 * n + 2)));
        CHECK(norm_sq_closed(2, 1, n).at_one() == Rational(4 * n + 2));
    }

    // s < N annihilates every basis vector.
    for (int n = 0; n <= 10; ++n) {
        CHECK(norm_sq_closed(1, 2, n).is_zero());
        CHECK(norm_sq_closed(2, 3, n).is_zero());
        CHECK(norm_sq_closed(0, 1, n).is_zero());
    }

    CHECK_THROWS_AS(norm_sq_closed(-1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(norm_sq_closed(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(norm_sq_closed(0, 1, -1), std::invalid_argument);
}

TEST_CASE("Gram path reproduces the closed form", "[hankel][norms]") {
    for (int s = 0; s <= 4; ++s)
        for (int N = 1; N <= 3; ++N)
            for (int n = 0; n <= 10; ++n)
                CHECK(norm_sq_gram(s, N, n) == norm_sq_closed(s, N, n));
}

TEST_CASE("norm_sq_sequence is the verified table", "[hankel][norms]") {
    const NormSequence seq = norm_sq_sequence(3, 2, 9);
    CHECK(seq.s == 3);
    CHECK(seq.N == 2);
    CHECK(seq.closed_form_used);
    REQUIRE(seq.values.size() == 10);
    for (int n = 0; n <= 9; ++n)
        CHECK(seq.values[static_cast<std::size_t>(n)] == norm_sq_closed(3, 2, n));

    // Norms are nonnegative, and strictly positive once s >= N.
    for (int s = 0; s <= 5; ++s)
        for (int N = 1; N <= 4; ++N)
            for (const auto& v : norm_sq_sequence(s, N, 8).values) {
                CHECK(v.at_one() >= 0);
                if (s >= N) CHECK(v.at_one() > 0);
            }
}

TEST_CASE("distinct basis vectors map to orthogonal images", "[hankel]") {
    for (int s = 0; s <= 4; ++s)
        for (int N = 1; N <= 2; ++N)
            for (int p = 0; p <= 8; ++p)
                for (int n = p + 1; n <= 8; ++n)
                    CHECK(cross_orthogonality(s, N, p, n).is_zero());

    CHECK_THROWS_AS(cross_orthogonality(2, 1, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(cross_orthogonality(-1, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("growth_degree reads off the polynomial tail", "[hankel][norms]") {
    CHECK(growth_degree(norm_sq_sequence(4, 2, 8)) == 2);
    CHECK(growth_degree(norm_sq_sequence(3, 3, 5)) == 0);
    CHECK(growth_degree(norm_sq_sequence(2, 1, 5)) == 1);
    CHECK(growth_degree(norm_sq_sequence(5, 1, 11)) == 4);
    CHECK_FALSE(growth_degree(norm_sq_sequence(1, 2, 8)).has_value());

    // One value short of the contract: the top difference level cannot
    // be confirmed constant.
    CHECK_THROWS_AS(growth_degree(norm_sq_sequence(4, 2, 7)), std::invalid_argument);
}

TEST_CASE("classify applies the degree rule", "[hankel][classify]") {
    const PolyPoly z3 = zpow(3);

    SECTION("tilde") {
        const Classification c = classify(z3, 1, OperatorKind::tilde);
        CHECK(c.operator_kind == OperatorKind::tilde);
        CHECK(c.symbol_degree == 3);
        CHECK(c.N == 1);
        CHECK(c.verdict == Verdict::unbounded);
        CHECK(c.growth_degree == 2);

        CHECK(classify(z, 1, OperatorKind::tilde).verdict == Verdict::bounded_noncompact);
        CHECK(classify(z, 1, OperatorKind::tilde).growth_degree == 0);
        CHECK(classify(z, 2, OperatorKind::tilde).verdict == Verdict::zero);
        CHECK_FALSE(classify(z, 2, OperatorKind::tilde).growth_degree.has_value());
        CHECK(classify(one.scaled(Scalar(7)), 1, OperatorKind::tilde).verdict == Verdict::zero);
    }

    SECTION("middleY") {
        CHECK(classify(one.scaled(Scalar(7)), 2, OperatorKind::middleY).verdict ==
              Verdict::zero);
        CHECK(classify(z, 2, OperatorKind::middleY).verdict == Verdict::bounded_compact);
        CHECK(classify(z * z, 2, OperatorKind::middleY).verdict ==
              Verdict::bounded_noncompact);
        CHECK(classify(z3, 2, OperatorKind::middleY).verdict == Verdict::unbounded);
        CHECK(classify(z3, 2, OperatorKind::middleY).growth_degree == 1);
        CHECK(classify(z, 1, OperatorKind::middleY).verdict == Verdict::bounded_noncompact);
    }

    SECTION("zero symbol") {
        const Classification c = classify(PolyPoly(), 2, OperatorKind::tilde);
        CHECK(c.symbol_degree == -1);
        CHECK(c.verdict == Verdict::zero);
        CHECK_FALSE(c.growth_degree.has_value());
    }

    SECTION("validation") {
        CHECK_THROWS_AS(classify(zb, 1, OperatorKind::tilde), std::invalid_argument);
        CHECK_THROWS_AS(classify(z, 0, OperatorKind::tilde), std::invalid_argument);
    }

    SECTION("names") {
        CHECK(std::string(kind_name(OperatorKind::tilde)) == "tilde");
        CHECK(std::string(kind_name(OperatorKind::middleY)) == "middleY");
        CHECK(std::string(verdict_name(Verdict::zero)) == "zero");
        CHECK(std::string(verdict_name(Verdict::bounded_compact)) == "bounded_compact");
        CHECK(std::string(verdict_name(Verdict::bounded_noncompact)) == "bounded_noncompact");
        CHECK(std::string(verdict_name(Verdict::unbounded)) == "unbounded");
    }
}
