#include <catch2/catch_amalgamated.hpp>

#include <polyfock/polyfock.hpp>

#include <stdexcept>

using namespace polyfock;

namespace {

const PolyPoly zb = PolyPoly::monomial(1, 0);
const PolyPoly z = PolyPoly::monomial(0, 1);
const PolyPoly one = PolyPoly::monomial(0, 0);

} // namespace

TEST_CASE("project_monomial_F frozen values", "[projection]") {
    // P_{F^{1,m}}(zbar z) = 1/m.
    CHECK(project_monomial_F(1, 1, 1) == one.scaled(Scalar::monomial(-2, Rational(1))));

    // zbar z already lies in F^{2,m}.
    CHECK(project_monomial_F(1, 1, 2) == zb * z);

    // Sector -4 is not reachable in F^{3,m}.
    CHECK(project_monomial_F(5, 1, 3).is_zero());

    // Analytic monomials are fixed for every N.
    for (int n = 0; n <= 6; ++n)
        for (int N = 1; N <= 3; ++N)
            CHECK(project_monomial_F(0, n, N) == PolyPoly::monomial(0, n));

    // zbar itself lies in F^{2,m}; its sector is absent from F^{1,m}.
    CHECK(project_monomial_F(1, 0, 2) == zb);
    CHECK(project_monomial_F(1, 0, 1).is_zero());
    CHECK(project_monomial_F(2, 0, 2).is_zero());

    // P_{F^{2,m}}(zbar^2 z) = (2/m) zbar.
    CHECK(project_monomial_F(2, 1, 2) == zb.scaled(Scalar::monomial(-2, Rational(2))));

    CHECK_THROWS_AS(project_monomial_F(-1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(project_monomial_F(0, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(project_monomial_F(0, 0, 0), std::invalid_argument);
}

TEST_CASE("closed form equals basis expansion on a block", "[projection]") {
    for (int N = 1; N <= 4; ++N)
        for (int s = 0; s <= 8; ++s)
            for (int n = 0; n <= 8; ++n)
                CHECK(project_monomial_F(s, n, N) ==
                      project_F_generic(PolyPoly::monomial(s, n), N));
}

TEST_CASE("projection is idempotent, self-adjoint, and Pythagorean", "[projection]") {
    SeededRng rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        const int N = rng.uniform_int(1, 4);
        const PolyPoly f = rng.polyanalytic_poly(3, 4);
        const PolyPoly g = rng.polyanalytic_poly(3, 4);
        const PolyPoly pf = project_F_generic(f, N);
        const PolyPoly pg = project_F_generic(g, N);

        CHECK(project_F_generic(pf, N) == pf);
        CHECK(inner(pf, g) == inner(f, pg));
        CHECK(inner(f, f) == inner(pf, pf) + inner(f - pf, f - pf));

        // The image lies in ker dbar^N, the residual is orthogonal to it.
        if (!pf.is_zero()) CHECK(dbar(pf, N).is_zero());
        CHECK(inner(f - pf, pf).is_zero());
    }
}

TEST_CASE("projection fixes the subspace", "[projection]") {
    SeededRng rng(4242);
    for (int trial = 0; trial < 10; ++trial) {
        const int N = rng.uniform_int(1, 4);
        const PolyPoly h = rng.kernel_element(N, 6);
        CHECK(project_F_generic(h, N) == h);
    }
}

TEST_CASE("sector basis of S^{N,m}", "[projection]") {
    // N = 1: single vector z^d with norm^2 = d!/m^(d+1).
    for (int d = 0; d <= 5; ++d) {
        const SectorBasisS sb = build_sector_basis_S(1, d);
        REQUIRE(sb.vectors.size() == 1);
        CHECK(sb.vectors[0].vec == PolyPoly::monomial(0, d));
        CHECK(sb.vectors[0].norm_sq ==
              Scalar::monomial(-2 * (d + 1), Rational(factorial(d))));
    }

    // N = 2, sector 0: Gram-Schmidt of {1, zbar z}.
    const SectorBasisS sb = build_sector_basis_S(2, 0);
    REQUIRE(sb.vectors.size() == 2);
    CHECK(sb.vectors[0].vec == one);
    CHECK(sb.vectors[0].norm_sq == Scalar::monomial(-2, Rational(1)));
    CHECK(sb.vectors[1].vec == zb * z - one.scaled(Scalar::monomial(-2, Rational(1))));
    CHECK(sb.vectors[1].norm_sq == Scalar::monomial(-6, Rational(1)));

    // Pairwise orthogonality across a larger slice.
    for (int N = 1; N <= 4; ++N)
        for (int d = 0; d <= 4; ++d) {
            const SectorBasisS basis = build_sector_basis_S(N, d);
            REQUIRE(basis.vectors.size() == static_cast<std::size_t>(N));
            for (std::size_t p = 0; p < basis.vectors.size(); ++p) {
                CHECK(inner(basis.vectors[p].vec, basis.vectors[p].vec) ==
                      basis.vectors[p].norm_sq);
                for (std::size_t q = p + 1; q < basis.vectors.size(); ++q)
                    CHECK(inner(basis.vectors[p].vec, basis.vectors[q].vec).is_zero());
            }
        }

    CHECK_THROWS_AS(build_sector_basis_S(2, -1), std::invalid_argument);
    CHECK_THROWS_AS(build_sector_basis_S(0, 0), std::invalid_argument);
}

TEST_CASE("project_S drops negative sectors and contracts", "[projection]") {
    CHECK(project_S(zb, 2).is_zero());
    CHECK(project_S(zb * zb, 3).is_zero());

    // S^{1,m} = F^{1,m}: the two projections agree.
    SeededRng rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        const PolyPoly f = rng.polyanalytic_poly(3, 4);
        CHECK(project_S(f, 1) == project_F_generic(f, 1));

        // Nested ranges S^{1} c S^{2} c ... give nondecreasing norms,
        // all bounded by ||f||^2 (evaluated at m = 1).
        Rational prev = 0;
        for (int N = 1; N <= 4; ++N) {
            const PolyPoly pf = project_S(f, N);
            const Rational cur = inner(pf, pf).at_one();
            CHECK(cur >= prev);
            prev = cur;
        }
        CHECK(prev <= inner(f, f).at_one());
    }
}

TEST_CASE("project_conjF0 frozen values and idempotence", "[projection]") {
    CHECK(project_conjF0(zb) == zb);
    CHECK(project_conjF0(zb * zb) == zb * zb);
    CHECK(project_conjF0(one).is_zero());
    CHECK(project_conjF0(z).is_zero());
    CHECK(project_conjF0(zb * z).is_zero());

    // <zbar^2 z, zbar> = 2/m^3 against ||zbar||^2 = 1/m^2.
    CHECK(project_conjF0(zb * zb * z) == zb.scaled(Scalar::monomial(-2, Rational(2))));

    const PolyPoly f = (zb * zb).scaled(Scalar(3)) + z + one.scaled(Scalar(5));
    CHECK(project_conjF0(f) == (zb * zb).scaled(Scalar(3)));

    SeededRng rng(31);
    for (int trial = 0; trial < 8; ++trial) {
        const PolyPoly g = rng.polyanalytic_poly(4, 3);
        const PolyPoly pg = project_conjF0(g);
        CHECK(project_conjF0(pg) == pg);
        CHECK(inner(g - pg, pg).is_zero());
    }
}

TEST_CASE("project_corrector spans the strictly lower triangle", "[projection]") {
    SeededRng rng(55);
    for (int trial = 0; trial < 8; ++trial)
        CHECK(project_corrector(rng.polyanalytic_poly(3, 3), 1).is_zero());

    CHECK(project_corrector(zb, 2) == zb);
    CHECK(project_corrector(zb, 3) == zb);
    CHECK(project_corrector(zb * zb, 2).is_zero());
    CHECK(project_corrector(zb * zb, 3) == zb * zb);
    CHECK(project_corrector(z, 4).is_zero());
}

TEST_CASE("F^{N,m} splits as S^{N,m} plus the corrector space", "[projection]") {
    SeededRng rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        const int N = rng.uniform_int(1, 4);
        const PolyPoly f = rng.polyanalytic_poly(3, 4);
        const PolyPoly ps = project_S(f, N);
        const PolyPoly pc = project_corrector(f, N);
        CHECK(project_F_generic(f, N) == ps + pc);
        CHECK(inner(ps, pc).is_zero());
    }
}

TEST_CASE("gram_schmidt drops dependent vectors", "[projection]") {
    // {1, z, 3z} collapses to two orthogonal vectors.
    const std::vector<PolyPoly> raw{one, z, z.scaled(Scalar(3))};
    const auto basis = gram_schmidt(raw);
    REQUIRE(basis.size() == 2);
    CHECK(inner(basis[0].vec, basis[1].vec).is_zero());

    // project_onto reproduces members of the span.
    const PolyPoly f = one.scaled(Scalar(2)) + z.scaled(Scalar(Rational(1, 3)));
    CHECK(project_onto(f, basis) == f);
    CHECK(project_onto(zb, basis).is_zero());
}
