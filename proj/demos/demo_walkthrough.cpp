// A guided tour: projections, Hankel norm sequences, classification, and
// the minimal-norm dbar solver, all in exact arithmetic.

#include <iostream>

#include <polyfock/polyfock.hpp>

using namespace polyfock;

int main() {
    std::cout << "== Projection onto F^{N,m} ==\n";
    std::cout << "P_{F^{2,m}}(zb z)   = " << project_monomial_F(1, 1, 2) << "\n";
    std::cout << "P_{F^{1,m}}(zb z)   = " << project_monomial_F(1, 1, 1) << "\n";
    std::cout << "P_{F^{3,m}}(zb^5 z) = " << project_monomial_F(5, 1, 3) << "\n";
    std::cout << "(t stands for sqrt(m); t^-2 is 1/m)\n\n";

    std::cout << "== Hankel norm sequences ||Htilde^N_{zb^s} e_n||^2 ==\n";
    const NormSequence bounded = norm_sq_sequence(2, 2, 8);
    std::cout << "s = N = 2 (bounded, constant s!/m^s for n >= s):\n  ";
    for (const auto& v : bounded.values) std::cout << v << "  ";
    std::cout << "\n";
    const NormSequence unbounded = norm_sq_sequence(3, 1, 8);
    std::cout << "s = 3, N = 1 (unbounded, degree s-N = 2 growth at m = 1):\n  ";
    for (const auto& v : unbounded.values) std::cout << v.at_one() << "  ";
    std::cout << "\n\n";

    std::cout << "== Classification ==\n";
    for (int deg : {1, 2, 3}) {
        const PolyPoly g = PolyPoly::monomial(0, deg);
        const Classification c = classify(g, 2, OperatorKind::tilde);
        std::cout << "tilde, g = z^" << deg << ", N = 2: " << verdict_name(c.verdict);
        if (c.growth_degree) std::cout << " (growth degree " << *c.growth_degree << ")";
        std::cout << "\n";
    }
    std::cout << "\n";

    std::cout << "== Minimal-norm solution of dbar^2 u = z ==\n";
    const SolutionReport rep = solve_min_norm(PolyPoly::monomial(0, 1), 2);
    std::cout << "u           = " << rep.u << "\n";
    std::cout << "residual ok = " << (rep.residual_ok ? "yes" : "no") << "\n";
    std::cout << "u | F^{2,m} = " << (rep.orthogonal_ok ? "orthogonal" : "NOT orthogonal") << "\n";
    std::cout << "||u||^2     = " << rep.norm_sq << "\n";
    std::cout << "minimal among u+h over 25 random kernel elements h: "
              << (verify_minimality(rep, 2, 25, 7) ? "yes" : "no") << "\n";
    return 0;
}
