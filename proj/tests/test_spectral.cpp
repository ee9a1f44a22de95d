#include <cmath>

#include <doctest.h>

#include "ctx/spectral.hpp"
#include "test_helpers.hpp"

using namespace ctx;

namespace {

NuCoefficients make_nu(Complex c0, Complex c1, Complex c2, Complex c3) {
    return NuCoefficients{c0, c1, c2, c3};
}

}  // namespace

TEST_CASE("probability-sum operator matches its hand-expanded matrix") {
    // Expanding the three projectors in the product basis gives
    //   [[1, -1/2, -1/2, 0], [-1/2, 1/2, 0, 0], [-1/2, 0, 1/2, 0], [0,0,0,1]].
    const double expected[4][4] = {{1.0, -0.5, -0.5, 0.0},
                                   {-0.5, 0.5, 0.0, 0.0},
                                   {-0.5, 0.0, 0.5, 0.0},
                                   {0.0, 0.0, 0.0, 1.0}};
    const CMatrix pi_s = build_pi_s();
    REQUIRE(pi_s.dim() == 4);
    CHECK(pi_s.is_hermitian(1e-14));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(std::abs(pi_s(i, j) - Complex{expected[i][j], 0.0}) <= 1e-14);
    CHECK(std::abs(pi_s.trace() - Complex{3.0, 0.0}) <= 1e-14);
}

TEST_CASE("probability-sum operator annihilates phi0 and scales nu3") {
    const CMatrix pi_s = build_pi_s();
    CHECK(pi_s.apply(phi0().amplitudes()).norm() <= 1e-14);

    const CVector nu3 = nu_basis()[3].amplitudes();
    const CVector should_be_zero = pi_s.apply(nu3) - Complex{1.5, 0.0} * nu3;
    CHECK(should_be_zero.norm() <= 1e-14);
}

TEST_CASE("nu basis is the printed orthonormal eigenbasis") {
    const auto& basis = nu_basis();
    const double r2 = 1.0 / std::sqrt(2.0);
    const double r6 = 1.0 / std::sqrt(6.0);

    // nu2 is exactly |1,1>.
    CHECK((basis[2].amplitudes() -
           product_state(Outcome::One, Outcome::One).amplitudes())
              .norm() <= 1e-15);

    // nu1 and nu3 entrywise as printed.
    const double nu1_expected[4] = {0.0, r2, -r2, 0.0};
    const double nu3_expected[4] = {2.0 * r6, -r6, -r6, 0.0};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(basis[1].amplitudes()[i] - Complex{nu1_expected[i], 0.0}) <=
              1e-15);
        CHECK(std::abs(basis[3].amplitudes()[i] - Complex{nu3_expected[i], 0.0}) <=
              1e-15);
    }

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Complex gram = inner(basis[i].amplitudes(), basis[j].amplitudes());
            const Complex expected = i == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            CHECK(std::abs(gram - expected) <= 1e-14);
        }
    }

    // nu1 is orthogonal to |a,a> by the symmetry between the two systems.
    CHECK(std::abs(inner(basis[1].amplitudes(),
                         product_state(Outcome::A, Outcome::A).amplitudes())) <=
          1e-15);
}

TEST_CASE("numeric eigensolver confirms the analytic decomposition") {
    const auto eig = hermitian_eigen(build_pi_s());
    const double expected[4] = {0.0, 0.5, 1.0, 1.5};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(eig.eigenvalues[i] - expected[i]) <= 1e-12);
        const double overlap =
            std::abs(inner(eig.eigenvectors[i], nu_basis()[i].amplitudes()));
        CHECK(std::abs(overlap - 1.0) <= 1e-10);
    }
}

TEST_CASE("to_nu of the named states") {
    const NuCoefficients at_phi0 = to_nu(phi0());
    CHECK(std::abs(at_phi0.c0 - Complex{1.0, 0.0}) <= 1e-14);
    CHECK(std::abs(at_phi0.c1) <= 1e-14);
    CHECK(std::abs(at_phi0.c2) <= 1e-14);
    CHECK(std::abs(at_phi0.c3) <= 1e-14);

    const NuCoefficients at_aa = to_nu(product_state(Outcome::A, Outcome::A));
    CHECK(std::abs(at_aa.c0 - Complex{-1.0 / (2.0 * std::sqrt(3.0)), 0.0}) <= 1e-14);
    CHECK(std::abs(at_aa.c1) <= 1e-14);
    CHECK(std::abs(at_aa.c2 - Complex{0.5, 0.0}) <= 1e-14);
    CHECK(std::abs(at_aa.c3 - Complex{std::sqrt(2.0 / 3.0), 0.0}) <= 1e-14);

    const NuCoefficients at_11 = to_nu(product_state(Outcome::One, Outcome::One));
    CHECK(std::abs(at_11.c2 - Complex{1.0, 0.0}) <= 1e-14);
    CHECK(std::abs(at_11.c0) <= 1e-14);
    CHECK(std::abs(at_11.c1) <= 1e-14);
    CHECK(std::abs(at_11.c3) <= 1e-14);
}

TEST_CASE("to_nu round-trips and preserves total probability") {
    std::mt19937_64 rng(77);
    for (int t = 0; t < 300; ++t) {
        const StateVector psi = ctxtest::random_state(rng);
        const NuCoefficients c = to_nu(psi);

        const double total = std::norm(c.c0) + std::norm(c.c1) + std::norm(c.c2) +
                             std::norm(c.c3);
        CHECK(std::abs(total - 1.0) <= 1e-12);

        const StateVector back = from_nu(c);
        CHECK((back.amplitudes() - psi.amplitudes()).norm() <= 1e-12);
    }
}

TEST_CASE("p_sum_from_nu frozen values") {
    CHECK(p_sum_from_nu(make_nu({1, 0}, {0, 0}, {0, 0}, {0, 0})) == 0.0);
    CHECK(std::abs(p_sum_from_nu(make_nu({0, 0}, {0, 0}, {0, 0}, {1, 0})) - 1.5) <=
          1e-15);
    const double r = 1.0 / std::sqrt(2.0);
    // Equal weight on the eigenvalues 1/2 and 1 averages to 3/4.
    CHECK(std::abs(p_sum_from_nu(make_nu({0, 0}, {r, 0}, {r, 0}, {0, 0})) - 0.75) <=
          1e-15);
}

TEST_CASE("p_ww_from_nu frozen values") {
    CHECK(std::abs(p_ww_from_nu(make_nu({1, 0}, {0, 0}, {0, 0}, {0, 0})) -
                   1.0 / 12.0) <= 1e-15);
    CHECK(p_ww_from_nu(make_nu({0, 0}, {1, 0}, {0, 0}, {0, 0})) <= 1e-15);
    CHECK(std::abs(p_ww_from_nu(make_nu({0, 0}, {0, 0}, {1, 0}, {0, 0})) - 0.25) <=
          1e-15);
}

TEST_CASE("coefficient-space formulas agree with Born probabilities") {
    // Central consistency check: the eigenvalue-weighted coefficient sum
    // and the interference expression must reproduce the direct Born
    // probabilities for arbitrary states.
    std::mt19937_64 rng(78);
    for (int t = 0; t < 1000; ++t) {
        const StateVector psi = ctxtest::random_state(rng);
        const NuCoefficients c = to_nu(psi);
        const ContextProbabilities p = context_probabilities(psi);
        CHECK(std::abs(p_sum_from_nu(c) - p.p_sum()) <= 1e-12);
        CHECK(std::abs(p_ww_from_nu(c) - p.p_ww_aa) <= 1e-12);
    }
}

TEST_CASE("p_sum_from_nu equals the operator expectation value") {
    const CMatrix pi_s = build_pi_s();
    std::mt19937_64 rng(79);
    for (int t = 0; t < 200; ++t) {
        const StateVector psi = ctxtest::random_state(rng);
        const Complex expectation =
            inner(psi.amplitudes(), pi_s.apply(psi.amplitudes()));
        CHECK(std::abs(expectation.imag()) <= 1e-12);
        CHECK(std::abs(p_sum_from_nu(to_nu(psi)) - expectation.real()) <= 1e-12);
    }
}
