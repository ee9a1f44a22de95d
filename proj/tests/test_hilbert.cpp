#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "ctx/hilbert.hpp"
#include "ctx/spectral.hpp"
#include "test_helpers.hpp"

using namespace ctx;

TEST_CASE("single-system bases are mutually unbiased") {
    const CVector a = basis_state(Outcome::A);
    const CVector b = basis_state(Outcome::B);
    const CVector zero = basis_state(Outcome::Zero);
    const CVector one = basis_state(Outcome::One);
    const double r = 1.0 / std::sqrt(2.0);

    CHECK(std::abs(inner(a, b)) <= 1e-15);
    CHECK(std::abs(inner(a, zero) - Complex{r, 0.0}) <= 1e-15);
    CHECK(std::abs(inner(a, one) - Complex{-r, 0.0}) <= 1e-15);
    CHECK(std::abs(inner(b, zero) - Complex{r, 0.0}) <= 1e-15);
    CHECK(std::abs(a.norm() - 1.0) <= 1e-15);
}

TEST_CASE("phi0 satisfies the three statements and fixes P_WW(a,a) = 1/12") {
    const StateVector phi = phi0();
    CHECK(std::abs(phi.amplitudes().norm() - 1.0) <= 1e-15);

    CHECK(born_probability(phi, product_state(Outcome::A, Outcome::Zero)) <= 1e-14);
    CHECK(born_probability(phi, product_state(Outcome::Zero, Outcome::A)) <= 1e-14);
    CHECK(born_probability(phi, product_state(Outcome::One, Outcome::One)) <= 1e-14);

    const double p_ww = born_probability(phi, product_state(Outcome::A, Outcome::A));
    CHECK(std::abs(p_ww - 1.0 / 12.0) <= 1e-14);
}

TEST_CASE("phi0 is the unique null state of the constraint system") {
    // The nullspace of the three statement projectors is the nullspace of
    // their sum; rank deficiency exactly 1 means a single zero eigenvalue.
    const auto eig = hermitian_eigen(build_pi_s());
    int null_count = 0;
    for (double v : eig.eigenvalues) {
        if (std::abs(v) < 1e-9) ++null_count;
    }
    CHECK(null_count == 1);
    CHECK(std::abs(std::abs(inner(eig.eigenvectors[0], phi0().amplitudes())) - 1.0) <=
          1e-10);
}

TEST_CASE("StateVector normalization policy") {
    CVector nearly(4);
    nearly[0] = Complex{1.0 + 5e-10, 0.0};
    const StateVector accepted((CVector(nearly)));
    CHECK(std::abs(accepted.amplitudes().norm() - 1.0) <= 1e-15);

    CVector off(4);
    off[0] = Complex{1.0 + 1e-6, 0.0};
    CHECK_THROWS_AS(StateVector{off}, std::invalid_argument);
    CHECK_THROWS_AS(StateVector{CVector(2)}, std::invalid_argument);
}

TEST_CASE("born_probability basics") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 100; ++t) {
        const StateVector psi = ctxtest::random_state(rng);
        CHECK(std::abs(born_probability(psi, psi) - 1.0) <= 1e-12);
    }
    // Squared first printed coefficient of nu3: (2/sqrt(6))^2 = 2/3.
    CHECK(std::abs(born_probability(nu_basis()[3],
                                    product_state(Outcome::Zero, Outcome::Zero)) -
                   2.0 / 3.0) <= 1e-14);
}

TEST_CASE("context probabilities of the named states") {
    const ContextProbabilities at_phi0 = context_probabilities(phi0());
    CHECK(at_phi0.p_wf_a0 <= 1e-14);
    CHECK(at_phi0.p_fw_0a <= 1e-14);
    CHECK(at_phi0.p_ff_11 <= 1e-14);
    CHECK(at_phi0.p_sum() <= 1e-14);
    CHECK(std::abs(at_phi0.p_ww_aa - 1.0 / 12.0) <= 1e-14);

    const ContextProbabilities at_11 =
        context_probabilities(product_state(Outcome::One, Outcome::One));
    CHECK(at_11.p_wf_a0 <= 1e-14);
    CHECK(at_11.p_fw_0a <= 1e-14);
    CHECK(std::abs(at_11.p_ff_11 - 1.0) <= 1e-14);
    CHECK(std::abs(at_11.p_ww_aa - 0.25) <= 1e-14);

    const ContextProbabilities at_aa =
        context_probabilities(product_state(Outcome::A, Outcome::A));
    CHECK(std::abs(at_aa.p_ww_aa - 1.0) <= 1e-14);
}

TEST_CASE("noncontextual_slack certifies the violation at phi0") {
    CHECK(std::abs(noncontextual_slack(phi0()) - 1.0 / 12.0) <= 1e-14);
    CHECK(std::abs(noncontextual_slack(product_state(Outcome::One, Outcome::One)) -
                   (-0.75)) <= 1e-14);
    // nu1 is orthogonal to |a,a> and has error sum 1/2.
    CHECK(std::abs(noncontextual_slack(nu_basis()[1]) - (-0.5)) <= 1e-14);
}

TEST_CASE("probabilities are valid and global-phase invariant") {
    std::mt19937_64 rng(56);
    for (int t = 0; t < 1000; ++t) {
        const StateVector psi = ctxtest::random_state(rng);
        const ContextProbabilities p = context_probabilities(psi);
        for (double value : {p.p_wf_a0, p.p_fw_0a, p.p_ff_11, p.p_ww_aa}) {
            CHECK(value >= 0.0);
            CHECK(value <= 1.0 + 1e-12);
        }

        const double phase = 2.0 * M_PI * uniform01(rng);
        const StateVector rotated(std::polar(1.0, phase) * psi.amplitudes());
        const ContextProbabilities q = context_probabilities(rotated);
        CHECK(std::abs(p.p_wf_a0 - q.p_wf_a0) <= 1e-12);
        CHECK(std::abs(p.p_fw_0a - q.p_fw_0a) <= 1e-12);
        CHECK(std::abs(p.p_ff_11 - q.p_ff_11) <= 1e-12);
        CHECK(std::abs(p.p_ww_aa - q.p_ww_aa) <= 1e-12);
    }
}
