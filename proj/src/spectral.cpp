#include "ctx/spectral.hpp"

#include <cmath>

namespace ctx {

CMatrix build_pi_s() {
    const CVector a0 = product_state(Outcome::A, Outcome::Zero).amplitudes();
    const CVector zero_a = product_state(Outcome::Zero, Outcome::A).amplitudes();
    const CVector one_one = product_state(Outcome::One, Outcome::One).amplitudes();
    return outer(a0, a0) + outer(zero_a, zero_a) + outer(one_one, one_one);
}

const std::array<StateVector, 4>& nu_basis() {
    static const std::array<StateVector, 4> basis = [] {
        const double r2 = 1.0 / std::sqrt(2.0);
        const double r6 = 1.0 / std::sqrt(6.0);
        return std::array<StateVector, 4>{
            phi0(),
            StateVector(CVector{{0.0, 0.0}, {r2, 0.0}, {-r2, 0.0}, {0.0, 0.0}},
                        "nu1"),
            StateVector(CVector{{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {1.0, 0.0}},
                        "nu2"),
            StateVector(
                CVector{{2.0 * r6, 0.0}, {-r6, 0.0}, {-r6, 0.0}, {0.0, 0.0}},
                "nu3"),
        };
    }();
    return basis;
}

NuCoefficients to_nu(const StateVector& psi) {
    const auto& basis = nu_basis();
    return NuCoefficients{
        inner(basis[0].amplitudes(), psi.amplitudes()),
        inner(basis[1].amplitudes(), psi.amplitudes()),
        inner(basis[2].amplitudes(), psi.amplitudes()),
        inner(basis[3].amplitudes(), psi.amplitudes()),
    };
}

StateVector from_nu(const NuCoefficients& c) {
    const auto& basis = nu_basis();
    const CVector v = c.c0 * basis[0].amplitudes() + c.c1 * basis[1].amplitudes() +
                      c.c2 * basis[2].amplitudes() + c.c3 * basis[3].amplitudes();
    return StateVector(v);
}

double p_sum_from_nu(const NuCoefficients& c) {
    return 0.5 * std::norm(c.c1) + std::norm(c.c2) + 1.5 * std::norm(c.c3);
}

double p_ww_from_nu(const NuCoefficients& c) {
    const Complex amp = c.c0 / (2.0 * std::sqrt(3.0)) - 0.5 * c.c2 -
                        std::sqrt(2.0 / 3.0) * c.c3;
    return std::norm(amp);
}

}  // namespace ctx
