#ifndef CTX_SPECTRAL_HPP
#define CTX_SPECTRAL_HPP

#include <array>

#include "ctx/hilbert.hpp"

namespace ctx {

// Probability-sum operator: the sum of the projectors onto |a,0>, |0,a>
// and |1,1>.  Its expectation value in a state is the error sum P_S; its
// eigenvalues are 0, 1/2, 1 and 3/2.
CMatrix build_pi_s();

// Amplitudes of a state in the eigenbasis of the probability-sum operator.
struct NuCoefficients {
    Complex c0{};  // phi0 component (eigenvalue 0)
    Complex c1{};  // nu1 component  (eigenvalue 1/2)
    Complex c2{};  // nu2 component  (eigenvalue 1)
    Complex c3{};  // nu3 component  (eigenvalue 3/2)
};

// The eigenbasis (phi0, nu1, nu2, nu3), hard-coded in closed form:
//   nu1 = (|0,1> - |1,0>)/sqrt(2)
//   nu2 = |1,1>
//   nu3 = (2|0,0> - |0,1> - |1,0>)/sqrt(6)
// The numeric eigensolver is cross-checked against these in the tests.
const std::array<StateVector, 4>& nu_basis();

NuCoefficients to_nu(const StateVector& psi);
StateVector from_nu(const NuCoefficients& c);

// P_S from eigenbasis amplitudes: |c1|^2/2 + |c2|^2 + 3|c3|^2/2.
double p_sum_from_nu(const NuCoefficients& c);

// P_WW(a,a) from eigenbasis amplitudes:
// |c0/(2 sqrt 3) - c2/2 - sqrt(2/3) c3|^2.
double p_ww_from_nu(const NuCoefficients& c);

}  // namespace ctx

#endif  // CTX_SPECTRAL_HPP
