#include "ctx/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ctx {

CVector basis_state(Outcome which) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (which) {
        case Outcome::Zero: return CVector{{1.0, 0.0}, {0.0, 0.0}};
        case Outcome::One:  return CVector{{0.0, 0.0}, {1.0, 0.0}};
        case Outcome::A:    return CVector{{s, 0.0}, {-s, 0.0}};
        case Outcome::B:    return CVector{{s, 0.0}, {s, 0.0}};
    }
    throw std::invalid_argument("unknown outcome");
}

char outcome_char(Outcome o) {
    switch (o) {
        case Outcome::Zero: return '0';
        case Outcome::One:  return '1';
        case Outcome::A:    return 'a';
        case Outcome::B:    return 'b';
    }
    throw std::invalid_argument("unknown outcome");
}

StateVector::StateVector(CVector amplitudes, std::string label)
    : amps_(std::move(amplitudes)), label_(std::move(label)) {
    if (amps_.dim() != 4) {
        throw std::invalid_argument("StateVector requires dimension 4");
    }
    const double n = amps_.norm();
    if (std::abs(n - 1.0) > 1e-9) {
        throw std::invalid_argument("StateVector norm deviates from 1 beyond 1e-9");
    }
    if (n != 1.0) amps_ = amps_.normalized();
}

StateVector product_state(Outcome first, Outcome second) {
    const std::string label = std::string("|") + outcome_char(first) + "," +
                              outcome_char(second) + ">";
    return StateVector(kron(basis_state(first), basis_state(second)), label);
}

StateVector phi0() {
    const double s = 1.0 / std::sqrt(3.0);
    return StateVector(CVector{{s, 0.0}, {s, 0.0}, {s, 0.0}, {0.0, 0.0}}, "phi0");
}

double born_probability(const StateVector& psi, const StateVector& outcome) {
    return std::norm(inner(outcome.amplitudes(), psi.amplitudes()));
}

ContextProbabilities context_probabilities(const StateVector& psi) {
    static const StateVector a0 = product_state(Outcome::A, Outcome::Zero);
    static const StateVector zero_a = product_state(Outcome::Zero, Outcome::A);
    static const StateVector one_one = product_state(Outcome::One, Outcome::One);
    static const StateVector aa = product_state(Outcome::A, Outcome::A);
    return ContextProbabilities{
        born_probability(psi, a0),
        born_probability(psi, zero_a),
        born_probability(psi, one_one),
        born_probability(psi, aa),
    };
}

double noncontextual_slack(const StateVector& psi) {
    const ContextProbabilities p = context_probabilities(psi);
    return p.p_ww_aa - p.p_sum();
}

}  // namespace ctx
