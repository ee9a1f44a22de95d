#ifndef CTX_HILBERT_HPP
#define CTX_HILBERT_HPP

#include <string>

#include "ctx/linalg.hpp"

namespace ctx {

// Single-system measurement outcomes: the F measurement yields 0 or 1,
// the W measurement yields a or b.
enum class Outcome { Zero, One, A, B };

// Single-system outcome states: |a> = (|0>-|1>)/sqrt(2) and
// |b> = (|0>+|1>)/sqrt(2), mutually unbiased with the F basis.
CVector basis_state(Outcome which);

char outcome_char(Outcome o);

// Normalized two-system pure state in the (F1,F2) product basis.
// Construction rejects amplitudes whose norm deviates from 1 by more
// than 1e-9 and silently renormalizes smaller deviations.
class StateVector {
public:
    explicit StateVector(CVector amplitudes, std::string label = "");

    const CVector& amplitudes() const { return amps_; }
    const std::string& label() const { return label_; }

private:
    CVector amps_;
    std::string label_;
};

// |x,y> for single-system outcomes x (system 1) and y (system 2).
StateVector product_state(Outcome first, Outcome second);

// The unique state orthogonal to |a,0>, |0,a> and |1,1>:
// (|0,0> + |0,1> + |1,0>)/sqrt(3).
StateVector phi0();

// |<outcome|psi>|^2
double born_probability(const StateVector& psi, const StateVector& outcome);

// The four probabilities entering the consistency paradox, one per
// measurement context.
struct ContextProbabilities {
    double p_wf_a0;  // P_WF(a,0)
    double p_fw_0a;  // P_FW(0,a)
    double p_ff_11;  // P_FF(1,1)
    double p_ww_aa;  // P_WW(a,a)

    // Error-probability sum P_S over the three statement outcomes.
    double p_sum() const { return p_wf_a0 + p_fw_0a + p_ff_11; }
};

ContextProbabilities context_probabilities(const StateVector& psi);

// P_WW(a,a) - P_S.  Strictly positive values certify a violation of the
// non-contextual inequality P_WW(a,a) <= P_S.
double noncontextual_slack(const StateVector& psi);

}  // namespace ctx

#endif  // CTX_HILBERT_HPP
