#ifndef CTX_BOUNDS_HPP
#define CTX_BOUNDS_HPP

#include <optional>

namespace ctx {

// Named constants of the trade-off between the error sum P_S and the
// paradox probability P_WW(a,a).
struct BoundConstants {
    double paradox_at_zero;       // 1/12, forced value of P_WW(a,a) at P_S = 0
    double separate_bound_zero;   // 3/28, where the separate-optimization bound hits 0
    double tight_zero;            // 1/(5+sqrt(17)), least P_S admitting P_WW = 0
    double tight_bound_limit;     // 0.109489, validity limit of the tightened bound
    double frontier_zero_ref;     // 0.109612, published frontier-zero value
    double critical_ref;          // 0.0243, published critical error sum
    double sin_theta_star;        // 0.7882, sin(theta) at the frontier zero
    double sin_theta_max_interference;  // 4/5, maximizes the interference amplitude
};

BoundConstants bound_constants();

// Residual amplitude of the null-eigenstate component for the
// real-coefficient family at mixing angle theta:
//   sqrt[(1/12)(1 - p_s (1 - sin^2(theta)/3))].
// Throws std::domain_error when the radicand is negative.
double residual_amplitude(double p_s, double theta);

// Interference amplitude contributed by the nu2/nu3 components:
//   (5/6)(3 cos(theta)/5 + 4 sin(theta)/5) sqrt(p_s).
double interference_amplitude(double p_s, double theta);

// P_WW(a,a) for the real-coefficient family: the squared difference of
// the two amplitudes above.
double paradox_probability(double p_s, double theta);

// Lower bounds on P_WW(a,a) as a function of P_S.  Past the validity
// limit the bound no longer applies and nullopt is returned; plotting
// callers clamp to zero there.
std::optional<double> lower_bound_separate(double p_s);  // valid for p_s <= 3/28
std::optional<double> lower_bound_tight(double p_s);     // valid for p_s <= 0.109489

// Both lower bounds at one P_S in plotting form: clamped to zero past
// their validity limits, so bound_separate <= bound_tight everywhere.
struct BoundCurvePoint {
    double p_s;
    double bound_separate;
    double bound_tight;
};

BoundCurvePoint bound_curve_point(double p_s);

// The P_S at which the paradox probability can vanish for a given theta:
//   1 / (5 - cos(2 theta) + 4 sin(2 theta)).
double zero_paradox_error_sum(double theta);

// Fixed point of the tight lower bound, solved by bisection: below this
// error sum every quantum state violates the non-contextual inequality.
double critical_error_sum();

}  // namespace ctx

#endif  // CTX_BOUNDS_HPP
