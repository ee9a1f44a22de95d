#include "ctx/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ctx {

namespace {

constexpr double kParadoxAtZero = 1.0 / 12.0;
constexpr double kSeparateBoundZero = 3.0 / 28.0;
constexpr double kTightBoundLimit = 0.109489;

double tight_zero_value() { return 1.0 / (5.0 + std::sqrt(17.0)); }

void require_nonnegative(double p_s, const char* who) {
    if (!(p_s >= 0.0)) {
        throw std::invalid_argument(std::string(who) + ": p_s must be >= 0, got " +
                                    std::to_string(p_s));
    }
}

}  // namespace

BoundConstants bound_constants() {
    return BoundConstants{
        kParadoxAtZero,
        kSeparateBoundZero,
        tight_zero_value(),
        kTightBoundLimit,
        0.109612,
        0.0243,
        0.7882,
        4.0 / 5.0,
    };
}

double residual_amplitude(double p_s, double theta) {
    require_nonnegative(p_s, "residual_amplitude");
    const double s = std::sin(theta);
    const double radicand = (1.0 - p_s * (1.0 - s * s / 3.0)) / 12.0;
    if (radicand < 0.0) {
        throw std::domain_error("residual_amplitude: negative radicand at p_s=" +
                                std::to_string(p_s));
    }
    return std::sqrt(radicand);
}

double interference_amplitude(double p_s, double theta) {
    require_nonnegative(p_s, "interference_amplitude");
    return (5.0 / 6.0) * (0.6 * std::cos(theta) + 0.8 * std::sin(theta)) *
           std::sqrt(p_s);
}

double paradox_probability(double p_s, double theta) {
    const double d = residual_amplitude(p_s, theta) -
                     interference_amplitude(p_s, theta);
    return d * d;
}

std::optional<double> lower_bound_separate(double p_s) {
    require_nonnegative(p_s, "lower_bound_separate");
    if (p_s > kSeparateBoundZero) return std::nullopt;
    const double d = std::sqrt((1.0 - p_s) / 12.0) - (5.0 / 6.0) * std::sqrt(p_s);
    return d * d;
}

std::optional<double> lower_bound_tight(double p_s) {
    require_nonnegative(p_s, "lower_bound_tight");
    if (p_s > kTightBoundLimit) return std::nullopt;
    const double d = std::sqrt((1.0 - 0.8 * p_s) / 12.0) -
                     (5.0 / 6.0) * std::sqrt(p_s);
    return d * d;
}

BoundCurvePoint bound_curve_point(double p_s) {
    return BoundCurvePoint{p_s, lower_bound_separate(p_s).value_or(0.0),
                           lower_bound_tight(p_s).value_or(0.0)};
}

double zero_paradox_error_sum(double theta) {
    const double denom = 5.0 - std::cos(2.0 * theta) + 4.0 * std::sin(2.0 * theta);
    if (denom <= 0.0) {
        throw std::domain_error("zero_paradox_error_sum: nonpositive denominator");
    }
    return 1.0 / denom;
}

double critical_error_sum() {
    // Bracket is guaranteed: the bound is 1/12 at 0 and below p at 3/28.
    double lo = 0.0;
    double hi = kSeparateBoundZero;
    auto excess = [](double p) { return *lower_bound_tight(p) - p; };
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace ctx
