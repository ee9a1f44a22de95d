#ifndef CTX_MONTECARLO_HPP
#define CTX_MONTECARLO_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ctx/hilbert.hpp"

namespace ctx {

// The four product measurement contexts on (system 1, system 2).
// W-side outcomes are a/b, F-side outcomes are 0/1.
enum class Context { WW, WF, FW, FF };

const char* context_name(Context context);

struct ShotRecord {
    Context context;
    Outcome outcome1;
    Outcome outcome2;
};

// The four outcome states of a context in fixed lexicographic order
// (first-system outcome major; F outcomes ordered 0 < 1, W outcomes
// a < b).  Sampling uses the inverse CDF over this order.
std::array<StateVector, 4> context_basis(Context context);

// The outcome of a context that the paradox statements track:
// (a,a), (a,0), (0,a), (1,1).
std::pair<Outcome, Outcome> tracked_outcome(Context context);

// i.i.d. Born-rule draws from a context's outcome distribution.
// Deterministic per seed; the per-context stream is mt19937_64 seeded
// with seed + context index (WW=0, WF=1, FW=2, FF=3).
std::vector<ShotRecord> sample_context(const StateVector& psi, Context context,
                                       std::size_t shots, std::uint64_t seed);

struct EstimateReport {
    std::size_t shots_per_context = 0;
    ContextProbabilities estimates{};
    // Standard errors sqrt(p(1-p)/n) in field order WF, FW, FF, WW.
    std::array<double, 4> std_errors{};
    double slack_estimate = 0.0;  // p_ww - p_sum
    double slack_z = 0.0;         // slack over its propagated standard error
};

// Runs all four contexts with disjoint shot pools and independent
// streams, then propagates errors treating the estimates as independent
// binomials.
EstimateReport estimate(const StateVector& psi, std::size_t shots_per_context,
                        std::uint64_t seed);

// One record per line: `context,outcome1,outcome2` (e.g. `WW,a,a`).
void write_shot_records(std::ostream& out, const std::vector<ShotRecord>& records);

}  // namespace ctx

#endif  // CTX_MONTECARLO_HPP
