#include "ctx/montecarlo.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "ctx/rng.hpp"

namespace ctx {

namespace {

int context_index(Context context) {
    switch (context) {
        case Context::WW: return 0;
        case Context::WF: return 1;
        case Context::FW: return 2;
        case Context::FF: return 3;
    }
    throw std::invalid_argument("unknown context");
}

std::array<std::pair<Outcome, Outcome>, 4> context_outcomes(Context context) {
    const auto w = std::array<Outcome, 2>{Outcome::A, Outcome::B};
    const auto f = std::array<Outcome, 2>{Outcome::Zero, Outcome::One};
    const auto& first = (context == Context::WW || context == Context::WF) ? w : f;
    const auto& second = (context == Context::WW || context == Context::FW) ? w : f;
    return {std::make_pair(first[0], second[0]), std::make_pair(first[0], second[1]),
            std::make_pair(first[1], second[0]), std::make_pair(first[1], second[1])};
}

// Cumulative Born distribution over the context's four outcomes.  The
// last entry is pinned to 1 so the marginal is exactly normalized.
std::array<double, 4> cumulative_distribution(const StateVector& psi,
                                              Context context) {
    const auto basis = context_basis(context);
    std::array<double, 4> cum{};
    double acc = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        acc += born_probability(psi, basis[k]);
        cum[k] = acc;
    }
    cum[3] = 1.0;
    return cum;
}

std::size_t draw(std::mt19937_64& rng, const std::array<double, 4>& cum) {
    const double u = uniform01(rng);
    for (std::size_t k = 0; k < 3; ++k) {
        if (u < cum[k]) return k;
    }
    return 3;
}

}  // namespace

const char* context_name(Context context) {
    switch (context) {
        case Context::WW: return "WW";
        case Context::WF: return "WF";
        case Context::FW: return "FW";
        case Context::FF: return "FF";
    }
    throw std::invalid_argument("unknown context");
}

std::array<StateVector, 4> context_basis(Context context) {
    const auto outcomes = context_outcomes(context);
    return {product_state(outcomes[0].first, outcomes[0].second),
            product_state(outcomes[1].first, outcomes[1].second),
            product_state(outcomes[2].first, outcomes[2].second),
            product_state(outcomes[3].first, outcomes[3].second)};
}

std::pair<Outcome, Outcome> tracked_outcome(Context context) {
    switch (context) {
        case Context::WW: return {Outcome::A, Outcome::A};
        case Context::WF: return {Outcome::A, Outcome::Zero};
        case Context::FW: return {Outcome::Zero, Outcome::A};
        case Context::FF: return {Outcome::One, Outcome::One};
    }
    throw std::invalid_argument("unknown context");
}

std::vector<ShotRecord> sample_context(const StateVector& psi, Context context,
                                       std::size_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("sample_context requires at least one shot");
    }
    const auto outcomes = context_outcomes(context);
    const auto cum = cumulative_distribution(psi, context);
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(context_index(context)));

    std::vector<ShotRecord> records;
    records.reserve(shots);
    for (std::size_t i = 0; i < shots; ++i) {
        const auto& [o1, o2] = outcomes[draw(rng, cum)];
        records.push_back(ShotRecord{context, o1, o2});
    }
    return records;
}

EstimateReport estimate(const StateVector& psi, std::size_t shots_per_context,
                        std::uint64_t seed) {
    if (shots_per_context < 100) {
        throw std::invalid_argument("estimate requires at least 100 shots per context");
    }
    const double n = static_cast<double>(shots_per_context);

    // Same draw loop as sample_context, counting only the tracked outcome.
    auto tracked_frequency = [&](Context context) {
        const auto outcomes = context_outcomes(context);
        const auto cum = cumulative_distribution(psi, context);
        const auto target = tracked_outcome(context);
        std::mt19937_64 rng(seed +
                            static_cast<std::uint64_t>(context_index(context)));
        std::size_t hits = 0;
        for (std::size_t i = 0; i < shots_per_context; ++i) {
            if (outcomes[draw(rng, cum)] == target) ++hits;
        }
        return static_cast<double>(hits) / n;
    };

    EstimateReport report;
    report.shots_per_context = shots_per_context;
    report.estimates.p_ww_aa = tracked_frequency(Context::WW);
    report.estimates.p_wf_a0 = tracked_frequency(Context::WF);
    report.estimates.p_fw_0a = tracked_frequency(Context::FW);
    report.estimates.p_ff_11 = tracked_frequency(Context::FF);

    const std::array<double, 4> p = {
        report.estimates.p_wf_a0, report.estimates.p_fw_0a,
        report.estimates.p_ff_11, report.estimates.p_ww_aa};
    double variance = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double var_i = p[i] * (1.0 - p[i]) / n;
        report.std_errors[i] = std::sqrt(var_i);
        variance += var_i;
    }
    report.slack_estimate = report.estimates.p_ww_aa - report.estimates.p_sum();
    // Degenerate case: all four estimates landed on 0 or 1 exactly.  A
    // sub-single-count floor keeps the z-score finite.
    const double se = variance > 0.0 ? std::sqrt(variance) : 1.0 / n;
    report.slack_z = report.slack_estimate / se;
    return report;
}

void write_shot_records(std::ostream& out, const std::vector<ShotRecord>& records) {
    for (const auto& r : records) {
        out << context_name(r.context) << ',' << outcome_char(r.outcome1) << ','
            << outcome_char(r.outcome2) << '\n';
    }
}

}  // namespace ctx
