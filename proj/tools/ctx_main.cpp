// ctx — command line front end for the consistency-paradox toolkit.
//
// Subcommands: verify, curve, critical, optimize, simulate.
// Exit codes: 0 success, 1 verification failure, 2 I/O failure, 64 usage.

#include <charconv>
#include <clocale>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctx/bounds.hpp"
#include "ctx/hilbert.hpp"
#include "ctx/linalg.hpp"
#include "ctx/montecarlo.hpp"
#include "ctx/optimizer.hpp"
#include "ctx/spectral.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;

// 12 significant digits, locale-independent decimal point.
std::string fmt12(double value) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                   std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string fmt_complex(const ctx::Complex& z) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "%.10f%+.10fi", z.real(), z.imag());
    return buf;
}

// ---------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------

class CheckTable {
public:
    void check(bool ok, const std::string& line) {
        std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", line.c_str());
        ++total_;
        if (ok) ++passed_;
    }
    int finish() const {
        std::printf("verify: %d/%d checks passed\n", passed_, total_);
        return passed_ == total_ ? kExitOk : kExitVerifyFailed;
    }

private:
    int passed_ = 0;
    int total_ = 0;
};

int run_verify() {
    using namespace ctx;
    CheckTable table;
    char line[256];

    const StateVector phi = phi0();
    const StateVector aa = product_state(Outcome::A, Outcome::A);
    const std::pair<StateVector, const char*> statements[] = {
        {product_state(Outcome::A, Outcome::Zero), "a,0"},
        {product_state(Outcome::Zero, Outcome::A), "0,a"},
        {product_state(Outcome::One, Outcome::One), "1,1"},
    };
    for (const auto& [outcome, name] : statements) {
        const double overlap =
            std::abs(inner(outcome.amplitudes(), phi.amplitudes()));
        std::snprintf(line, sizeof line,
                      "orthogonality <%s|phi0> = 0  (|overlap| = %.2e, tol 1e-14)",
                      name, overlap);
        table.check(overlap <= 1e-14, line);
    }

    // Hidden hook for exercising the failure path in tests.
    double perturb = 0.0;
    if (const char* env = std::getenv("CTX_VERIFY_PERTURB")) {
        perturb = std::atof(env);
    }
    const double p_ww = born_probability(phi, aa) + perturb;
    std::snprintf(line, sizeof line, "P_WW(a,a) = %.10f (expected 1/12)", p_ww);
    table.check(std::abs(p_ww - 1.0 / 12.0) <= 1e-12, line);

    const SpectralDecomposition eig = hermitian_eigen(build_pi_s());
    const double expected_eigenvalues[4] = {0.0, 0.5, 1.0, 1.5};
    double spectrum_err = 0.0;
    for (int i = 0; i < 4; ++i) {
        spectrum_err = std::max(
            spectrum_err, std::abs(eig.eigenvalues[i] - expected_eigenvalues[i]));
    }
    std::snprintf(line, sizeof line,
                  "Pi_S eigenvalues = (0, 1/2, 1, 3/2)  (max err %.2e, tol 1e-12)",
                  spectrum_err);
    table.check(spectrum_err <= 1e-12, line);

    double min_overlap = 1.0;
    for (int i = 0; i < 4; ++i) {
        min_overlap = std::min(
            min_overlap,
            std::abs(inner(eig.eigenvectors[i], nu_basis()[i].amplitudes())));
    }
    std::snprintf(line, sizeof line,
                  "Pi_S eigenvectors match (phi0, nu1, nu2, nu3)  "
                  "(min |overlap| = %.12f)",
                  min_overlap);
    table.check(min_overlap >= 1.0 - 1e-10, line);

    const NuCoefficients c = to_nu(aa);
    const double coeff_err = std::max(
        {std::abs(c.c0 - Complex{-1.0 / (2.0 * std::sqrt(3.0)), 0.0}),
         std::abs(c.c1), std::abs(c.c2 - Complex{0.5, 0.0}),
         std::abs(c.c3 - Complex{std::sqrt(2.0 / 3.0), 0.0})});
    std::snprintf(line, sizeof line,
                  "|a,a> coefficients = (-1/(2 sqrt 3), 0, 1/2, sqrt(2/3))  "
                  "(max err %.2e, tol 1e-12)",
                  coeff_err);
    table.check(coeff_err <= 1e-12, line);

    const BoundConstants k = bound_constants();
    const double p_cr = critical_error_sum();
    const bool ordering = k.separate_bound_zero < k.tight_zero &&
                          k.tight_zero < k.frontier_zero_ref &&
                          k.tight_bound_limit < k.tight_zero &&
                          p_cr < k.separate_bound_zero;
    std::snprintf(line, sizeof line,
                  "constants ordering: 3/28 < 1/(5+sqrt(17)) < 0.109612, "
                  "0.109489 < 1/(5+sqrt(17)), P_cr (%.6f) < 3/28",
                  p_cr);
    table.check(ordering, line);

    return table.finish();
}

// ---------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------

int run_curve(double ps_min, double ps_max, int points, const std::string& out,
              const std::string& mode) {
    if (!(ps_min >= 0.0) || !(ps_min < ps_max) || !(ps_max <= 1.5) || points < 2) {
        std::fprintf(stderr,
                     "curve: require 0 <= ps-min < ps-max <= 1.5 and points >= 2\n");
        return kExitUsage;
    }
    const bool want_bounds = mode == "bounds" || mode == "both";
    const bool want_frontier = mode == "frontier" || mode == "both";

    std::ofstream file(out, std::ios::binary);
    if (!file) {
        std::fprintf(stderr, "curve: cannot open '%s' for writing\n", out.c_str());
        return kExitIo;
    }
    file << "p_s,frontier,bound_eq19,bound_eq24\n";
    for (int i = 0; i < points; ++i) {
        const double p_s = ps_min + (ps_max - ps_min) * i / (points - 1);
        file << fmt12(p_s) << ',';
        if (want_frontier) {
            file << fmt12(ctx::frontier_theta_family(p_s).p_ww_min);
        }
        file << ',';
        if (want_bounds) {
            const ctx::BoundCurvePoint bounds = ctx::bound_curve_point(p_s);
            file << fmt12(bounds.bound_separate) << ',' << fmt12(bounds.bound_tight);
        } else {
            file << ',';
        }
        file << '\n';
    }
    file.flush();
    if (!file) {
        std::fprintf(stderr, "curve: write to '%s' failed\n", out.c_str());
        return kExitIo;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------
// critical
// ---------------------------------------------------------------------

int run_critical() {
    const ctx::BoundConstants k = ctx::bound_constants();
    std::printf("P_cr (bound) = %.10f (reference %.4f +/- 5e-4)\n",
                ctx::critical_error_sum(), k.critical_ref);
    std::printf("P_cr (numeric) = %.10f (reference %.4f +/- 5e-4)\n",
                ctx::critical_error_sum_numeric(), k.critical_ref);
    std::printf("frontier zero = %.10f (reference 0.1096 +/- 1e-4)\n",
                ctx::frontier_zero());
    std::printf("1/(5+sqrt(17)) = %.6f (%.10f)\n", k.tight_zero, k.tight_zero);
    std::printf("tight bound validity limit = %.6f\n", k.tight_bound_limit);
    return kExitOk;
}

// ---------------------------------------------------------------------
// optimize
// ---------------------------------------------------------------------

int run_optimize(double p_s, bool full_space, const ctx::OptimizerConfig& cfg) {
    ctx::FrontierPoint point;
    try {
        point = full_space ? ctx::frontier_full_space(p_s, cfg)
                           : ctx::frontier_theta_family(p_s, cfg);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "optimize: %s\n", e.what());
        return kExitUsage;
    }
    std::printf("mode = %s\n", full_space ? "full-space" : "theta-family");
    std::printf("p_s = %.10f\n", point.p_s);
    std::printf("p_ww_min = %.12f\n", point.p_ww_min);
    std::printf("theta_opt = %.10f\n", point.theta_opt);
    std::printf("sin(theta_opt) = %.10f\n", std::sin(point.theta_opt));
    std::printf("argmin c0 = %s\n", fmt_complex(point.argmin.c0).c_str());
    std::printf("argmin c1 = %s\n", fmt_complex(point.argmin.c1).c_str());
    std::printf("argmin c2 = %s\n", fmt_complex(point.argmin.c2).c_str());
    std::printf("argmin c3 = %s\n", fmt_complex(point.argmin.c3).c_str());
    std::printf("converged = %s\n", point.converged ? "yes" : "no");
    return kExitOk;
}

// ---------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------

// Accepts "a", "bi", "a+bi" with optional signs and exponents.
std::optional<ctx::Complex> parse_complex(const std::string& text) {
    auto parse_real = [](std::string s) -> std::optional<double> {
        if (!s.empty() && s.front() == '+') s.erase(0, 1);  // from_chars rejects it
        if (s.empty()) return std::nullopt;
        double value = 0.0;
        const char* begin = s.data();
        const char* end = s.data() + s.size();
        const auto res = std::from_chars(begin, end, value);
        if (res.ec != std::errc{} || res.ptr != end) return std::nullopt;
        return value;
    };

    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) return std::nullopt;

    if (s.back() != 'i' && s.back() != 'I') {
        const auto re = parse_real(s);
        if (!re) return std::nullopt;
        return ctx::Complex{*re, 0.0};
    }

    s.pop_back();  // drop the trailing i
    // Last +/- that is not an exponent sign splits real and imaginary parts.
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_imag = [&](std::string part) -> std::optional<double> {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_real(part);
    };
    if (split == std::string::npos) {
        const auto im = parse_imag(s);
        if (!im) return std::nullopt;
        return ctx::Complex{0.0, *im};
    }
    const auto re = parse_real(s.substr(0, split));
    const auto im = parse_imag(s.substr(split));
    if (!re || !im) return std::nullopt;
    return ctx::Complex{*re, *im};
}

int run_simulate(const std::string& state_name,
                 const std::vector<std::string>& amplitude_args,
                 std::size_t shots, std::uint64_t seed,
                 const std::string& export_path) {
    using namespace ctx;
    std::optional<StateVector> psi;
    if (state_name == "phi0") {
        psi = phi0();
    } else if (state_name == "nu1" || state_name == "nu2" || state_name == "nu3") {
        psi = nu_basis()[static_cast<std::size_t>(state_name.back() - '0')];
    } else if (state_name == "custom") {
        if (amplitude_args.size() != 4) {
            std::fprintf(stderr,
                         "simulate: --state custom requires --amplitudes with "
                         "four entries\n");
            return kExitUsage;
        }
        CVector amps(4);
        for (std::size_t i = 0; i < 4; ++i) {
            const auto z = parse_complex(amplitude_args[i]);
            if (!z) {
                std::fprintf(stderr, "simulate: malformed amplitude '%s'\n",
                             amplitude_args[i].c_str());
                return kExitUsage;
            }
            amps[i] = *z;
        }
        const double norm = amps.norm();
        if (!(norm > 0.0) || !std::isfinite(norm)) {
            std::fprintf(stderr, "simulate: amplitudes are not normalizable\n");
            return kExitUsage;
        }
        if (std::abs(norm - 1.0) > 1e-9) {
            std::printf("warning: input renormalized (norm deviation %.3e)\n",
                        std::abs(norm - 1.0));
        }
        psi = StateVector(amps.normalized(), "custom");
    } else {
        std::fprintf(stderr, "simulate: unknown state '%s'\n", state_name.c_str());
        return kExitUsage;
    }

    const EstimateReport report = estimate(*psi, shots, seed);
    std::printf("state = %s\n", state_name.c_str());
    std::printf("shots/context = %zu\n", report.shots_per_context);
    std::printf("seed = %llu\n", static_cast<unsigned long long>(seed));
    std::printf("P_WF(a,0) = %.10f (std err %.10f)\n", report.estimates.p_wf_a0,
                report.std_errors[0]);
    std::printf("P_FW(0,a) = %.10f (std err %.10f)\n", report.estimates.p_fw_0a,
                report.std_errors[1]);
    std::printf("P_FF(1,1) = %.10f (std err %.10f)\n", report.estimates.p_ff_11,
                report.std_errors[2]);
    std::printf("P_WW(a,a) = %.10f (std err %.10f)\n", report.estimates.p_ww_aa,
                report.std_errors[3]);
    std::printf("P_S = %.10f\n", report.estimates.p_sum());
    std::printf("slack = %.10f\n", report.slack_estimate);
    std::printf("slack z-score = %.4f\n", report.slack_z);

    if (!export_path.empty()) {
        std::ofstream file(export_path, std::ios::binary);
        if (!file) {
            std::fprintf(stderr, "simulate: cannot open '%s' for writing\n",
                         export_path.c_str());
            return kExitIo;
        }
        for (Context context :
             {Context::WW, Context::WF, Context::FW, Context::FF}) {
            write_shot_records(file, sample_context(*psi, context, shots, seed));
        }
        file.flush();
        if (!file) {
            std::fprintf(stderr, "simulate: write to '%s' failed\n",
                         export_path.c_str());
            return kExitIo;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    std::setlocale(LC_ALL, "C");

    CLI::App app{"Consistency-paradox toolkit: exact states, analytic bounds, "
                 "optimal trade-off frontier and Born-rule sampling"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand(
        "verify", "Check the headline identities and print a pass/fail table");

    auto* curve_cmd = app.add_subcommand(
        "curve", "Export the bound/frontier curves as CSV");
    double ps_min = 0.0, ps_max = 0.12;
    int points = 121;
    std::string out_path;
    std::string mode = "both";
    curve_cmd->add_option("--ps-min", ps_min, "Lower end of the P_S grid");
    curve_cmd->add_option("--ps-max", ps_max, "Upper end of the P_S grid");
    curve_cmd->add_option("--points", points, "Number of grid points");
    curve_cmd->add_option("--out", out_path, "Output CSV path")->required();
    curve_cmd->add_option("--mode", mode, "bounds | frontier | both")
        ->check(CLI::IsMember({"bounds", "frontier", "both"}));

    auto* critical_cmd = app.add_subcommand(
        "critical", "Report the critical error sum and the frontier zero");

    auto* optimize_cmd = app.add_subcommand(
        "optimize", "Minimize P_WW(a,a) at fixed P_S");
    double p_s = 0.0;
    bool full_space = false;
    ctx::OptimizerConfig cfg;
    optimize_cmd->add_option("--p-s", p_s, "Error sum P_S in [0, 1.5]")->required();
    optimize_cmd->add_flag("--full-space", full_space,
                           "Search all magnitudes and phases");
    optimize_cmd->add_option("--seed", cfg.seed, "Restart seed (full-space)");
    optimize_cmd->add_option("--restarts", cfg.restarts, "Restart count");
    optimize_cmd->add_option("--grid-size", cfg.theta_grid_size,
                             "Coarse theta grid size");

    auto* simulate_cmd = app.add_subcommand(
        "simulate", "Sample the four contexts and report estimates");
    std::string state_name = "phi0";
    std::vector<std::string> amplitude_args;
    std::size_t shots = 100000;
    std::uint64_t seed = 1234567;
    std::string export_path;
    simulate_cmd->add_option("--state", state_name,
                             "phi0 | nu1 | nu2 | nu3 | custom");
    simulate_cmd
        ->add_option("--amplitudes", amplitude_args,
                     "Four amplitudes a+bi in the (F1,F2) product basis")
        ->expected(4);
    simulate_cmd->add_option("--shots", shots, "Shots per context (>= 100)");
    simulate_cmd->add_option("--seed", seed, "Master seed");
    simulate_cmd->add_option("--export", export_path,
                             "Write shot records to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*verify_cmd) return run_verify();
        if (*curve_cmd) return run_curve(ps_min, ps_max, points, out_path, mode);
        if (*critical_cmd) return run_critical();
        if (*optimize_cmd) return run_optimize(p_s, full_space, cfg);
        if (*simulate_cmd) {
            if (shots < 100) {
                std::fprintf(stderr, "simulate: --shots must be >= 100\n");
                return kExitUsage;
            }
            return run_simulate(state_name, amplitude_args, shots, seed,
                                export_path);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitOk;
}
