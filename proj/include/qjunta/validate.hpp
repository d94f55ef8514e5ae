#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qjunta {

// Tolerances used across the validation grids: amplitudes accumulate over
// at most ~1e3 recurrence steps, probabilities square them.
inline constexpr double kAmpTol = 1e-10;
inline constexpr double kProbTol = 1e-9;

// Match-count family exercised per n: {1, 2, N/4, N/2, 3N/4, N-1, N},
// deduplicated and clipped to [1, N].
std::vector<std::int64_t> grid_match_counts(int n);

struct GridReport {
    int points = 0;                       // (n, M) pairs visited
    double max_amplitude_dev = 0.0;       // simulator groups vs recurrence triples
    double max_probability_dev = 0.0;     // simulated mass at q* vs closed form
    double max_group_spread = 0.0;        // in-group amplitude disagreement
    double max_norm_err = 0.0;
    double max_recurrence_prob_dev = 0.0; // M(b^2+c^2) vs closed form, every q
    bool bound_ok = true;                 // q* <= (pi/(2 sqrt 2)) sqrt(N/M) + 1
    std::vector<std::string> coverage_flags;  // grid points with P_s(q*) < 1/2
    std::vector<std::string> violations;

    bool ok() const { return violations.empty() && bound_ok; }
};

// Runs the simulator against the closed-form model for n in [2, nmax],
// every M in the family, q in [0, 2 q*].
GridReport run_recurrence_grid(int nmax);

struct GoldenReport {
    int rows = 0;
    double max_dev = 0.0;
    std::vector<std::string> violations;  // "<file>:<line>: ..." entries

    bool ok() const { return violations.empty(); }
};

// Recomputes every row of the frozen grids and compares within kAmpTol
// (amplitudes) / kProbTol (probabilities); exact match for q*.
GoldenReport check_recurrence_golden(const std::string& path);
GoldenReport check_iteration_golden(const std::string& path);

// Printable (n, M, q*, P_s(q*)) table for the closed form alone.
std::string format_success_table(int nmax);

}  // namespace qjunta
