#include "qjunta/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "qjunta/analytic.hpp"
#include "qjunta/statevec.hpp"

namespace qjunta {

namespace {

// Matches with g(x) = 1 exactly on the first M inputs; which inputs are
// desired is immaterial to the grouped dynamics.
TruthTable prefix_table(int n, std::int64_t M) {
    TruthTable g(n);
    for (std::int64_t x = 0; x < M; ++x) g.set(static_cast<std::uint32_t>(x), true);
    return g;
}

std::string point_label(int n, std::int64_t M, std::int64_t q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=%d M=%lld q=%lld", n, static_cast<long long>(M),
                  static_cast<long long>(q));
    return buf;
}

}  // namespace

std::vector<std::int64_t> grid_match_counts(int n) {
    const std::int64_t N = std::int64_t{1} << n;
    std::set<std::int64_t> m{1, 2, N / 4, N / 2, 3 * N / 4, N - 1, N};
    std::vector<std::int64_t> out;
    for (std::int64_t v : m)
        if (v >= 1 && v <= N) out.push_back(v);
    return out;
}

GridReport run_recurrence_grid(int nmax) {
    GridReport report;
    for (int n = 2; n <= nmax; ++n) {
        const std::int64_t N = std::int64_t{1} << n;
        for (std::int64_t M : grid_match_counts(n)) {
            ++report.points;
            const auto params = make_search_params(N, M);
            const std::int64_t q_star = iteration_count(params);

            // Eq.-7 style bound on the iteration count.
            const double bound =
                std::numbers::pi / (2.0 * std::numbers::sqrt2) *
                    std::sqrt(static_cast<double>(N) / static_cast<double>(M)) +
                1.0;
            if (static_cast<double>(q_star) > bound) {
                report.bound_ok = false;
                report.violations.push_back(point_label(n, M, q_star) +
                                            ": iteration count exceeds its bound");
            }
            if (success_probability(params, q_star) < 0.5)
                report.coverage_flags.push_back(point_label(n, M, q_star) +
                                                ": P_s(q*) below 1/2");

            const TruthTable g = prefix_table(n, M);
            QuantumState state = uniform_superposition(n);
            AmplitudeTriple triple = initial_triple(params);
            for (std::int64_t q = 0; q <= 2 * q_star; ++q) {
                if (q > 0) {
                    apply_oracle(state, g);
                    apply_partial_diffusion(state);
                    triple = recurrence_step(triple, params);
                }
                const GroupedAmplitudes groups = group_amplitudes(state, g);
                report.max_group_spread = std::max(report.max_group_spread, groups.spread);
                report.max_norm_err =
                    std::max(report.max_norm_err, std::abs(norm_squared(state) - 1.0));

                double dev = std::max(std::abs(groups.desired0 - triple.b),
                                      std::abs(groups.desired1 - triple.c));
                if (M < N) dev = std::max(dev, std::abs(groups.undesired0 - triple.a));
                report.max_amplitude_dev = std::max(report.max_amplitude_dev, dev);
                if (dev > kAmpTol)
                    report.violations.push_back(point_label(n, M, q) +
                                                ": simulator/recurrence amplitude mismatch");

                const double ps = success_probability(params, q);
                const double recurrence_ps =
                    static_cast<double>(M) * (triple.b * triple.b + triple.c * triple.c);
                report.max_recurrence_prob_dev =
                    std::max(report.max_recurrence_prob_dev, std::abs(recurrence_ps - ps));
                if (std::abs(recurrence_ps - ps) > kProbTol)
                    report.violations.push_back(point_label(n, M, q) +
                                                ": recurrence/closed-form probability mismatch");

                if (q == q_star) {
                    const Eigen::VectorXd dist = exact_distribution(state);
                    double mass = 0.0;
                    for (std::int64_t x = 0; x < M; ++x) mass += dist[x];
                    report.max_probability_dev =
                        std::max(report.max_probability_dev, std::abs(mass - ps));
                    if (std::abs(mass - ps) > kProbTol)
                        report.violations.push_back(
                            point_label(n, M, q) + ": simulated mass vs closed form mismatch");
                }
            }
        }
    }
    return report;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

}  // namespace

GoldenReport check_recurrence_golden(const std::string& path) {
    GoldenReport report;
    std::ifstream in(path);
    if (!in) {
        report.violations.push_back(path + ": cannot open");
        return report;
    }
    std::string line;
    std::getline(in, line);  // header
    if (line != "n,M,q,a,b,c,P_s") {
        report.violations.push_back(path + ":1: unexpected header '" + line + "'");
        return report;
    }

    int lineno = 1;
    int n = -1;
    std::int64_t M = -1;
    SearchParams params;
    AmplitudeTriple triple;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 7) {
            report.violations.push_back(path + ":" + std::to_string(lineno) + ": malformed row");
            continue;
        }
        const int row_n = std::stoi(f[0]);
        const std::int64_t row_m = std::stoll(f[1]);
        const std::int64_t q = std::stoll(f[2]);
        if (row_n != n || row_m != M || q == 0) {
            n = row_n;
            M = row_m;
            params = make_search_params(std::int64_t{1} << n, M);
            triple = initial_triple(params);
        }
        while (triple.q < q) triple = recurrence_step(triple, params);

        const double want_a = std::stod(f[3]);
        const double want_b = std::stod(f[4]);
        const double want_c = std::stod(f[5]);
        const double want_ps = std::stod(f[6]);
        const double amp_dev = std::max({std::abs(triple.a - want_a), std::abs(triple.b - want_b),
                                         std::abs(triple.c - want_c)});
        const double ps_dev = std::abs(success_probability(params, q) - want_ps);
        report.max_dev = std::max({report.max_dev, amp_dev, ps_dev});
        if (amp_dev > kAmpTol)
            report.violations.push_back(path + ":" + std::to_string(lineno) +
                                        ": amplitude deviates from " + point_label(n, M, q));
        if (ps_dev > kProbTol)
            report.violations.push_back(path + ":" + std::to_string(lineno) +
                                        ": P_s deviates from " + point_label(n, M, q));
        ++report.rows;
    }
    return report;
}

GoldenReport check_iteration_golden(const std::string& path) {
    GoldenReport report;
    std::ifstream in(path);
    if (!in) {
        report.violations.push_back(path + ": cannot open");
        return report;
    }
    std::string line;
    std::getline(in, line);
    if (line != "n,M,q_star") {
        report.violations.push_back(path + ":1: unexpected header '" + line + "'");
        return report;
    }
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto f = split_csv(line);
        if (f.size() != 3) {
            report.violations.push_back(path + ":" + std::to_string(lineno) + ": malformed row");
            continue;
        }
        const int n = std::stoi(f[0]);
        const std::int64_t M = std::stoll(f[1]);
        const std::int64_t want = std::stoll(f[2]);
        const auto params = make_search_params(std::int64_t{1} << n, M);
        if (iteration_count(params) != want)
            report.violations.push_back(path + ":" + std::to_string(lineno) +
                                        ": iteration count differs at " + point_label(n, M, want));
        ++report.rows;
    }
    return report;
}

std::string format_success_table(int nmax) {
    std::string out = "n,M,q_star,P_s\n";
    char buf[96];
    for (int n = 1; n <= nmax; ++n) {
        for (std::int64_t M : grid_match_counts(n)) {
            const auto params = make_search_params(std::int64_t{1} << n, M);
            const std::int64_t q_star = iteration_count(params);
            std::snprintf(buf, sizeof buf, "%d,%lld,%lld,%.15g\n", n,
                          static_cast<long long>(M), static_cast<long long>(q_star),
                          success_probability(params, q_star));
            out += buf;
        }
    }
    return out;
}

}  // namespace qjunta
