#include "qjunta/search.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qjunta/analytic.hpp"
#include "qjunta/statevec.hpp"

namespace qjunta {

namespace {

constexpr double kLambda = 8.0 / 7.0;

std::uint64_t run_rounds(QuantumState& state, const TruthTable& g, std::uint64_t count) {
    for (std::uint64_t k = 0; k < count; ++k) {
        apply_oracle(state, g);
        apply_partial_diffusion(state);
    }
    return count;
}

}  // namespace

std::uint64_t SearchBudget::iteration_budget(std::int64_t N) const {
    return static_cast<std::uint64_t>(
        std::ceil(cutoff_multiplier * std::sqrt(static_cast<double>(N))));
}

std::uint64_t SearchBudget::round_allowance(std::int64_t N) const {
    return post_cap_rounds != 0 ? post_cap_rounds : 4 * iteration_budget(N);
}

SearchOutcome search_known_m(const TruthTable& g, std::int64_t M, Rng& rng) {
    const std::int64_t N = std::int64_t{1} << g.arity();
    if (M < 1 || M > N)
        throw std::invalid_argument("match count must be in [1, N]");
    const auto params = make_search_params(N, M);
    const std::uint64_t q_star = static_cast<std::uint64_t>(iteration_count(params));

    SearchOutcome out;
    QuantumState state = uniform_superposition(g.arity());
    run_rounds(state, g, q_star);
    const std::uint32_t t = measure_input(state, rng);
    const bool hit = g(t);

    out.queries.g_oracle_calls = q_star;
    out.queries.classical_g_evals = 1;
    out.queries.rounds = 1;
    out.trace.push_back({1, 0.0, q_star, t, hit, q_star});
    if (hit) {
        out.status = SearchStatus::Found;
        out.witness = t;
    }
    return out;
}

SearchOutcome search_unknown_m(const TruthTable& g, Rng& rng, const SearchBudget& budget) {
    if (budget.cutoff_multiplier <= 0.0)
        throw std::invalid_argument("budget cutoff multiplier must be positive");
    const int n = g.arity();
    const std::int64_t N = std::int64_t{1} << n;
    const double sqrt_n = std::sqrt(static_cast<double>(N));
    const std::uint64_t s_cap =
        std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::floor(sqrt_n)));
    const std::uint64_t iter_budget = budget.iteration_budget(N);
    const std::uint64_t round_allowance = budget.round_allowance(N);

    SearchOutcome out;
    double m = 1.0;
    bool capped = false;
    std::uint64_t post_cap_iterations = 0;
    std::uint64_t post_cap_rounds = 0;
    std::uint64_t cumulative = 0;

    for (std::uint64_t round = 1;; ++round) {
        const bool counts_against_budget = capped;
        const std::uint64_t s_bound =
            std::min(static_cast<std::uint64_t>(std::ceil(m)), s_cap);
        const std::uint64_t s = uniform_below(rng, s_bound);

        QuantumState state = uniform_superposition(n);
        run_rounds(state, g, s);
        const std::uint32_t t = measure_input(state, rng);
        const bool hit = g(t);

        cumulative += s;
        out.queries.g_oracle_calls += s;
        out.queries.classical_g_evals += 1;
        out.queries.rounds += 1;
        out.trace.push_back({round, m, s, t, hit, cumulative});

        if (hit) {
            out.status = SearchStatus::Found;
            out.witness = t;
            return out;
        }
        if (counts_against_budget) {
            post_cap_iterations += s;
            ++post_cap_rounds;
            if (post_cap_iterations >= iter_budget || post_cap_rounds >= round_allowance)
                return out;
        }
        m = std::min(kLambda * m, sqrt_n);
        if (m >= sqrt_n) capped = true;
    }
}

}  // namespace qjunta
