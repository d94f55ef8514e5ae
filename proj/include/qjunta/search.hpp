#pragma once

#include <cstdint>
#include <vector>

#include "qjunta/boolfn.hpp"
#include "qjunta/rng.hpp"

namespace qjunta {

// Query accounting. Every g evaluation, quantum or classical, costs two
// calls to the underlying black box (the oracle is built from two copies
// of it), so the base-level count is always derived as 2x.
struct QueryCounter {
    std::uint64_t g_oracle_calls = 0;    // quantum U_g applications
    std::uint64_t classical_g_evals = 0; // g(t) checks on measured outcomes and probes
    std::uint64_t rounds = 0;            // prepare-iterate-measure cycles

    std::uint64_t base_oracle_calls() const { return 2 * g_oracle_calls; }
    std::uint64_t total_g_queries() const { return g_oracle_calls + classical_g_evals; }
    std::uint64_t total_f_queries() const { return 2 * total_g_queries(); }
};

struct TraceEntry {
    std::uint64_t round = 0;  // 1-based
    double m = 0.0;           // growth variable when s was drawn (0 for fixed-count runs)
    std::uint64_t s = 0;      // amplification iterations this round
    std::uint32_t outcome = 0;
    bool hit = false;         // g(outcome)
    std::uint64_t cumulative_iterations = 0;
};

enum class SearchStatus { Found, NotFound };

struct SearchOutcome {
    SearchStatus status = SearchStatus::NotFound;
    std::uint32_t witness = 0;  // meaningful only when Found
    QueryCounter queries;
    std::vector<TraceEntry> trace;

    bool found() const { return status == SearchStatus::Found; }
};

// Termination policy for the unknown-M loop, which otherwise never halts
// when g has no solutions. Once the growth variable m has reached its
// sqrt(N) cap, a budget of ceil(cutoff_multiplier * sqrt(N)) further
// iterations applies; post_cap_rounds additionally bounds the number of
// post-cap rounds (0 picks 4x the iteration budget, which only binds when
// sqrt(N) is so small that most draws are s = 0).
struct SearchBudget {
    double cutoff_multiplier = 3.0;
    std::uint64_t post_cap_rounds = 0;

    std::uint64_t iteration_budget(std::int64_t N) const;
    std::uint64_t round_allowance(std::int64_t N) const;
};

// Fixed-count amplification: q* oracle + partial-diffusion rounds from a
// fresh uniform state, one measurement, classical verification. M must be
// the true match count for the success-probability formula to apply; a
// wrong M only degrades the hit rate.
SearchOutcome search_known_m(const TruthTable& g, std::int64_t M, Rng& rng);

// Randomized schedule for unknown match count: m starts at 1 and grows by
// lambda = 8/7 per failed round (capped at sqrt(N)); each round draws s
// uniformly from [0, min(ceil(m), floor(sqrt(N))) - 1], runs s iterations
// from a fresh uniform state and measures. Within a round the RNG is
// consumed in fixed order: the s draw first, then the measurement draw.
SearchOutcome search_unknown_m(const TruthTable& g, Rng& rng, const SearchBudget& budget = {});

}  // namespace qjunta
