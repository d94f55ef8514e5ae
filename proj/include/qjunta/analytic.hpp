#pragma once

#include <cstdint>

namespace qjunta {

// Closed-form model of the partial-diffusion search dynamics. Everything
// here is pure arithmetic on (N, M); the state-vector simulator is the
// independent route the grids check it against.

struct SearchParams {
    std::int64_t N = 0;   // search-space size 2^n
    std::int64_t M = 0;   // number of matches, in [0, N]
    double theta = 0.0;   // cos(theta) = 1 - M/N; pi/2 when M = N
};

// M = 0 is representable (theta = 0) but rejected by every
// theta-dependent operation below.
SearchParams make_search_params(std::int64_t N, std::int64_t M);

// Amplitudes of the three basis-state groups after q iterations:
// a over undesired inputs (ancilla 0), b over desired inputs (ancilla 0),
// c over desired inputs (ancilla 1).
struct AmplitudeTriple {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::int64_t q = 0;
};

// Pre-iteration uniform state: a = b = 1/sqrt(N), c = 0.
AmplitudeTriple initial_triple(const SearchParams& p);

// One oracle + partial-diffusion round:
//   mean = (1 - M/N) a + (M/N) c
//   a' = 2 mean - a,  b' = 2 mean - c,  c' = -b
AmplitudeTriple recurrence_step(const AmplitudeTriple& t, const SearchParams& p);

// (N - M) a^2 + M (b^2 + c^2); stays 1 under recurrence_step.
double triple_norm(const AmplitudeTriple& t, const SearchParams& p);

// Probability of measuring a match after q rounds:
//   (1 - cos theta) (sin^2((q+1) theta) + sin^2(q theta)) / sin^2(theta)
double success_probability(const SearchParams& p, std::int64_t q);

// q* = floor(pi / (2 theta)); bounded by (pi / (2 sqrt 2)) sqrt(N/M) + 1.
std::int64_t iteration_count(const SearchParams& p);

}  // namespace qjunta
