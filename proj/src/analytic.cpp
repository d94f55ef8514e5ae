#include "qjunta/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qjunta {

namespace {

void require_matches(const SearchParams& p) {
    if (p.M < 1)
        throw std::domain_error("operation undefined for M = 0 (no matches)");
}

}  // namespace

SearchParams make_search_params(std::int64_t N, std::int64_t M) {
    if (N < 1) throw std::invalid_argument("search-space size must be positive");
    if (M < 0 || M > N)
        throw std::invalid_argument("match count " + std::to_string(M) + " outside [0, " +
                                    std::to_string(N) + "]");
    SearchParams p;
    p.N = N;
    p.M = M;
    p.theta = std::acos(1.0 - static_cast<double>(M) / static_cast<double>(N));
    return p;
}

AmplitudeTriple initial_triple(const SearchParams& p) {
    AmplitudeTriple t;
    t.a = t.b = 1.0 / std::sqrt(static_cast<double>(p.N));
    t.c = 0.0;
    t.q = 0;
    return t;
}

AmplitudeTriple recurrence_step(const AmplitudeTriple& t, const SearchParams& p) {
    require_matches(p);
    const double ratio = static_cast<double>(p.M) / static_cast<double>(p.N);
    const double mean = (1.0 - ratio) * t.a + ratio * t.c;
    AmplitudeTriple next;
    next.a = 2.0 * mean - t.a;
    next.b = 2.0 * mean - t.c;
    next.c = -t.b;
    next.q = t.q + 1;
    return next;
}

double triple_norm(const AmplitudeTriple& t, const SearchParams& p) {
    return static_cast<double>(p.N - p.M) * t.a * t.a +
           static_cast<double>(p.M) * (t.b * t.b + t.c * t.c);
}

double success_probability(const SearchParams& p, std::int64_t q) {
    require_matches(p);
    const double th = p.theta;
    const double s = std::sin(th);
    const double sq = std::sin(static_cast<double>(q) * th);
    const double sq1 = std::sin(static_cast<double>(q + 1) * th);
    return (1.0 - std::cos(th)) * (sq1 * sq1 + sq * sq) / (s * s);
}

std::int64_t iteration_count(const SearchParams& p) {
    require_matches(p);
    return static_cast<std::int64_t>(std::floor(std::numbers::pi / (2.0 * p.theta)));
}

}  // namespace qjunta
