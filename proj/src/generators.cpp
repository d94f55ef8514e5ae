#include "qjunta/generators.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qjunta {

TruthTable gen_random_function(int n, Rng& rng) {
    TruthTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x)
        t.set(x, uniform_below(rng, 2) != 0);
    return t;
}

AnfFunction gen_random_affine(int n, Rng& rng) {
    AnfFunction f(n);
    for (int j = 0; j < n; ++j)
        if (uniform_below(rng, 2)) f.toggle_term(1u << j);
    if (uniform_below(rng, 2)) f.toggle_term(0);
    return f;
}

AnfFunction gen_single_term(int n, int m, Rng& rng) {
    if (m < 1 || m > n)
        throw std::invalid_argument("term width must be in [1, n]");
    std::vector<int> vars(n);
    std::iota(vars.begin(), vars.end(), 0);
    Term mask = 0;
    for (int k = 0; k < m; ++k) {
        const std::size_t pick = k + uniform_below(rng, vars.size() - k);
        std::swap(vars[k], vars[pick]);
        mask |= 1u << vars[k];
    }
    return AnfFunction(n, {mask});
}

TruthTable gen_majority(int n) {
    TruthTable t(n);
    for (std::uint32_t x = 0; x < t.size(); ++x)
        t.set(x, 2 * std::popcount(x) > n);
    return t;
}

TruthTable gen_random_junta(int n, int var, Rng& rng) {
    if (var < 0 || var >= n) throw std::out_of_range("variable index out of range");
    TruthTable reduced = gen_random_function(n - 1, rng);
    TruthTable t(n);
    const std::uint32_t low_mask = (1u << var) - 1;
    for (std::uint32_t x = 0; x < t.size(); ++x) {
        const std::uint32_t y = (x & low_mask) | ((x >> (var + 1)) << var);
        t.set(x, reduced(y));
    }
    return t;
}

TruthTable gen_random_dependent(int n, int var, Rng& rng) {
    for (;;) {
        TruthTable t = gen_random_function(n, rng);
        if (!is_junta_ground_truth(t, var)) return t;
    }
}

}  // namespace qjunta
