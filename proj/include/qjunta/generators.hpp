#pragma once

#include "qjunta/boolfn.hpp"
#include "qjunta/rng.hpp"

namespace qjunta {

// Seeded fixture families used by the CLI and the test harnesses.

// Uniformly random truth table over n variables.
TruthTable gen_random_function(int n, Rng& rng);

// Random affine function c_0 x_0 ^ ... ^ c_{n-1} x_{n-1} ^ c_n.
AnfFunction gen_random_affine(int n, Rng& rng);

// A single product term over m distinct variables chosen at random.
AnfFunction gen_single_term(int n, int m, Rng& rng);

// 1 iff more than half of the n inputs are set.
TruthTable gen_majority(int n);

// Random function that ignores x_var (a guaranteed-junta fixture): a
// random table over the remaining n-1 variables, cylinder-extended.
TruthTable gen_random_junta(int n, int var, Rng& rng);

// Random function resampled until x_var has positive influence (a
// guaranteed-non-junta fixture).
TruthTable gen_random_dependent(int n, int var, Rng& rng);

}  // namespace qjunta
