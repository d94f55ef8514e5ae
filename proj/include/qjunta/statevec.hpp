#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <iosfwd>

#include "qjunta/boolfn.hpp"
#include "qjunta/rng.hpp"

namespace qjunta {

using Complex = std::complex<double>;

// Exhaustive checks stay fast up to here while still spanning a decade of
// sqrt(N) scaling.
inline constexpr int kMaxSimArity = 14;

// n input qubits plus one ancilla. Basis index = (x << 1) | ancilla, so
// the two ancilla branches of |x> sit in adjacent entries.
struct QuantumState {
    int n = 0;
    Eigen::VectorXcd amps;

    std::int64_t input_size() const { return std::int64_t{1} << n; }
};

// (1/sqrt(N)) sum_x |x>|0>.
QuantumState uniform_superposition(int n);

// Bit-flip oracle |x>|b> -> |x>|b ^ g(x)>: swaps the ancilla pair of every
// x with g(x) = 1. Exact permutation, involutive.
void apply_oracle(QuantumState& s, const TruthTable& g);

// Partial diffusion (H^n (x) I)(2|0><0| - I)(H^n (x) I): inversion about
// the mean on the ancilla-0 subspace, sign flip on the ancilla-1 subspace.
void apply_partial_diffusion(QuantumState& s);

// Samples an n-bit outcome from the input register (ancilla traced out).
// Consumes exactly one uniform draw; the state is left untouched.
std::uint32_t measure_input(const QuantumState& s, Rng& rng);

// Exact outcome distribution over the 2^n inputs.
Eigen::VectorXd exact_distribution(const QuantumState& s);

double norm_squared(const QuantumState& s);

// |<s1|s2>|, for state comparisons up to global phase.
double fidelity(const QuantumState& s1, const QuantumState& s2);

// Amplitudes collapsed into the three basis-state groups: undesired
// inputs with ancilla 0, desired inputs with ancilla 0, desired inputs
// with ancilla 1. Desired means g(x) = 1. `spread` is the largest
// in-group deviation, `max_imag` the largest imaginary component seen.
struct GroupedAmplitudes {
    double undesired0 = 0.0;
    double desired0 = 0.0;
    double desired1 = 0.0;
    std::int64_t matches = 0;
    double spread = 0.0;
    double max_imag = 0.0;
};
GroupedAmplitudes group_amplitudes(const QuantumState& s, const TruthTable& g);

// Explicit dense operators over the full 2^(n+1) space. Verification
// only; capped at n <= 6.
Eigen::MatrixXcd hadamard_layer_matrix(int n);      // H^n on inputs, I on ancilla
Eigen::MatrixXcd zero_reflection_matrix(int n);     // 2|0><0| - I on n+1 qubits
Eigen::MatrixXcd partial_diffusion_matrix(int n);   // product of the three layers
Eigen::MatrixXcd oracle_matrix(const TruthTable& g);

// Row-major "re im" pairs, one row per line, for golden comparisons.
void write_matrix(std::ostream& out, const Eigen::MatrixXcd& m);

}  // namespace qjunta
