#include "qjunta/statevec.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qjunta {

namespace {

void check_sim_arity(int n) {
    if (n < 1 || n > kMaxSimArity)
        throw std::invalid_argument("register width " + std::to_string(n) +
                                    " outside [1, " + std::to_string(kMaxSimArity) + "]");
}

constexpr int kMaxMatrixArity = 6;

void check_matrix_arity(int n) {
    if (n < 1 || n > kMaxMatrixArity)
        throw std::invalid_argument("explicit operators are built only for n <= " +
                                    std::to_string(kMaxMatrixArity));
}

}  // namespace

QuantumState uniform_superposition(int n) {
    check_sim_arity(n);
    QuantumState s;
    s.n = n;
    const std::int64_t N = s.input_size();
    s.amps = Eigen::VectorXcd::Zero(2 * N);
    const double amp = 1.0 / std::sqrt(static_cast<double>(N));
    for (std::int64_t x = 0; x < N; ++x) s.amps[2 * x] = amp;
    return s;
}

void apply_oracle(QuantumState& s, const TruthTable& g) {
    if (g.arity() != s.n)
        throw std::invalid_argument("oracle arity does not match the register width");
    const std::int64_t N = s.input_size();
    for (std::int64_t x = 0; x < N; ++x)
        if (g(static_cast<std::uint32_t>(x))) std::swap(s.amps[2 * x], s.amps[2 * x + 1]);
}

void apply_partial_diffusion(QuantumState& s) {
    const std::int64_t N = s.input_size();
    using Stride2 = Eigen::InnerStride<2>;
    Eigen::Map<Eigen::VectorXcd, 0, Stride2> anc0(s.amps.data(), N);
    Eigen::Map<Eigen::VectorXcd, 0, Stride2> anc1(s.amps.data() + 1, N);
    const Complex mean = anc0.mean();
    anc0 = Eigen::VectorXcd::Constant(N, 2.0 * mean) - anc0;
    anc1 = -anc1;
}

std::uint32_t measure_input(const QuantumState& s, Rng& rng) {
    const std::int64_t N = s.input_size();
    const double u = uniform_unit(rng);
    double acc = 0.0;
    for (std::int64_t x = 0; x < N; ++x) {
        acc += std::norm(s.amps[2 * x]) + std::norm(s.amps[2 * x + 1]);
        if (u < acc) return static_cast<std::uint32_t>(x);
    }
    return static_cast<std::uint32_t>(N - 1);
}

Eigen::VectorXd exact_distribution(const QuantumState& s) {
    const std::int64_t N = s.input_size();
    Eigen::VectorXd p(N);
    for (std::int64_t x = 0; x < N; ++x)
        p[x] = std::norm(s.amps[2 * x]) + std::norm(s.amps[2 * x + 1]);
    return p;
}

double norm_squared(const QuantumState& s) { return s.amps.squaredNorm(); }

double fidelity(const QuantumState& s1, const QuantumState& s2) {
    if (s1.n != s2.n) throw std::invalid_argument("fidelity of states with different widths");
    return std::abs(s1.amps.dot(s2.amps));
}

GroupedAmplitudes group_amplitudes(const QuantumState& s, const TruthTable& g) {
    if (g.arity() != s.n)
        throw std::invalid_argument("table arity does not match the register width");
    GroupedAmplitudes out;
    const std::int64_t N = s.input_size();
    bool seen_u0 = false, seen_d0 = false, seen_d1 = false;
    for (std::int64_t x = 0; x < N; ++x) {
        const Complex a0 = s.amps[2 * x];
        const Complex a1 = s.amps[2 * x + 1];
        out.max_imag = std::max({out.max_imag, std::abs(a0.imag()), std::abs(a1.imag())});
        if (g(static_cast<std::uint32_t>(x))) {
            ++out.matches;
            if (!seen_d0) {
                out.desired0 = a0.real();
                seen_d0 = true;
            }
            if (!seen_d1) {
                out.desired1 = a1.real();
                seen_d1 = true;
            }
            out.spread = std::max({out.spread, std::abs(a0.real() - out.desired0),
                                   std::abs(a1.real() - out.desired1)});
        } else {
            if (!seen_u0) {
                out.undesired0 = a0.real();
                seen_u0 = true;
            }
            out.spread = std::max(out.spread, std::abs(a0.real() - out.undesired0));
            // Undesired ancilla-1 entries stay zero throughout.
            out.spread = std::max(out.spread, std::abs(a1.real()));
        }
    }
    return out;
}

Eigen::MatrixXcd hadamard_layer_matrix(int n) {
    check_matrix_arity(n);
    const std::int64_t N = std::int64_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(N));
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
    for (std::int64_t x = 0; x < N; ++x)
        for (std::int64_t y = 0; y < N; ++y) {
            const int sign = std::popcount(static_cast<std::uint64_t>(x & y)) & 1 ? -1 : 1;
            const double v = sign * scale;
            m(2 * x, 2 * y) = v;
            m(2 * x + 1, 2 * y + 1) = v;
        }
    return m;
}

Eigen::MatrixXcd zero_reflection_matrix(int n) {
    check_matrix_arity(n);
    const std::int64_t dim = std::int64_t{2} << n;
    Eigen::MatrixXcd m = -Eigen::MatrixXcd::Identity(dim, dim);
    m(0, 0) = 1.0;
    return m;
}

Eigen::MatrixXcd partial_diffusion_matrix(int n) {
    const Eigen::MatrixXcd h = hadamard_layer_matrix(n);
    return h * zero_reflection_matrix(n) * h;
}

Eigen::MatrixXcd oracle_matrix(const TruthTable& g) {
    check_matrix_arity(g.arity());
    const std::int64_t N = std::int64_t{1} << g.arity();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * N, 2 * N);
    for (std::int64_t x = 0; x < N; ++x) {
        const bool flip = g(static_cast<std::uint32_t>(x));
        m(2 * x, 2 * x + (flip ? 1 : 0)) = 1.0;
        m(2 * x + 1, 2 * x + (flip ? 0 : 1)) = 1.0;
    }
    return m;
}

void write_matrix(std::ostream& out, const Eigen::MatrixXcd& m) {
    char buf[64];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::snprintf(buf, sizeof buf, "%s%.15g %.15g", c ? " " : "", m(r, c).real(),
                          m(r, c).imag());
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace qjunta
