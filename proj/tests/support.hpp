#pragma once

// Shared helpers for the test binaries: seeded random operators and a few
// matrix comparisons. Everything is deterministic — tests must not flake.

#include <cmath>
#include <vector>

#include "nwl/qmath.hpp"
#include "nwl/rng.hpp"

namespace nwl::testing {

/// Standard normal via Box-Muller on splitmix draws.
inline double random_normal(SplitMix64& rng) {
    double u1 = rng.next_double();
    while (u1 == 0.0)
        u1 = rng.next_double();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

inline Complex random_complex(SplitMix64& rng) {
    return Complex(random_normal(rng), random_normal(rng));
}

inline ComplexMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = random_complex(rng);
    return m;
}

inline ComplexMatrix random_hermitian(SplitMix64& rng, std::size_t n) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (g(i, j) + std::conj(g(j, i)));
    return h;
}

/// Ginibre construction: G G^H / Tr(G G^H) is a valid density matrix.
inline DensityMatrix random_density(SplitMix64& rng, std::size_t n) {
    const ComplexMatrix g = random_matrix(rng, n, n);
    ComplexMatrix m = g * g.adjoint();
    const double tr = m.trace().real();
    return DensityMatrix((1.0 / tr) * m);
}

/// Haar-ish 2x2 unitary: orthonormalise two random complex columns.
inline ComplexMatrix random_unitary2(SplitMix64& rng) {
    Complex a = random_complex(rng);
    Complex b = random_complex(rng);
    const double n1 = std::sqrt(std::norm(a) + std::norm(b));
    a /= n1;
    b /= n1;
    // Second column orthogonal to (a, b), with a random phase.
    const Complex phase = std::polar(1.0, 2.0 * M_PI * rng.next_double());
    ComplexMatrix u(2, 2);
    u(0, 0) = a;
    u(1, 0) = b;
    u(0, 1) = -std::conj(b) * phase;
    u(1, 1) = std::conj(a) * phase;
    return u;
}

inline double max_abs(const ComplexMatrix& m) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            v = std::max(v, std::abs(m(i, j)));
    return v;
}

} // namespace nwl::testing
