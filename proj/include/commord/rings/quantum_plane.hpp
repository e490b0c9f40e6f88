#pragma once

#include <cstddef>
#include <cstdint>

#include "commord/exact/scalar_rings.hpp"
#include "commord/rings/finite_algebra.hpp"

namespace commord {

using QuantumPlane = FiniteAlgebra<CyclotomicField>;

/// Index of the basis monomial x^i y^j in quantum_plane(n, ...).
inline std::size_t quantum_monomial_index(std::int64_t n, std::int64_t i, std::int64_t j) {
    return static_cast<std::size_t>(i * n + j);
}

/// K<x, y> / (x^n = a, y^n = b, yx = w xy) over K = Q(zeta_n), w = zeta_n.
/// Basis x^i y^j (0 <= i, j < n) with
///   (x^i y^j)(x^k y^l) = w^{jk} x^{i+k} y^{j+l},
/// then x^n -> a and y^n -> b.
inline QuantumPlane quantum_plane(std::int64_t n, const CycloScalar& a, const CycloScalar& b) {
    if (n < 2) throw DomainError("quantum plane requires n >= 2");
    const CyclotomicField k(n);
    if (!k.contains(a) || !k.contains(b)) throw RingMismatch("a and b must lie in " + k.name());
    if (a.is_zero()) throw DomainError("quantum plane requires a != 0 so that x is invertible");
    const auto d = static_cast<std::size_t>(n * n);
    std::vector<std::string> labels;
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            labels.push_back("x^" + std::to_string(i) + " y^" + std::to_string(j));
    std::vector<std::vector<CycloScalar>> table(d * d, std::vector<CycloScalar>(d, k.zero()));
    for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
            for (std::int64_t p = 0; p < n; ++p)
                for (std::int64_t q = 0; q < n; ++q) {
                    CycloScalar c = k.root(j * p);
                    std::int64_t xi = i + p, yj = j + q;
                    if (xi >= n) { xi -= n; c *= a; }
                    if (yj >= n) { yj -= n; c *= b; }
                    table[quantum_monomial_index(n, i, j) * d + quantum_monomial_index(n, p, q)]
                         [quantum_monomial_index(n, xi, yj)] = c;
                }
    std::vector<CycloScalar> one(d, k.zero());
    one[0] = k.one();
    return QuantumPlane(k, std::move(labels), table, std::move(one),
                        "quantum_plane(n=" + std::to_string(n) + ")");
}

inline QuantumPlane::Element quantum_x(const QuantumPlane& alg, std::int64_t n) {
    return alg.basis(quantum_monomial_index(n, 1, 0));
}

inline QuantumPlane::Element quantum_y(const QuantumPlane& alg, std::int64_t n) {
    return alg.basis(quantum_monomial_index(n, 0, 1));
}

/// (1 - w)^n * w^{n(n-1)/2} * a * b; [x, y]^n equals this value times 1.
inline CycloScalar quantum_plane_constraint(std::int64_t n, const CycloScalar& a, const CycloScalar& b) {
    const CyclotomicField k(n);
    const CycloScalar one_minus_w = k.one() - k.generator();
    CycloScalar c = k.one();
    for (std::int64_t i = 0; i < n; ++i) c *= one_minus_w;
    return c * k.root(n * (n - 1) / 2) * a * b;
}

} // namespace commord
