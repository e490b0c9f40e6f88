#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "commord/errors.hpp"
#include "commord/rings/dense_matrix.hpp"
#include "commord/structure/cyclic.hpp"

namespace commord::structure {

/// X_i = y_{i-1} ... y_0, Y_i = x_0 ... x_{i-1} (X_0 = Y_0 = e_0) and
/// E_{ij} = X_i Y_j.
template <UnitalRing R>
struct MatrixUnitSystem {
    R ring;
    std::size_t n;
    typename R::Element e0;
    std::vector<typename R::Element> X;
    std::vector<typename R::Element> Y;
    std::vector<std::vector<typename R::Element>> E;
};

template <UnitalRing R>
std::string first_matrix_unit_failure(const MatrixUnitSystem<R>& mu, const IdempotentSystem<R>& sys) {
    const R& ring = mu.ring;
    const auto zero = ring.zero();
    const std::size_t n = mu.n;
    auto idx = [](std::size_t a, std::size_t b) { return std::to_string(a) + std::to_string(b); };
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mu.X[i] * mu.Y[i] == sys.e[i])) return "X_" + std::to_string(i) + " Y_" + std::to_string(i) + " = e_i";
        if (!(mu.Y[i] * mu.X[i] == mu.e0)) return "Y_" + std::to_string(i) + " X_" + std::to_string(i) + " = e_0";
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !(mu.Y[i] * mu.X[j] == zero))
                return "Y_" + std::to_string(i) + " X_" + std::to_string(j) + " = 0";
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const auto& expect = j == k ? mu.E[i][l] : zero;
                    if (!(mu.E[i][j] * mu.E[k][l] == expect))
                        return "E_" + idx(i, j) + " E_" + idx(k, l) + (j == k ? " = E_" + idx(i, l) : " = 0");
                }
    auto sum = zero;
    for (std::size_t i = 0; i < n; ++i) sum = sum + mu.E[i][i];
    if (!(sum == ring.one())) return "sum E_ii = 1";
    return {};
}

template <UnitalRing R>
MatrixUnitSystem<R> build_matrix_units(const IdempotentSystem<R>& sys, const CyclicEquivalenceData<R>& d) {
    if (auto failure = first_cyclic_failure(sys, d); !failure.empty())
        throw DomainError("not cyclic equivalence data: " + failure);
    const auto n = static_cast<std::size_t>(sys.n);
    MatrixUnitSystem<R> mu{sys.ring, n, sys.e[0], {sys.e[0]}, {sys.e[0]}, {}};
    for (std::size_t i = 1; i < n; ++i) {
        mu.X.push_back(d.y[i - 1] * mu.X.back());
        mu.Y.push_back(mu.Y.back() * d.x[i - 1]);
    }
    mu.E.assign(n, {});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) mu.E[i].push_back(mu.X[i] * mu.Y[j]);
    if (auto failure = first_matrix_unit_failure(mu, sys); !failure.empty())
        throw InvariantViolation("matrix units violate " + failure);
    return mu;
}

/// Identity of M_n(S), S = e_0 R e_0: e_0 on the diagonal.
template <UnitalRing R>
DenseMatrix<R> corner_identity(const MatrixUnitSystem<R>& mu) {
    return DenseMatrix<R>::scalar(mu.ring, mu.n, mu.e0);
}

template <UnitalRing R>
bool in_corner(const MatrixUnitSystem<R>& mu, const typename R::Element& s) {
    return mu.e0 * s * mu.e0 == s;
}

/// (s_ij) -> sum X_i s_ij Y_j. Entries must lie in e_0 R e_0.
template <UnitalRing R>
typename R::Element phi(const MatrixUnitSystem<R>& mu, const DenseMatrix<R>& m) {
    if (m.rows() != mu.n || m.cols() != mu.n) throw DimensionMismatch("phi expects an n x n matrix");
    auto r = mu.ring.zero();
    for (std::size_t i = 0; i < mu.n; ++i)
        for (std::size_t j = 0; j < mu.n; ++j) {
            if (!in_corner(mu, m(i, j)))
                throw DomainError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not in e_0 R e_0");
            r = r + mu.X[i] * m(i, j) * mu.Y[j];
        }
    return r;
}

/// r -> (Y_i r X_j).
template <UnitalRing R>
DenseMatrix<R> phi_inverse(const MatrixUnitSystem<R>& mu, const typename R::Element& r) {
    DenseMatrix<R> m(mu.ring, mu.n, mu.n);
    for (std::size_t i = 0; i < mu.n; ++i)
        for (std::size_t j = 0; j < mu.n; ++j) m(i, j) = mu.Y[i] * r * mu.X[j];
    return m;
}

} // namespace commord::structure
