#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "commord/errors.hpp"
#include "commord/exact/scalar_rings.hpp"
#include "commord/rings/dense_matrix.hpp"
#include "commord/rings/linalg.hpp"

namespace commord::witness {

/// A pair (A, B) with [A, B] = C, C^k = Id_n and tr C = 0.
template <ExactField F>
struct CommutatorWitness {
    std::int64_t k;
    std::size_t n;
    DenseMatrix<F> A;
    DenseMatrix<F> B;
    DenseMatrix<F> C;
};

struct WitnessChecks {
    bool commutator_ok = false;
    bool power_ok = false;
    bool trace_zero = false;
    bool all() const noexcept { return commutator_ok && power_ok && trace_zero; }
};

template <ExactField F>
WitnessChecks check_witness(const CommutatorWitness<F>& w) {
    WitnessChecks c;
    const F& field = w.C.ring();
    c.commutator_ok = commutator(w.A, w.B) == w.C;
    c.power_ok = w.C.is_square() && mat_power(w.C, w.k) == DenseMatrix<F>::identity(field, w.C.rows());
    c.trace_zero = w.C.is_square() && trace(w.C).is_zero();
    return c;
}

template <ExactField F>
struct Similarity {
    DenseMatrix<F> S;
    DenseMatrix<F> S_inverse;
    DenseMatrix<F> Z; ///< S^{-1} M S, zero diagonal
};

/// Finds S with S^{-1} M S having zero diagonal, for trace-zero M over a
/// characteristic-0 field. Works down the diagonal: whenever the (p, p) entry
/// of the current matrix is nonzero, the trailing block B gets the new basis
/// (v, Bv, completion by standard vectors), which zeroes that entry and leaves
/// a trailing block of trace zero.
template <ExactField F>
Similarity<F> zero_diagonal_similarity(const DenseMatrix<F>& M) {
    const F& field = M.ring();
    if (!M.is_square()) throw DimensionMismatch("similarity needs a square matrix");
    if (field.characteristic() != 0)
        throw DomainError("zero-diagonal similarity is implemented for characteristic 0 only");
    if (!trace(M).is_zero()) throw DomainError("matrix has nonzero trace");
    using E = typename F::Element;
    const std::size_t n = M.rows();
    DenseMatrix<F> Z = M;
    DenseMatrix<F> S = DenseMatrix<F>::identity(field, n);
    DenseMatrix<F> S_inv = S;
    for (std::size_t p = 0; p + 1 < n; ++p) {
        if (Z(p, p).is_zero()) continue;
        const std::size_t m = n - p;
        auto block = [&](std::size_t i, std::size_t j) -> const E& { return Z(p + i, p + j); };

        std::vector<E> v(m, field.zero());
        bool found = false;
        for (std::size_t i = 0; i < m && !found; ++i)
            for (std::size_t r = 0; r < m; ++r)
                if (r != i && !block(r, i).is_zero()) {
                    v[i] = field.one();
                    found = true;
                    break;
                }
        if (!found) {
            // diagonal block with nonzero trace-0 diagonal, hence not scalar
            for (std::size_t j = 1; j < m && !found; ++j)
                if (!(block(j, j) == block(0, 0))) {
                    v[0] = field.one();
                    v[j] = field.one();
                    found = true;
                }
            if (!found) throw InvariantViolation("trace-zero block is a nonzero scalar");
        }
        std::vector<E> bv(m, field.zero());
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                if (!v[c].is_zero()) bv[r] = bv[r] + block(r, c) * v[c];

        EchelonSpan<F> span(field, m);
        std::vector<std::vector<E>> columns;
        for (auto* candidate : {&v, &bv})
            if (span.add(*candidate)) columns.push_back(*candidate);
        if (columns.size() != 2) throw InvariantViolation("v and Mv are dependent");
        for (std::size_t i = 0; i < m && columns.size() < m; ++i) {
            std::vector<E> e(m, field.zero());
            e[i] = field.one();
            if (span.add(e)) columns.push_back(std::move(e));
        }

        DenseMatrix<F> T = DenseMatrix<F>::identity(field, n);
        for (std::size_t c = 0; c < m; ++c)
            for (std::size_t r = 0; r < m; ++r) T(p + r, p + c) = columns[c][r];
        const DenseMatrix<F> T_inv = inverse(T);
        Z = T_inv * Z * T;
        S = S * T;
        S_inv = T_inv * S_inv;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (!Z(i, i).is_zero()) throw InvariantViolation("diagonal entry left nonzero");
    if (!(S_inv * M * S == Z)) throw InvariantViolation("similarity transform does not reproduce Z");
    return {std::move(S), std::move(S_inv), std::move(Z)};
}

template <ExactField F>
struct CommutatorPair {
    DenseMatrix<F> A;
    DenseMatrix<F> B;
};

/// A, B with [A, B] = M for trace-zero M: conjugate M to zero diagonal Z, take
/// A0 = diag(0, 1, ..., n-1) and (B0)_{ij} = Z_{ij} / (i - j) off the diagonal,
/// 0 on it, and conjugate back.
template <ExactField F>
CommutatorPair<F> solve_commutator(const DenseMatrix<F>& M) {
    const F& field = M.ring();
    const auto sim = zero_diagonal_similarity(M);
    const std::size_t n = M.rows();
    DenseMatrix<F> A0(field, n, n), B0(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        A0(i, i) = field.from_int(static_cast<std::int64_t>(i));
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                B0(i, j) = sim.Z(i, j) * field.inverse(field.from_int(static_cast<std::int64_t>(i) -
                                                                      static_cast<std::int64_t>(j)));
    }
    CommutatorPair<F> out{sim.S * A0 * sim.S_inverse, sim.S * B0 * sim.S_inverse};
    if (!(commutator(out.A, out.B) == M)) throw InvariantViolation("[A, B] != M after construction");
    return out;
}

/// Checked certificate for C: requires tr C = 0 and C^k = Id.
template <ExactField F>
CommutatorWitness<F> realize_commutator(const DenseMatrix<F>& C, std::int64_t k) {
    if (!C.is_square()) throw DimensionMismatch("C must be square");
    if (k < 1) throw DomainError("k must be >= 1");
    if (!(mat_power(C, k) == DenseMatrix<F>::identity(C.ring(), C.rows())))
        throw DomainError("C^k != Id");
    auto pair = solve_commutator(C);
    CommutatorWitness<F> w{k, C.rows(), std::move(pair.A), std::move(pair.B), C};
    if (!check_witness(w).all()) throw InvariantViolation("witness failed its own checks");
    return w;
}

using CycloMatrix = DenseMatrix<CyclotomicField>;
using CycloWitness = CommutatorWitness<CyclotomicField>;

/// diag(zeta_k^e) for the exponents of the weight-set multiset of (k, n).
/// Throws NotInWeightSet when no such multiset exists.
CycloMatrix build_C(std::int64_t k, std::int64_t n);

/// realize_commutator(build_C(k, n), k).
CycloWitness build_witness(std::int64_t k, std::int64_t n);

} // namespace commord::witness
