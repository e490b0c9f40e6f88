#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commord/errors.hpp"
#include "commord/rings/dense_matrix.hpp"

namespace commord::witness {

template <UnitalRing R>
struct DPPair {
    DenseMatrix<R> D; ///< diag(0, 1, ..., n-1)
    DenseMatrix<R> P; ///< P_{ij} = 1 iff i = cyc(j + 1), 1-based
};

/// The cyclic permutation matrix P^k: entry (i, j) is 1 iff i = cyc(j + k).
template <UnitalRing R>
DenseMatrix<R> cyclic_shift(const R& ring, std::size_t n, std::int64_t k) {
    DenseMatrix<R> P(ring, n, n);
    for (std::size_t j = 1; j <= n; ++j) P(cyclic_index(static_cast<std::int64_t>(j) + k, n) - 1, j - 1) = ring.one();
    return P;
}

template <UnitalRing R>
DPPair<R> build_DP(std::size_t n, const R& ring) {
    if (n < 2) throw DomainError("build_DP requires n >= 2");
    DenseMatrix<R> D(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) D(i, i) = ring.from_int(static_cast<std::int64_t>(i));
    return {std::move(D), cyclic_shift(ring, n, 1)};
}

template <UnitalRing R>
struct LemmaPDReport {
    std::size_t n;
    std::string ring;
    DenseMatrix<R> commutator;     ///< [D, P]
    DenseMatrix<R> direct;         ///< [D, P]^n
    DenseMatrix<R> factored;       ///< Delta^(1) ... Delta^(n) P^n
    DenseMatrix<R> expected;       ///< (1 - n) Id
    bool commutator_is_p_delta = false;
    bool routes_agree = false;
    bool matches_expected = false;
    bool ok() const noexcept { return commutator_is_p_delta && routes_agree && matches_expected; }
};

/// [D, P]^n = (1 - n) Id, computed directly and through [D, P] = P Delta,
/// (P Delta)^n = Delta^(1) ... Delta^(n) P^n with Delta^(k) = P^k Delta P^{-k}.
/// Any disagreement is an implementation bug and throws InvariantViolation.
template <UnitalRing R>
LemmaPDReport<R> lemma_pd_check(std::size_t n, const R& ring) {
    const auto [D, P] = build_DP(n, ring);
    const auto nn = static_cast<std::int64_t>(n);
    std::vector<typename R::Element> delta_diag(n, ring.one());
    delta_diag.back() = ring.from_int(1 - nn);
    const auto delta = DenseMatrix<R>::diagonal(ring, delta_diag);

    const auto c = commutator(D, P);
    auto direct = mat_power(c, nn);
    auto factored = DenseMatrix<R>::identity(ring, n);
    for (std::int64_t k = 1; k <= nn; ++k)
        factored = factored * (mat_power(P, k) * delta * mat_power(P, -k));
    factored = factored * mat_power(P, nn);
    auto expected = DenseMatrix<R>::scalar(ring, n, ring.from_int(1 - nn));

    LemmaPDReport<R> report{n, ring.name(), c, std::move(direct), std::move(factored), std::move(expected)};
    report.commutator_is_p_delta = c == P * delta;
    report.routes_agree = report.direct == report.factored;
    report.matches_expected = report.direct == report.expected;
    if (!report.ok())
        throw InvariantViolation("[D,P]^n identity failed for n = " + std::to_string(n) + " over " +
                                 ring.name());
    return report;
}

/// 1 = v_1 + ... + v_{n-1} with every v_i a central unit.
template <UnitalRing R>
struct CentralUnitDecomposition {
    R ring;
    std::vector<typename R::Element> units;
};

/// Throws HypothesisNotSatisfied naming the first failing condition.
template <UnitalRing R>
void validate_decomposition(const CentralUnitDecomposition<R>& dec, std::size_t n) {
    if (n < 2) throw DomainError("n must be >= 2");
    if (dec.units.size() != n - 1)
        throw HypothesisNotSatisfied("n-1 units", "got " + std::to_string(dec.units.size()) +
                                                      " values for n = " + std::to_string(n));
    auto sum = dec.ring.zero();
    for (std::size_t i = 0; i < dec.units.size(); ++i) {
        const auto& v = dec.units[i];
        if (!dec.ring.contains(v)) throw RingMismatch("v_" + std::to_string(i + 1) + " outside " + dec.ring.name());
        if (!dec.ring.is_unit(v)) throw HypothesisNotSatisfied("v_i unit", "v_" + std::to_string(i + 1));
        if (!dec.ring.is_central(v)) throw HypothesisNotSatisfied("v_i central", "v_" + std::to_string(i + 1));
        sum = sum + v;
    }
    if (!(sum == dec.ring.one())) throw HypothesisNotSatisfied("sum v_i = 1", dec.ring.name());
}

template <UnitalRing R>
struct Theorem32Witness {
    DenseMatrix<R> A;
    DenseMatrix<R> B;
    DenseMatrix<R> commutator; ///< [A, B], equal to P
};

/// u_0 = 1, u_k = -v_k, s_k = u_0 + ... + u_{k-1}; A = diag(s_0..s_{n-1}),
/// B = sum_k u_{k-1}^{-1} E_{cyc(k+1), k}. Verifies [A, B] = P and [A, B]^n = Id.
template <UnitalRing R>
Theorem32Witness<R> build_theorem32(std::size_t n, const CentralUnitDecomposition<R>& dec) {
    validate_decomposition(dec, n);
    const R& ring = dec.ring;
    std::vector<typename R::Element> u{ring.one()};
    for (const auto& v : dec.units) u.push_back(-v);
    DenseMatrix<R> A(ring, n, n), B(ring, n, n);
    auto s = ring.zero();
    for (std::size_t k = 0; k < n; ++k) {
        A(k, k) = s;
        s = s + u[k];
    }
    for (std::size_t k = 1; k <= n; ++k)
        B(cyclic_index(static_cast<std::int64_t>(k) + 1, n) - 1, k - 1) = ring.inverse(u[k - 1]);
    auto c = commutator(A, B);
    if (!(c == cyclic_shift(ring, n, 1))) throw InvariantViolation("[A, B] != P");
    if (!(mat_power(c, static_cast<std::int64_t>(n)) == DenseMatrix<R>::identity(ring, n)))
        throw InvariantViolation("[A, B]^n != Id");
    return {std::move(A), std::move(B), std::move(c)};
}

enum class CorollaryStrategy { n2, n3, inverse_n_minus_1, char_divides };

inline std::optional<CorollaryStrategy> parse_strategy(std::string_view s) {
    if (s == "n2") return CorollaryStrategy::n2;
    if (s == "n3") return CorollaryStrategy::n3;
    if (s == "inverse_n_minus_1") return CorollaryStrategy::inverse_n_minus_1;
    if (s == "char_divides") return CorollaryStrategy::char_divides;
    return std::nullopt;
}

/// The v_k each corollary proof uses. `u` is only read by the n3 strategy.
template <UnitalRing R>
CentralUnitDecomposition<R> corollary_units(std::size_t n, const R& ring, CorollaryStrategy strategy,
                                            const std::optional<typename R::Element>& u = std::nullopt) {
    if (n < 2) throw DomainError("n must be >= 2");
    CentralUnitDecomposition<R> dec{ring, {}};
    const auto nn = static_cast<std::int64_t>(n);
    switch (strategy) {
    case CorollaryStrategy::n2:
        if (n != 2) throw HypothesisNotSatisfied("n = 2", "n = " + std::to_string(n));
        dec.units = {ring.one()};
        break;
    case CorollaryStrategy::n3: {
        if (n != 3) throw HypothesisNotSatisfied("n = 3", "n = " + std::to_string(n));
        if (!u) throw HypothesisNotSatisfied("u given", "strategy n3 needs a unit u");
        const auto rest = ring.one() - *u;
        if (!ring.is_unit(*u) || !ring.is_central(*u)) throw HypothesisNotSatisfied("u central unit", ring.name());
        if (!ring.is_unit(rest) || !ring.is_central(rest))
            throw HypothesisNotSatisfied("1-u central unit", ring.name());
        dec.units = {*u, rest};
        break;
    }
    case CorollaryStrategy::inverse_n_minus_1: {
        const auto m = ring.from_int(nn - 1);
        if (!ring.is_unit(m)) throw HypothesisNotSatisfied("n-1 unit", ring.name());
        dec.units.assign(n - 1, ring.inverse(m));
        break;
    }
    case CorollaryStrategy::char_divides: {
        const std::int64_t c = ring.characteristic();
        const bool divides = c == 0 ? nn == 2 : (nn - 2) % c == 0;
        if (!divides)
            throw HypothesisNotSatisfied("char(S) | n-2", "char " + std::to_string(c) + ", n = " + std::to_string(n));
        dec.units.assign(n - 1, ring.one());
        break;
    }
    }
    validate_decomposition(dec, n);
    return dec;
}

} // namespace commord::witness
