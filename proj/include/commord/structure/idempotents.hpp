#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "commord/errors.hpp"
#include "commord/rings/ring.hpp"

namespace commord::structure {

/// Spectral idempotents of u with u^n = 1: e_k = (1/n) sum_j w^{-kj} u^j, so
/// that u = sum_k w^k e_k.
template <UnitalRing R>
struct IdempotentSystem {
    R ring;
    std::int64_t n;
    typename R::Element u;
    typename R::Element omega;
    std::vector<typename R::Element> e;

    /// e_k with k taken mod n (e_n = e_0).
    const typename R::Element& idempotent(std::int64_t k) const {
        return e[static_cast<std::size_t>(((k % n) + n) % n)];
    }
};

/// Hypotheses on w, in the order they are checked. Throws HypothesisNotSatisfied
/// naming the first one that fails.
template <UnitalRing R>
void check_root_hypotheses(const R& ring, const typename R::Element& omega, std::int64_t n) {
    if (n < 2) throw DomainError("n must be >= 2, got " + std::to_string(n));
    if (!ring.contains(omega)) throw RingMismatch("omega outside " + ring.name());
    if (!ring.is_central(omega)) throw HypothesisNotSatisfied("omega central", ring.name());
    if (!ring.is_unit(omega)) throw HypothesisNotSatisfied("omega unit", ring.name());
    if (!(power(ring, omega, n) == ring.one())) throw HypothesisNotSatisfied("omega^n = 1", ring.name());
    std::vector<typename R::Element> powers{ring.one()};
    for (std::int64_t i = 1; i < n; ++i) powers.push_back(powers.back() * omega);
    for (std::int64_t i = 1; i < n; ++i)
        for (std::int64_t j = 0; j < i; ++j)
            if (!ring.is_unit(powers[i] - powers[j]))
                throw HypothesisNotSatisfied("omega^i-omega^j unit",
                                             "i = " + std::to_string(i) + ", j = " + std::to_string(j) +
                                                 " in " + ring.name());
}

/// Returns the first failing identity among e_k^2 = e_k, e_k e_l = 0,
/// sum e_k = 1, sum w^k e_k = u; empty if all hold.
template <UnitalRing R>
std::string first_idempotent_failure(const IdempotentSystem<R>& sys) {
    const R& ring = sys.ring;
    const auto zero = ring.zero();
    auto sum = zero, spectral = zero, wk = ring.one();
    for (std::int64_t k = 0; k < sys.n; ++k) {
        for (std::int64_t l = 0; l < sys.n; ++l) {
            const auto prod = sys.idempotent(k) * sys.idempotent(l);
            if (k == l && !(prod == sys.idempotent(k))) return "e_" + std::to_string(k) + "^2 = e_" + std::to_string(k);
            if (k != l && !(prod == zero))
                return "e_" + std::to_string(k) + " e_" + std::to_string(l) + " = 0";
        }
        sum = sum + sys.idempotent(k);
        spectral = spectral + wk * sys.idempotent(k);
        wk = wk * sys.omega;
    }
    if (!(sum == ring.one())) return "sum e_k = 1";
    if (!(spectral == sys.u)) return "sum omega^k e_k = u";
    return {};
}

template <UnitalRing R>
IdempotentSystem<R> make_idempotents(const R& ring, const typename R::Element& u,
                                     const typename R::Element& omega, std::int64_t n) {
    check_root_hypotheses(ring, omega, n);
    if (!ring.contains(u)) throw RingMismatch("u outside " + ring.name());
    const auto n_elem = ring.from_int(n);
    if (!ring.is_unit(n_elem)) throw HypothesisNotSatisfied("n unit", ring.name());
    if (!(power(ring, u, n) == ring.one())) throw HypothesisNotSatisfied("u^n = 1", ring.name());

    const auto n_inv = ring.inverse(n_elem);
    const auto omega_inv = ring.inverse(omega);
    std::vector<typename R::Element> u_pow{ring.one()};
    for (std::int64_t j = 1; j < n; ++j) u_pow.push_back(u_pow.back() * u);

    IdempotentSystem<R> sys{ring, n, u, omega, {}};
    auto w_k = ring.one(); // w^{-k}
    for (std::int64_t k = 0; k < n; ++k) {
        auto e = ring.zero();
        auto coeff = ring.one(); // w^{-kj}
        for (std::int64_t j = 0; j < n; ++j) {
            e = e + coeff * u_pow[static_cast<std::size_t>(j)];
            coeff = coeff * w_k;
        }
        sys.e.push_back(n_inv * e);
        w_k = w_k * omega_inv;
    }
    if (auto failure = first_idempotent_failure(sys); !failure.empty())
        throw InvariantViolation("idempotent system violates " + failure);
    return sys;
}

/// p_k(t) = prod_{j != k} (t - w^j) (w^k - w^j)^{-1}.
template <UnitalRing R>
typename R::Element lagrange_projector(const R& ring, const typename R::Element& omega, std::int64_t n,
                                       std::int64_t k, const typename R::Element& t) {
    if (n < 1) throw DomainError("n must be >= 1");
    const auto wk = power(ring, omega, ((k % n) + n) % n);
    auto result = ring.one();
    auto wj = ring.one();
    for (std::int64_t j = 0; j < n; ++j, wj = wj * omega) {
        if (j == ((k % n) + n) % n) continue;
        const auto denom = wk - wj;
        if (!ring.is_unit(denom)) throw NotAUnit(ring.name());
        result = result * (t - wj) * ring.inverse(denom);
    }
    return result;
}

} // namespace commord::structure
