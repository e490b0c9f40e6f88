#pragma once

#include <string>
#include <vector>

#include "commord/errors.hpp"
#include "commord/structure/idempotents.hpp"

namespace commord::structure {

/// x_k in e_k R e_{k+1}, y_k in e_{k+1} R e_k with x_k y_k = e_k, y_k x_k = e_{k+1}.
template <UnitalRing R>
struct CyclicEquivalenceData {
    std::vector<typename R::Element> x;
    std::vector<typename R::Element> y;
};

/// First failing identity of the data, or empty.
template <UnitalRing R>
std::string first_cyclic_failure(const IdempotentSystem<R>& sys, const CyclicEquivalenceData<R>& d) {
    const auto n = static_cast<std::size_t>(sys.n);
    if (d.x.size() != n || d.y.size() != n) return "n elements x_k and y_k";
    for (std::int64_t k = 0; k < sys.n; ++k) {
        const auto& x = d.x[static_cast<std::size_t>(k)];
        const auto& y = d.y[static_cast<std::size_t>(k)];
        const auto& ek = sys.idempotent(k);
        const auto& ek1 = sys.idempotent(k + 1);
        const std::string ks = std::to_string(k);
        if (!(ek * x * ek1 == x)) return "x_" + ks + " in e_k R e_{k+1}";
        if (!(ek1 * y * ek == y)) return "y_" + ks + " in e_{k+1} R e_k";
        if (!(x * y == ek)) return "x_" + ks + " y_" + ks + " = e_k";
        if (!(y * x == ek1)) return "y_" + ks + " x_" + ks + " = e_{k+1}";
    }
    return {};
}

/// x_k = e_k v^{-1}, y_k = v e_k for a unit v with v u v^{-1} = w^{-1} u.
template <UnitalRing R>
CyclicEquivalenceData<R> conjugator_to_cyclic(const IdempotentSystem<R>& sys, const typename R::Element& v) {
    const R& ring = sys.ring;
    if (!ring.is_unit(v)) throw NotACyclicConjugator("v is not a unit in " + ring.name());
    const auto v_inv = ring.inverse(v);
    if (!(v * sys.u * v_inv == ring.inverse(sys.omega) * sys.u))
        throw NotACyclicConjugator("v u v^{-1} != omega^{-1} u");
    CyclicEquivalenceData<R> d;
    for (std::int64_t k = 0; k < sys.n; ++k) {
        d.x.push_back(sys.idempotent(k) * v_inv);
        d.y.push_back(v * sys.idempotent(k));
    }
    if (auto failure = first_cyclic_failure(sys, d); !failure.empty())
        throw InvariantViolation("conjugator data violates " + failure);
    return d;
}

template <UnitalRing R>
struct Conjugator {
    typename R::Element v;
    typename R::Element v_inverse; ///< w = sum x_k
};

/// v = sum y_k with inverse w = sum x_k; v u v^{-1} = w^{-1} u is verified.
template <UnitalRing R>
Conjugator<R> cyclic_to_conjugator(const IdempotentSystem<R>& sys, const CyclicEquivalenceData<R>& d) {
    if (auto failure = first_cyclic_failure(sys, d); !failure.empty())
        throw DomainError("not cyclic equivalence data: " + failure);
    const R& ring = sys.ring;
    auto v = ring.zero(), w = ring.zero();
    for (std::size_t k = 0; k < d.x.size(); ++k) {
        v = v + d.y[k];
        w = w + d.x[k];
    }
    if (!(v * w == ring.one()) || !(w * v == ring.one())) throw InvariantViolation("sum y_k is not inverse to sum x_k");
    for (std::int64_t k = 0; k < sys.n; ++k)
        if (!(v * sys.idempotent(k) * w == sys.idempotent(k + 1)))
            throw InvariantViolation("v e_k v^{-1} != e_{k+1}");
    if (!(v * sys.u * w == ring.inverse(sys.omega) * sys.u)) throw InvariantViolation("v u v^{-1} != omega^{-1} u");
    return {std::move(v), std::move(w)};
}

} // namespace commord::structure
