#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "commord/errors.hpp"
#include "commord/rings/linalg.hpp"
#include "commord/structure/matrix_units.hpp"

namespace commord::structure {

/// Rings with a finite basis over an exact field and a coordinate map.
template <class R>
concept FiniteDimensional = UnitalRing<R> && requires(const R& r, const typename R::Element& x) {
    { r.dimension() } -> std::convertible_to<std::size_t>;
    { r.base_field() };
    { r.basis() } -> std::same_as<std::vector<typename R::Element>>;
    { r.coordinates(x) };
};

/// Greedy basis of e R e taken from {e b_i e}.
template <FiniteDimensional R>
std::vector<typename R::Element> corner_basis_of(const R& ring, const typename R::Element& e) {
    using F = std::remove_cvref_t<decltype(ring.base_field())>;
    EchelonSpan<F> span(ring.base_field(), ring.dimension());
    std::vector<typename R::Element> out;
    for (const auto& b : ring.basis()) {
        auto c = e * b * e;
        if (span.add(ring.coordinates(c))) out.push_back(std::move(c));
    }
    return out;
}

struct IsoReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    bool unital = false;            ///< phi(e_0 Id) = 1
    bool additive = false;          ///< phi(s + t) = phi(s) + phi(t) on samples
    bool multiplicative = false;    ///< phi(s t) = phi(s) phi(t) on samples
    bool round_trip_ring = false;   ///< phi(phi^{-1}(r)) = r on samples
    bool round_trip_matrix = false; ///< phi^{-1}(phi(s)) = s on samples
    std::optional<std::size_t> dim_ring;
    std::optional<std::size_t> dim_corner;
    std::optional<std::size_t> image_rank;
    std::optional<bool> bijective;
    std::string bijectivity_note;

    bool ok() const noexcept {
        return unital && additive && multiplicative && round_trip_ring && round_trip_matrix &&
               bijective.value_or(true);
    }
};

/// Random element of M_n(e_0 R e_0).
template <UnitalRing R>
DenseMatrix<R> random_corner_matrix(const MatrixUnitSystem<R>& mu, std::mt19937_64& rng) {
    DenseMatrix<R> m(mu.ring, mu.n, mu.n);
    for (std::size_t i = 0; i < mu.n; ++i)
        for (std::size_t j = 0; j < mu.n; ++j) m(i, j) = mu.e0 * mu.ring.random(rng) * mu.e0;
    return m;
}

template <UnitalRing R>
IsoReport check_isomorphism(const MatrixUnitSystem<R>& mu, std::size_t samples, std::uint64_t seed) {
    const R& ring = mu.ring;
    IsoReport rep;
    rep.n = mu.n;
    rep.samples = samples;
    rep.seed = seed;
    rep.unital = phi(mu, corner_identity(mu)) == ring.one();
    std::mt19937_64 rng(seed);
    rep.additive = rep.multiplicative = rep.round_trip_ring = rep.round_trip_matrix = true;
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = random_corner_matrix(mu, rng);
        const auto b = random_corner_matrix(mu, rng);
        const auto pa = phi(mu, a);
        const auto pb = phi(mu, b);
        rep.additive = rep.additive && phi(mu, a + b) == pa + pb;
        rep.multiplicative = rep.multiplicative && phi(mu, a * b) == pa * pb;
        rep.round_trip_matrix = rep.round_trip_matrix && phi_inverse(mu, pa) == a;
        const auto r = ring.random(rng);
        rep.round_trip_ring = rep.round_trip_ring && phi(mu, phi_inverse(mu, r)) == r;
    }
    if constexpr (FiniteDimensional<R>) {
        using F = std::remove_cvref_t<decltype(ring.base_field())>;
        const auto corner = corner_basis_of(ring, mu.e0);
        EchelonSpan<F> image(ring.base_field(), ring.dimension());
        for (std::size_t i = 0; i < mu.n; ++i)
            for (std::size_t j = 0; j < mu.n; ++j)
                for (const auto& c : corner) image.add(ring.coordinates(mu.X[i] * c * mu.Y[j]));
        rep.dim_ring = ring.dimension();
        rep.dim_corner = corner.size();
        rep.image_rank = image.rank();
        rep.bijective = image.rank() == mu.n * mu.n * corner.size() && image.rank() == ring.dimension();
        rep.bijectivity_note = "exact rank";
    } else {
        rep.bijectivity_note = "injectivity/surjectivity verified on samples only";
    }
    return rep;
}

template <UnitalRing R>
struct StructureResult {
    IdempotentSystem<R> idempotents;
    CyclicEquivalenceData<R> cyclic;
    MatrixUnitSystem<R> units;
    IsoReport iso;
};

namespace detail {

/// Runs one pipeline stage, prefixing the message of known errors with its name.
template <class Fn>
auto run_stage(const char* stage, Fn&& fn) -> decltype(fn()) {
    const std::string prefix = std::string("[") + stage + "] ";
    try {
        return fn();
    } catch (const HypothesisNotSatisfied& e) {
        throw HypothesisNotSatisfied(e.hypothesis(), prefix + e.detail());
    } catch (const NotACyclicConjugator& e) {
        throw NotACyclicConjugator(prefix + e.what());
    } catch (const InvariantViolation& e) {
        throw InvariantViolation(prefix + e.what());
    } catch (const DomainError& e) {
        throw DomainError(prefix + e.what());
    }
}

} // namespace detail

/// u = [a, b] with u^n = 1 and a unit v with v u v^{-1} = w^{-1} u give
/// R = M_n(e_0 R e_0): idempotents -> cyclic data -> matrix units -> phi.
template <UnitalRing R>
StructureResult<R> structure_theorem(const R& ring, const typename R::Element& a, const typename R::Element& b,
                                     const typename R::Element& omega, const typename R::Element& v,
                                     std::int64_t n, std::size_t samples = 25, std::uint64_t seed = 0) {
    const auto u = commutator(a, b);
    auto sys = detail::run_stage("make_idempotents", [&] { return make_idempotents(ring, u, omega, n); });
    auto data = detail::run_stage("conjugator_to_cyclic", [&] { return conjugator_to_cyclic(sys, v); });
    auto units = detail::run_stage("build_matrix_units", [&] { return build_matrix_units(sys, data); });
    auto iso = check_isomorphism(units, samples, seed);
    return {std::move(sys), std::move(data), std::move(units), std::move(iso)};
}

} // namespace commord::structure
