#pragma once

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

#include "commord/errors.hpp"

namespace commord {

/// A ring is a "parent" object that knows its zero, one and unit group; its
/// elements carry enough context (modulus, order, dimension) to support the
/// arithmetic operators on their own.
template <class R>
concept UnitalRing = std::copy_constructible<R> &&
    requires(const R& ring, const typename R::Element& x, std::int64_t k, std::mt19937_64& rng) {
        typename R::Element;
        { ring.zero() } -> std::same_as<typename R::Element>;
        { ring.one() } -> std::same_as<typename R::Element>;
        { ring.from_int(k) } -> std::same_as<typename R::Element>;
        { x + x } -> std::convertible_to<typename R::Element>;
        { x - x } -> std::convertible_to<typename R::Element>;
        { x * x } -> std::convertible_to<typename R::Element>;
        { -x } -> std::convertible_to<typename R::Element>;
        { x == x } -> std::convertible_to<bool>;
        { ring.is_unit(x) } -> std::same_as<bool>;
        { ring.inverse(x) } -> std::same_as<typename R::Element>;
        { ring.is_central(x) } -> std::same_as<bool>;
        { ring.contains(x) } -> std::same_as<bool>;
        { ring.characteristic() } -> std::same_as<std::int64_t>;
        { ring.random(rng) } -> std::same_as<typename R::Element>;
        { ring.name() } -> std::convertible_to<std::string>;
        { ring == ring } -> std::convertible_to<bool>;
    };

/// Rings whose nonzero elements are all units. `is_field` must be a constexpr true.
template <class R>
concept ExactField = UnitalRing<R> && R::is_field && requires(const typename R::Element& x) {
    { x.is_zero() } -> std::same_as<bool>;
};

/// x^k for k >= 0 by repeated squaring; negative k inverts first.
template <UnitalRing R>
typename R::Element power(const R& ring, typename R::Element x, std::int64_t k) {
    if (k < 0) {
        x = ring.inverse(x);
        k = -k;
    }
    typename R::Element result = ring.one();
    while (k > 0) {
        if (k & 1) result = result * x;
        k >>= 1;
        if (k > 0) x = x * x;
    }
    return result;
}

/// ab - ba.
template <class E>
E commutator(const E& a, const E& b) {
    return a * b - b * a;
}

} // namespace commord
