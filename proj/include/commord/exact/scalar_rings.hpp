#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "commord/exact/cyclotomic.hpp"
#include "commord/exact/rational.hpp"
#include "commord/exact/zmod.hpp"
#include "commord/rings/ring.hpp"

namespace commord {

/// Random integers for sampled identity checks are drawn from [-3, 3].
inline constexpr std::int64_t kSampleBound = 3;

inline std::int64_t sample_small(std::mt19937_64& rng) {
    return std::uniform_int_distribution<std::int64_t>(-kSampleBound, kSampleBound)(rng);
}

class RationalField {
public:
    using Element = Rational;
    static constexpr bool is_field = true;
    static constexpr bool is_commutative = true;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(std::int64_t k) const { return Rational(k); }
    bool is_unit(const Element& x) const { return !x.is_zero(); }
    Element inverse(const Element& x) const { return x.inverse(); }
    bool is_central(const Element&) const { return true; }
    bool contains(const Element&) const { return true; }
    std::int64_t characteristic() const { return 0; }
    Element random(std::mt19937_64& rng) const { return Rational(sample_small(rng)); }
    std::string name() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) = default;
};

class ZmodRing {
public:
    using Element = ZmodScalar;
    static constexpr bool is_field = false;
    static constexpr bool is_commutative = true;

    explicit ZmodRing(std::int64_t modulus) : modulus_(ZmodScalar(modulus, 0).modulus()) {}

    std::int64_t modulus() const noexcept { return modulus_; }

    Element zero() const { return ZmodScalar(modulus_, 0); }
    Element one() const { return ZmodScalar(modulus_, 1); }
    Element from_int(std::int64_t k) const { return ZmodScalar(modulus_, k); }
    bool is_unit(const Element& x) const { return x.is_unit(); }
    Element inverse(const Element& x) const { return x.inverse(); }
    bool is_central(const Element&) const { return true; }
    bool contains(const Element& x) const { return x.modulus() == modulus_; }
    std::int64_t characteristic() const { return modulus_; }
    Element random(std::mt19937_64& rng) const {
        return ZmodScalar(modulus_, std::uniform_int_distribution<std::int64_t>(0, modulus_ - 1)(rng));
    }
    std::string name() const { return "Z/" + std::to_string(modulus_); }
    friend bool operator==(const ZmodRing&, const ZmodRing&) = default;

private:
    std::int64_t modulus_;
};

class CyclotomicField {
public:
    using Element = CycloScalar;
    static constexpr bool is_field = true;
    static constexpr bool is_commutative = true;

    explicit CyclotomicField(std::int64_t order) : order_(order) { (void)euler_phi(order); }

    std::int64_t order() const noexcept { return order_; }
    std::int64_t degree() const { return euler_phi(order_); }

    Element zero() const { return CycloScalar(order_); }
    Element one() const { return CycloScalar(order_, Rational(1)); }
    Element from_int(std::int64_t k) const { return CycloScalar(order_, Rational(k)); }
    Element from_rational(const Rational& q) const { return CycloScalar(order_, q); }
    /// The canonical primitive root zeta_m.
    Element generator() const { return CycloScalar::root(order_, 1); }
    Element root(std::int64_t exponent) const { return CycloScalar::root(order_, exponent); }
    bool is_unit(const Element& x) const { return !x.is_zero(); }
    Element inverse(const Element& x) const { return x.inverse(); }
    bool is_central(const Element&) const { return true; }
    bool contains(const Element& x) const { return x.order() == order_; }
    std::int64_t characteristic() const { return 0; }
    Element random(std::mt19937_64& rng) const {
        std::vector<Rational> c(static_cast<std::size_t>(degree()));
        for (auto& q : c) q = Rational(sample_small(rng));
        return CycloScalar(order_, std::move(c));
    }
    std::string name() const { return "Q(zeta_" + std::to_string(order_) + ")"; }
    friend bool operator==(const CyclotomicField&, const CyclotomicField&) = default;

private:
    std::int64_t order_;
};

static_assert(ExactField<RationalField>);
static_assert(UnitalRing<ZmodRing>);
static_assert(ExactField<CyclotomicField>);

inline bool scalar_is_unit(const Rational& s) { return !s.is_zero(); }
inline bool scalar_is_unit(const ZmodScalar& s) { return s.is_unit(); }
inline bool scalar_is_unit(const CycloScalar& s) { return !s.is_zero(); }

inline Rational scalar_inverse(const Rational& s) { return s.inverse(); }
inline ZmodScalar scalar_inverse(const ZmodScalar& s) { return s.inverse(); }
inline CycloScalar scalar_inverse(const CycloScalar& s) { return s.inverse(); }

} // namespace commord
