#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "commord/exact/rational.hpp"

namespace commord {

std::int64_t euler_phi(std::int64_t m);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
/// Computed once per m as (x^m - 1) / prod_{d | m, d < m} Phi_d and cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m);

/// Element of Q(zeta_m) in the power basis 1, z, ..., z^{phi(m)-1}, reduced
/// modulo Phi_m so that equality is coefficient-wise.
///
/// Stored as integer numerators over one positive common denominator with
/// gcd(den, all numerators) = 1, normalized after every operation, so the
/// representation is canonical and products need no per-coefficient gcds.
class CycloScalar {
public:
    /// Zero of Q(zeta_m).
    explicit CycloScalar(std::int64_t order);
    CycloScalar(std::int64_t order, const Rational& constant);
    /// Takes an arbitrary-length coefficient vector in powers of zeta_m and reduces it.
    CycloScalar(std::int64_t order, std::vector<Rational> coeffs);

    /// zeta_order^exponent; exponent is taken mod order.
    static CycloScalar root(std::int64_t order, std::int64_t exponent);

    std::int64_t order() const noexcept { return order_; }
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(num_.size()); }
    std::vector<Rational> coeffs() const;
    Rational coeff(std::size_t i) const;
    /// Common denominator and numerators: coeff(i) = numerators()[i] / denominator().
    const mpz_class& denominator() const noexcept { return den_; }
    const std::vector<mpz_class>& numerators() const noexcept { return num_; }

    bool is_zero() const;
    bool is_rational() const;

    /// Inverse by solving the phi(m) x phi(m) system of the multiplication-by-this
    /// operator. Throws NotAUnit for zero.
    CycloScalar inverse() const;

    /// Image under Q(zeta_m) -> Q(zeta_{m t}), zeta_m -> zeta_{m t}^t.
    CycloScalar embed(std::int64_t t) const;

    std::string str() const;

    CycloScalar& operator+=(const CycloScalar& o);
    CycloScalar& operator-=(const CycloScalar& o);
    CycloScalar& operator*=(const CycloScalar& o);
    CycloScalar& operator*=(const Rational& q);

    friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
    friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
    friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
    friend CycloScalar operator*(CycloScalar a, const Rational& q) { return a *= q; }
    friend CycloScalar operator-(CycloScalar a);

    friend bool operator==(const CycloScalar&, const CycloScalar&) = default;

    friend std::ostream& operator<<(std::ostream& os, const CycloScalar& c) { return os << c.str(); }

private:
    void check_same_field(const CycloScalar& o) const;
    void normalize();

    std::int64_t order_;
    std::vector<mpz_class> num_;
    mpz_class den_{1};
};

/// cyclo_root(m, e) = zeta_m^e. Throws DomainError for m < 1.
inline CycloScalar cyclo_root(std::int64_t order, std::int64_t exponent) {
    return CycloScalar::root(order, exponent);
}

} // namespace commord
