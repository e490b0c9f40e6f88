#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace commord {

/// Residue class in Z/mZ, stored as its canonical representative in [0, m).
class ZmodScalar {
public:
    /// Reduces `value` into [0, modulus). Throws DomainError if modulus < 2.
    ZmodScalar(std::int64_t modulus, std::int64_t value);

    std::int64_t modulus() const noexcept { return modulus_; }
    std::int64_t residue() const noexcept { return residue_; }

    bool is_zero() const noexcept { return residue_ == 0; }
    bool is_unit() const noexcept;
    /// Throws NotAUnit naming "Z/m" when gcd(residue, m) != 1.
    ZmodScalar inverse() const;
    std::optional<ZmodScalar> try_inverse() const;

    std::string str() const;

    ZmodScalar& operator+=(const ZmodScalar& o);
    ZmodScalar& operator-=(const ZmodScalar& o);
    ZmodScalar& operator*=(const ZmodScalar& o);

    friend ZmodScalar operator+(ZmodScalar a, const ZmodScalar& b) { return a += b; }
    friend ZmodScalar operator-(ZmodScalar a, const ZmodScalar& b) { return a -= b; }
    friend ZmodScalar operator*(ZmodScalar a, const ZmodScalar& b) { return a *= b; }
    friend ZmodScalar operator-(const ZmodScalar& a) { return ZmodScalar(a.modulus_, -a.residue_); }

    friend bool operator==(const ZmodScalar&, const ZmodScalar&) = default;

    friend std::ostream& operator<<(std::ostream& os, const ZmodScalar& z) { return os << z.str(); }

private:
    void check_same_ring(const ZmodScalar& o) const;

    std::int64_t modulus_;
    std::int64_t residue_;
};

} // namespace commord
