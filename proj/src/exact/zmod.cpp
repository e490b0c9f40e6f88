#include "commord/exact/zmod.hpp"

#include <numeric>
#include <utility>

#include "commord/errors.hpp"

namespace commord {

ZmodScalar::ZmodScalar(std::int64_t modulus, std::int64_t value) : modulus_(modulus) {
    if (modulus < 2) throw DomainError("Z/m requires m >= 2, got " + std::to_string(modulus));
    residue_ = value % modulus;
    if (residue_ < 0) residue_ += modulus;
}

void ZmodScalar::check_same_ring(const ZmodScalar& o) const {
    if (modulus_ != o.modulus_)
        throw RingMismatch("Z/" + std::to_string(modulus_) + " vs Z/" + std::to_string(o.modulus_));
}

bool ZmodScalar::is_unit() const noexcept { return std::gcd(residue_, modulus_) == 1; }

std::optional<ZmodScalar> ZmodScalar::try_inverse() const {
    // extended Euclid on (residue, modulus)
    std::int64_t r0 = modulus_, r1 = residue_;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0 != 1) return std::nullopt;
    return ZmodScalar(modulus_, t0);
}

ZmodScalar ZmodScalar::inverse() const {
    auto inv = try_inverse();
    if (!inv) throw NotAUnit("Z/" + std::to_string(modulus_));
    return *inv;
}

std::string ZmodScalar::str() const {
    return std::to_string(residue_) + " mod " + std::to_string(modulus_);
}

ZmodScalar& ZmodScalar::operator+=(const ZmodScalar& o) {
    check_same_ring(o);
    residue_ = static_cast<std::int64_t>((static_cast<__int128>(residue_) + o.residue_) % modulus_);
    return *this;
}

ZmodScalar& ZmodScalar::operator-=(const ZmodScalar& o) {
    check_same_ring(o);
    residue_ -= o.residue_;
    if (residue_ < 0) residue_ += modulus_;
    return *this;
}

ZmodScalar& ZmodScalar::operator*=(const ZmodScalar& o) {
    check_same_ring(o);
    residue_ = static_cast<std::int64_t>((static_cast<__int128>(residue_) * o.residue_) % modulus_);
    return *this;
}

} // namespace commord
