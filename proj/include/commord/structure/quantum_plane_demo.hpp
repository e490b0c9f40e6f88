#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "commord/exact/scalar_rings.hpp"
#include "commord/rings/quantum_plane.hpp"
#include "commord/structure/structure_theorem.hpp"

namespace commord::structure {

/// a = ((1 - w)^n w^{n(n-1)/2})^{-1}, the choice that makes [x, y]^n = 1 when b = 1.
CycloScalar quantum_plane_demo_a(std::int64_t n);

struct QuantumPlaneReport {
    std::int64_t n = 0;
    CycloScalar a{1};
    CycloScalar b{1};
    bool constraint_ok = false;    ///< (1 - w)^n w^{C(n,2)} a b = 1
    bool u_power_ok = false;       ///< [x, y]^n = 1
    bool conjugation_ok = false;   ///< x u x^{-1} = w^{-1} u
    bool x_inverse_ok = false;     ///< x^{-1} = a^{-1} x^{n-1}
    std::size_t dim_algebra = 0;
    std::size_t dim_corner = 0;    ///< dim e_0 R e_0
    bool phi_bijective = false;
    std::vector<CycloScalar> e0_coeffs; ///< e_0 in the x^i y^j basis
    bool e0_closed_form_ok = false;     ///< e_0 = (1/n) sum_j (1 - w)^j (xy)^j
    IsoReport iso;

    bool ok() const noexcept {
        return constraint_ok && u_power_ok && conjugation_ok && x_inverse_ok && dim_corner == 1 &&
               phi_bijective && e0_closed_form_ok && iso.ok();
    }
};

/// Runs the structure pipeline on the quantum plane over Q(zeta_n) with
/// b = 1, a = quantum_plane_demo_a(n), v = x, u = [x, y]. Desk scale: 2 <= n <= 6.
QuantumPlaneReport quantum_plane_demo(std::int64_t n, std::uint64_t seed = 0, std::size_t samples = 25);

} // namespace commord::structure
