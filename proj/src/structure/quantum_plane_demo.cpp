#include "commord/structure/quantum_plane_demo.hpp"

#include "commord/errors.hpp"

namespace commord::structure {

CycloScalar quantum_plane_demo_a(std::int64_t n) {
    const CyclotomicField k(n);
    return quantum_plane_constraint(n, k.one(), k.one()).inverse();
}

QuantumPlaneReport quantum_plane_demo(std::int64_t n, std::uint64_t seed, std::size_t samples) {
    if (n < 2 || n > 6) throw DomainError("quantum plane demo supports 2 <= n <= 6, got " + std::to_string(n));
    const CyclotomicField k(n);
    QuantumPlaneReport rep;
    rep.n = n;
    rep.a = quantum_plane_demo_a(n);
    rep.b = k.one();
    rep.constraint_ok = quantum_plane_constraint(n, rep.a, rep.b) == k.one();

    const QuantumPlane alg = quantum_plane(n, rep.a, rep.b);
    rep.dim_algebra = alg.dimension();
    const auto x = quantum_x(alg, n);
    const auto y = quantum_y(alg, n);
    const auto omega = alg.scalar(k.generator());
    const auto u = commutator(x, y);
    rep.u_power_ok = power(alg, u, n) == alg.one();
    const auto x_inv = algebra_inverse(alg, x);
    rep.x_inverse_ok = x_inv == power(alg, x, n - 1).scaled(rep.a.inverse());
    rep.conjugation_ok = x * u * x_inv == alg.inverse(omega) * u;

    auto result = structure_theorem(alg, x, y, omega, x, n, samples, seed);
    const auto& e0 = result.idempotents.e[0];
    rep.e0_coeffs = e0.coords();

    const auto xy = x * y;
    const auto step = xy.scaled(k.one() - k.generator());
    auto closed = alg.zero(), term = alg.one();
    for (std::int64_t j = 0; j < n; ++j) {
        closed = closed + term;
        term = term * step;
    }
    rep.e0_closed_form_ok = closed.scaled(k.from_int(n).inverse()) == e0;

    rep.dim_corner = subring_corner(alg, e0).dimension();
    rep.phi_bijective = result.iso.bijective.value_or(false);
    rep.iso = std::move(result.iso);
    return rep;
}

} // namespace commord::structure
