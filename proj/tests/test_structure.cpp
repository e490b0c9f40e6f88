#include <doctest.h>

#include <random>

#include "commord/errors.hpp"
#include "commord/exact/scalar_rings.hpp"
#include "commord/rings/matrix_ring.hpp"
#include "commord/rings/quantum_plane.hpp"
#include "commord/structure/anticommutator.hpp"
#include "commord/structure/cyclic.hpp"
#include "commord/structure/idempotents.hpp"
#include "commord/structure/matrix_units.hpp"
#include "commord/structure/quantum_plane_demo.hpp"
#include "commord/structure/structure_theorem.hpp"
#include "commord/witness/theorem32.hpp"

using namespace commord;
using namespace commord::structure;

namespace {

using KRing = MatrixRing<CyclotomicField>;
using KMat = DenseMatrix<CyclotomicField>;
using QRing = MatrixRing<RationalField>;
using QMat = DenseMatrix<RationalField>;

struct MatrixModel {
    KRing ring;
    KMat u;
    KMat omega;
    KMat v;
};

// u = diag(1, w, ..., w^{n-1}) in M_n(Q(zeta_n)); v is whichever of P, P^{-1}
// satisfies v u v^{-1} = w^{-1} u.
MatrixModel diagonal_model(std::int64_t n) {
    const CyclotomicField k(n);
    const auto nn = static_cast<std::size_t>(n);
    KRing ring(k, nn);
    std::vector<CycloScalar> d;
    for (std::int64_t i = 0; i < n; ++i) d.push_back(k.root(i));
    const auto u = KMat::diagonal(k, d);
    const auto omega = ring.scalar(k.generator());
    const auto target = ring.inverse(omega) * u;
    for (std::int64_t e : {1, -1}) {
        const auto p = witness::cyclic_shift(k, nn, e);
        if (p * u * inverse(p) == target) return {ring, u, omega, p};
    }
    throw std::logic_error("no permutation orientation conjugates u to w^{-1} u");
}

// u = [A, B] = P from the central unit construction, v = diag(w^{-k}).
MatrixModel theorem32_model(std::int64_t n) {
    const CyclotomicField k(n);
    const auto nn = static_cast<std::size_t>(n);
    KRing ring(k, nn);
    const auto dec = witness::corollary_units(nn, k, n == 2 ? witness::CorollaryStrategy::n2
                                                            : witness::CorollaryStrategy::inverse_n_minus_1);
    const auto w = witness::build_theorem32(nn, dec);
    std::vector<CycloScalar> d;
    for (std::int64_t i = 0; i < n; ++i) d.push_back(k.root(-i));
    return {ring, w.commutator, ring.scalar(k.generator()), KMat::diagonal(k, d)};
}

template <class R>
std::string hypothesis_of(const R& ring, const typename R::Element& u, const typename R::Element& omega,
                          std::int64_t n) {
    try {
        (void)make_idempotents(ring, u, omega, n);
    } catch (const HypothesisNotSatisfied& e) {
        return e.hypothesis();
    }
    return "";
}

} // namespace

TEST_CASE("make_idempotents examples") {
    for (std::int64_t n = 2; n <= 5; ++n) {
        const CyclotomicField k(n);
        const auto sys = make_idempotents(k, k.one(), k.generator(), n);
        CHECK(sys.e[0] == k.one());
        for (std::int64_t j = 1; j < n; ++j) CHECK(sys.e[static_cast<std::size_t>(j)].is_zero());
    }
    const RationalField q;
    const QRing m2(q, 2);
    const auto u = QMat(q, 2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)});
    const auto sys = make_idempotents(m2, u, m2.from_int(-1), 2);
    const auto half = m2.scalar(Rational(1, 2));
    CHECK(sys.e[0] == half * (m2.one() + u));
    CHECK(sys.e[1] == half * (m2.one() - u));

    const auto model = theorem32_model(3);
    const auto sys3 = make_idempotents(model.ring, model.u, model.omega, 3);
    CHECK(first_idempotent_failure(sys3).empty());
    CHECK(sys3.e[0] + sys3.e[1] + sys3.e[2] == model.ring.one());
    CHECK(sys3.idempotent(3) == sys3.e[0]);
    CHECK(sys3.idempotent(-1) == sys3.e[2]);
}

TEST_CASE("idempotent identities on both matrix models") {
    for (std::int64_t n = 2; n <= 6; ++n)
        for (const auto& model : {diagonal_model(n), theorem32_model(n)}) {
            INFO("n = " << n);
            const auto sys = make_idempotents(model.ring, model.u, model.omega, n);
            CHECK(first_idempotent_failure(sys).empty());
            for (std::int64_t k = 0; k < n; ++k)
                CHECK(lagrange_projector(model.ring, model.omega, n, k, model.u) == sys.idempotent(k));
        }
}

TEST_CASE("make_idempotents hypothesis failures are named") {
    const ZmodRing z8(8);
    CHECK(hypothesis_of(z8, z8.one(), z8.from_int(3), 2) == "omega^i-omega^j unit");
    CHECK(hypothesis_of(z8, z8.one(), z8.from_int(2), 2) == "omega unit");
    CHECK(hypothesis_of(z8, z8.one(), z8.from_int(5), 3) == "omega^n = 1");
    const RationalField q;
    CHECK(hypothesis_of(q, Rational(2), Rational(-1), 2) == "u^n = 1");
    const QRing m2(q, 2);
    CHECK(hypothesis_of(m2, m2.one(), QMat::diagonal(q, {Rational(1), Rational(-1)}), 2) == "omega central");
    CHECK_THROWS_AS(make_idempotents(q, Rational(1), Rational(1), 1), DomainError);
    CHECK_THROWS_AS(make_idempotents(ZmodRing(5), ZmodScalar(7, 1), ZmodScalar(5, 4), 2), RingMismatch);
    try {
        (void)make_idempotents(z8, z8.one(), z8.from_int(3), 2);
        FAIL("expected HypothesisNotSatisfied");
    } catch (const HypothesisNotSatisfied& e) {
        CHECK(std::string(e.what()).find("omega^i-omega^j") != std::string::npos);
    }
}

TEST_CASE("lagrange_projector examples") {
    for (std::int64_t n = 2; n <= 6; ++n) {
        const CyclotomicField k(n);
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = 0; j < n; ++j)
                CHECK(lagrange_projector(k, k.generator(), n, i, k.root(j)) == (i == j ? k.one() : k.zero()));
    }
    const RationalField q;
    const QRing m2(q, 2);
    const auto u = QMat::diagonal(q, {Rational(1), Rational(-1)});
    CHECK(lagrange_projector(m2, m2.from_int(-1), 2, 0, u) == m2.scalar(Rational(1, 2)) * (m2.one() + u));
    CHECK_THROWS_AS(lagrange_projector(ZmodRing(8), ZmodScalar(8, 3), 2, 0, ZmodScalar(8, 1)), NotAUnit);
}

TEST_CASE("conjugator_to_cyclic on the permutation model") {
    for (std::int64_t n = 2; n <= 5; ++n) {
        const auto model = diagonal_model(n);
        const auto sys = make_idempotents(model.ring, model.u, model.omega, n);
        const auto data = conjugator_to_cyclic(sys, model.v);
        CHECK(first_cyclic_failure(sys, data).empty());
        for (std::int64_t k = 0; k < n; ++k) {
            // single-entry support
            std::size_t nonzero = 0;
            for (const auto& c : data.x[static_cast<std::size_t>(k)].entries()) nonzero += !c.is_zero();
            CHECK(nonzero == 1);
            nonzero = 0;
            for (const auto& c : data.y[static_cast<std::size_t>(k)].entries()) nonzero += !c.is_zero();
            CHECK(nonzero == 1);
        }
        CHECK_THROWS_AS(conjugator_to_cyclic(sys, model.ring.one()), NotACyclicConjugator);
        CHECK_THROWS_AS(conjugator_to_cyclic(sys, model.ring.zero()), NotACyclicConjugator);
    }
}

TEST_CASE("n = 2 matrix example for cyclic data") {
    const RationalField q;
    const QRing m2(q, 2);
    const auto u = QMat::diagonal(q, {Rational(1), Rational(-1)});
    const auto v = QMat(q, 2, 2, {Rational(0), Rational(2), Rational(1), Rational(0)});
    CHECK(v * u * inverse(v) == -u);
    const auto sys = make_idempotents(m2, u, m2.from_int(-1), 2);
    const auto data = conjugator_to_cyclic(sys, v);
    CHECK(data.x[0] == sys.e[0] * inverse(v));
    const auto conj = cyclic_to_conjugator(sys, data);
    CHECK(conj.v * conj.v_inverse == m2.one());
    CHECK(conj.v * u * conj.v_inverse == -u);
}

TEST_CASE("cyclic_to_conjugator rejects invalid data") {
    const auto model = diagonal_model(3);
    const auto sys = make_idempotents(model.ring, model.u, model.omega, 3);
    auto data = conjugator_to_cyclic(sys, model.v);
    data.x[1] = data.x[1] + data.x[1];
    CHECK_THROWS_AS(cyclic_to_conjugator(sys, data), DomainError);
    data.x.pop_back();
    CHECK(first_cyclic_failure(sys, data) == "n elements x_k and y_k");
}

TEST_CASE("conjugator and cyclic data round trips on M_n(Q(zeta_n))") {
    for (std::int64_t n = 2; n <= 6; ++n)
        for (const auto& model : {diagonal_model(n), theorem32_model(n)}) {
            INFO("n = " << n);
            const auto sys = make_idempotents(model.ring, model.u, model.omega, n);
            const auto data = conjugator_to_cyclic(sys, model.v);
            const auto conj = cyclic_to_conjugator(sys, data);
            CHECK(conj.v * model.u * conj.v_inverse == model.ring.inverse(model.omega) * model.u);
            for (std::int64_t k = 0; k < n; ++k)
                CHECK(conj.v * sys.idempotent(k) * conj.v_inverse == sys.idempotent(k + 1));
            const auto again = conjugator_to_cyclic(sys, conj.v);
            CHECK(first_cyclic_failure(sys, again).empty());
        }
}

TEST_CASE("matrix units") {
    const RationalField q;
    const QRing m2(q, 2);
    const auto u = QMat::diagonal(q, {Rational(1), Rational(-1)});
    const auto v = QMat(q, 2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)});
    const auto sys2 = make_idempotents(m2, u, m2.from_int(-1), 2);
    const auto mu2 = build_matrix_units(sys2, conjugator_to_cyclic(sys2, v));
    CHECK(mu2.E[0][0] + mu2.E[1][1] == m2.one());
    CHECK(mu2.X[0] == sys2.e[0]);
    CHECK(mu2.Y[0] == sys2.e[0]);

    const auto model = diagonal_model(3);
    const auto sys = make_idempotents(model.ring, model.u, model.omega, 3);
    const auto mu = build_matrix_units(sys, conjugator_to_cyclic(sys, model.v));
    std::size_t checks = 0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l) {
                    CHECK(mu.E[i][j] * mu.E[k][l] == (j == k ? mu.E[i][l] : model.ring.zero()));
                    ++checks;
                }
    CHECK(checks == 81);
    CHECK(first_matrix_unit_failure(mu, sys).empty());
    auto broken = mu;
    broken.E[0][1] = model.ring.zero();
    CHECK(first_matrix_unit_failure(broken, sys) == "E_01 E_10 = E_00");
}

TEST_CASE("phi and phi_inverse") {
    const auto model = diagonal_model(3);
    const auto sys = make_idempotents(model.ring, model.u, model.omega, 3);
    const auto mu = build_matrix_units(sys, conjugator_to_cyclic(sys, model.v));
    CHECK(phi(mu, corner_identity(mu)) == model.ring.one());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            DenseMatrix<KRing> m(model.ring, 3, 3);
            m(i, j) = mu.e0;
            CHECK(phi(mu, m) == mu.E[i][j]);
        }
    CHECK(phi_inverse(mu, model.ring.one()) == corner_identity(mu));
    // Y_i u X_j = w^i delta_ij e_0
    const auto pu = phi_inverse(mu, model.u);
    const CyclotomicField k(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(pu(i, j) == (i == j ? model.ring.scalar(k.root(static_cast<std::int64_t>(i))) * mu.e0
                                      : model.ring.zero()));
    DenseMatrix<KRing> outside(model.ring, 3, 3);
    outside(0, 0) = model.ring.one();
    CHECK_THROWS_AS(phi(mu, outside), DomainError);
    CHECK_THROWS_AS(phi(mu, DenseMatrix<KRing>(model.ring, 2, 2)), DimensionMismatch);
}

TEST_CASE("structure_theorem on M_2(Q)") {
    const RationalField q;
    const QRing m2(q, 2);
    const auto a = matrix_unit(q, 2, 1, 2), b = matrix_unit(q, 2, 2, 1);
    const auto v = QMat(q, 2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)});
    const auto res = structure_theorem(m2, a, b, m2.from_int(-1), v, 2);
    CHECK(res.iso.ok());
    CHECK(res.iso.bijective == true);
    CHECK(res.iso.dim_corner == 1u);
    CHECK(res.iso.dim_ring == 4u);
    try {
        (void)structure_theorem(m2, a, b, m2.from_int(-1), m2.one(), 2);
        FAIL("expected NotACyclicConjugator");
    } catch (const NotACyclicConjugator& e) {
        CHECK(std::string(e.what()).find("[conjugator_to_cyclic]") != std::string::npos);
    }
    try {
        (void)structure_theorem(m2, a, b, m2.from_int(-1), v, 3);
        FAIL("expected HypothesisNotSatisfied");
    } catch (const HypothesisNotSatisfied& e) {
        CHECK(e.hypothesis() == "omega^n = 1");
        CHECK(std::string(e.what()).find("[make_idempotents]") != std::string::npos);
    }
}

TEST_CASE("structure_theorem over a ring without an exact basis reports sampled bijectivity") {
    const ZmodRing z5(5);
    const MatrixRing<ZmodRing> m2(z5, 2);
    const auto a = matrix_unit(z5, 2, 1, 2), b = matrix_unit(z5, 2, 2, 1);
    const DenseMatrix<ZmodRing> v(z5, 2, 2, {z5.zero(), z5.one(), z5.one(), z5.zero()});
    const auto res = structure_theorem(m2, a, b, m2.from_int(-1), v, 2, 25, 3);
    CHECK(res.iso.ok());
    CHECK_FALSE(res.iso.bijective.has_value());
    CHECK(res.iso.bijectivity_note == "injectivity/surjectivity verified on samples only");
}

TEST_CASE("phi is a ring isomorphism on the matrix models") {
    for (std::int64_t n = 2; n <= 4; ++n)
        for (const auto& model : {diagonal_model(n), theorem32_model(n)}) {
            const auto sys = make_idempotents(model.ring, model.u, model.omega, n);
            const auto mu = build_matrix_units(sys, conjugator_to_cyclic(sys, model.v));
            const auto iso = check_isomorphism(mu, 25, static_cast<std::uint64_t>(n));
            CHECK(iso.ok());
            CHECK(iso.bijective == true);
            CHECK(iso.dim_corner == 1u);
            CHECK(iso.image_rank == static_cast<std::size_t>(n * n));
        }
}

TEST_CASE("anticommutator_equiv_check") {
    const RationalField q;
    const QRing m2(q, 2);
    const auto u = QMat::diagonal(q, {Rational(1), Rational(-1)});
    const auto v = QMat(q, 2, 2, {Rational(0), Rational(1), Rational(1), Rational(0)});
    const auto sys = make_idempotents(m2, u, m2.from_int(-1), 2);
    const auto mu = build_matrix_units(sys, conjugator_to_cyclic(sys, v));
    const auto x = mu.E[0][1], y = mu.E[1][0];
    const auto rep = anticommutator_equiv_check(m2, u, x, y);
    CHECK(rep.forward_applicable);
    CHECK(rep.forward_holds);
    CHECK(rep.backward_applicable);
    CHECK(rep.backward_holds);
    CHECK(rep.ok());

    const auto none = anticommutator_equiv_check(m2, m2.one(), m2.one(), m2.one());
    CHECK_FALSE(none.witness());
    CHECK(none.ok());

    const ZmodRing z2(2);
    try {
        (void)anticommutator_equiv_check(z2, z2.one(), z2.one(), z2.one());
        FAIL("expected HypothesisNotSatisfied");
    } catch (const HypothesisNotSatisfied& e) {
        CHECK(e.hypothesis() == "2 unit");
    }
    try {
        (void)anticommutator_equiv_check(m2, m2.from_int(2), x, y);
        FAIL("expected HypothesisNotSatisfied");
    } catch (const HypothesisNotSatisfied& e) {
        CHECK(e.hypothesis() == "u^2 = 1");
    }
}

TEST_CASE("quantum plane demo") {
    const auto r2 = quantum_plane_demo(2);
    CHECK(r2.ok());
    CHECK(r2.dim_corner == 1);
    // e_0 = (1 + (1 - w) xy) / 2 with w = -1: coefficient 1/2 on x^0y^0 and 1 on x^1y^1
    const CyclotomicField k2(2);
    std::vector<CycloScalar> expect(4, k2.zero());
    expect[quantum_monomial_index(2, 0, 0)] = k2.from_rational(Rational(1, 2));
    expect[quantum_monomial_index(2, 1, 1)] = k2.one();
    CHECK(r2.e0_coeffs == expect);
    CHECK(r2.a == k2.from_rational(Rational(-1, 4)));

    for (std::int64_t n : {3, 4}) {
        const auto r = quantum_plane_demo(n);
        CHECK(r.ok());
        CHECK(r.dim_corner == 1);
        CHECK(r.phi_bijective);
        CHECK(r.iso.image_rank == static_cast<std::size_t>(n * n));
        CHECK(r.iso.samples == 25);
    }
    CHECK_THROWS_AS(quantum_plane_demo(1), DomainError);
    CHECK_THROWS_AS(quantum_plane_demo(7), DomainError);
}

TEST_CASE("quantum plane matrix units for n = 3") {
    const std::int64_t n = 3;
    const CyclotomicField k(n);
    const auto alg = quantum_plane(n, quantum_plane_demo_a(n), k.one());
    const auto x = quantum_x(alg, n), y = quantum_y(alg, n);
    const auto res = structure_theorem(alg, x, y, alg.scalar(k.generator()), x, n);
    CHECK(first_matrix_unit_failure(res.units, res.idempotents).empty());
    CHECK(res.units.E.size() == 3);
    // round trip B on random elements
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        const auto r = alg.random(rng);
        CHECK(phi(res.units, phi_inverse(res.units, r)) == r);
    }
}
