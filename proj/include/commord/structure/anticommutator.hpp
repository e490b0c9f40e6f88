#pragma once

#include "commord/errors.hpp"
#include "commord/rings/ring.hpp"

namespace commord::structure {

/// For u^2 = 1 with 2 a unit, e_0 = (1 + u)/2 and e_1 = (1 - u)/2. Checks, on
/// the given (x, y), both directions of
///   xy = e_0, yx = e_1  <=>  [x, y] = u, xy + yx = 1.
/// A direction is "applicable" when its premise holds for (x, y).
struct AnticommutatorReport {
    bool forward_applicable = false;  ///< x in e0 R e1, y in e1 R e0, xy = e_0, yx = e_1
    bool forward_holds = false;       ///< then xy + yx = 1 and xy - yx = u
    bool backward_applicable = false; ///< [x, y] = u and xy + yx = 1
    bool backward_holds = false;      ///< then xy = e_0 and yx = e_1

    bool witness() const noexcept { return forward_applicable || backward_applicable; }
    /// Every applicable implication held.
    bool ok() const noexcept {
        return (!forward_applicable || forward_holds) && (!backward_applicable || backward_holds);
    }
};

template <UnitalRing R>
AnticommutatorReport anticommutator_equiv_check(const R& ring, const typename R::Element& u,
                                                const typename R::Element& x, const typename R::Element& y) {
    const auto two = ring.from_int(2);
    if (!ring.is_unit(two)) throw HypothesisNotSatisfied("2 unit", ring.name());
    if (!(u * u == ring.one())) throw HypothesisNotSatisfied("u^2 = 1", ring.name());
    const auto half = ring.inverse(two);
    const auto e0 = half * (ring.one() + u);
    const auto e1 = half * (ring.one() - u);
    const auto xy = x * y;
    const auto yx = y * x;

    AnticommutatorReport r;
    r.forward_applicable = e0 * x * e1 == x && e1 * y * e0 == y && xy == e0 && yx == e1;
    if (r.forward_applicable) r.forward_holds = xy + yx == ring.one() && xy - yx == u;
    r.backward_applicable = xy - yx == u && xy + yx == ring.one();
    if (r.backward_applicable) r.backward_holds = xy == e0 && yx == e1;
    return r;
}

} // namespace commord::structure
