#pragma once

#include <doctest.h>

#include "commord/rings/ring.hpp"

namespace test_support {

template <class R>
void check_ring_axioms(const R& ring, const typename R::Element& a, const typename R::Element& b,
                       const typename R::Element& c, bool commutative) {
    const auto zero = ring.zero(), one = ring.one();
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + zero == a);
    CHECK(one * a == a);
    CHECK(a * one == a);
    CHECK(a - a == zero);
    CHECK(a + (-a) == zero);
    CHECK(a + b == b + a);
    if (commutative) CHECK(a * b == b * a);
}

} // namespace test_support
