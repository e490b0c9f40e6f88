#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "commord/rings/dense_matrix.hpp"

namespace commord {

/// M_n(S) as a ring in its own right, so matrix rings nest.
template <UnitalRing R>
class MatrixRing {
public:
    using Element = DenseMatrix<R>;
    using Inner = R;
    static constexpr bool is_field = false;

    MatrixRing(R inner, std::size_t n) : inner_(std::move(inner)), n_(n) {
        if (n == 0) throw DimensionMismatch("matrix ring of size 0");
    }

    const R& inner() const noexcept { return inner_; }
    std::size_t size() const noexcept { return n_; }

    Element zero() const { return Element(inner_, n_, n_); }
    Element one() const { return Element::identity(inner_, n_); }
    Element from_int(std::int64_t k) const { return Element::scalar(inner_, n_, inner_.from_int(k)); }
    Element scalar(const typename R::Element& c) const { return Element::scalar(inner_, n_, c); }
    bool is_unit(const Element& x) const { return try_inverse(x).has_value(); }
    Element inverse(const Element& x) const { return commord::inverse(x); }

    /// Z(M_n(S)) = Z(S) * Id: scalar matrices with a central entry.
    bool is_central(const Element& x) const {
        if (!x.is_diagonal()) return false;
        for (std::size_t i = 1; i < n_; ++i)
            if (!(x(i, i) == x(0, 0))) return false;
        return inner_.is_central(x(0, 0));
    }
    bool contains(const Element& x) const {
        return x.ring() == inner_ && x.rows() == n_ && x.cols() == n_;
    }
    std::int64_t characteristic() const { return inner_.characteristic(); }
    Element random(std::mt19937_64& rng) const {
        Element m(inner_, n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) m(i, j) = inner_.random(rng);
        return m;
    }
    // Finite-dimensional view over a field: coordinates are the entries, row-major.
    std::size_t dimension() const requires ExactField<R> { return n_ * n_; }
    const R& base_field() const requires ExactField<R> { return inner_; }
    std::vector<Element> basis() const requires ExactField<R> {
        std::vector<Element> out;
        for (std::size_t i = 1; i <= n_; ++i)
            for (std::size_t j = 1; j <= n_; ++j) out.push_back(matrix_unit(inner_, n_, i, j));
        return out;
    }
    std::vector<typename R::Element> coordinates(const Element& x) const requires ExactField<R> {
        return x.entries();
    }

    std::string name() const { return "M_" + std::to_string(n_) + "(" + inner_.name() + ")"; }
    friend bool operator==(const MatrixRing&, const MatrixRing&) = default;

private:
    R inner_;
    std::size_t n_;
};

} // namespace commord
