#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "commord/errors.hpp"
#include "commord/exact/scalar_rings.hpp"
#include "commord/rings/linalg.hpp"
#include "commord/rings/ring.hpp"

namespace commord {

namespace detail {

/// Structure constants of a d-dimensional algebra: b_i * b_j = sum_m c_{ij}^m b_m,
/// stored sparsely per (i, j).
template <ExactField F>
struct AlgebraTable {
    using E = typename F::Element;
    explicit AlgebraTable(F f) : field(std::move(f)) {}

    F field;
    std::size_t dim = 0;
    std::string label;
    std::vector<std::string> basis_labels;
    std::vector<std::vector<std::pair<std::size_t, E>>> products; // index i * dim + j
    std::vector<E> one;

    bool same_as(const AlgebraTable& o) const {
        if (this == &o) return true;
        if (!(field == o.field) || dim != o.dim || !(one == o.one)) return false;
        return products == o.products;
    }

    std::vector<E> multiply(const std::vector<E>& a, const std::vector<E>& b) const {
        std::vector<E> r(dim, field.zero());
        for (std::size_t i = 0; i < dim; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                if (b[j].is_zero()) continue;
                const E ab = a[i] * b[j];
                for (const auto& [m, c] : products[i * dim + j]) r[m] += ab * c;
            }
        }
        return r;
    }
};

} // namespace detail

template <ExactField F>
class FiniteAlgebra;

/// Coordinate vector of an element of a FiniteAlgebra over F.
template <ExactField F>
class AlgebraElement {
public:
    using E = typename F::Element;
    using Table = detail::AlgebraTable<F>;

    AlgebraElement(std::shared_ptr<const Table> table, std::vector<E> coords)
        : table_(std::move(table)), coords_(std::move(coords)) {
        if (coords_.size() != table_->dim)
            throw DimensionMismatch("algebra element has " + std::to_string(coords_.size()) +
                                    " coordinates, algebra dimension is " + std::to_string(table_->dim));
    }

    const std::vector<E>& coords() const noexcept { return coords_; }
    const std::shared_ptr<const Table>& table() const noexcept { return table_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (!c.is_zero()) return false;
        return true;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check(o);
        for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator-(AlgebraElement a) {
        for (auto& c : a.coords_) c = -c;
        return a;
    }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        return AlgebraElement(a.table_, a.table_->multiply(a.coords_, b.coords_));
    }
    /// Scalar multiple by a base-field element.
    AlgebraElement scaled(const E& c) const {
        AlgebraElement r = *this;
        for (auto& x : r.coords_) x = x * c;
        return r;
    }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.coords_ == b.coords_ && a.table_->same_as(*b.table_);
    }

private:
    void check(const AlgebraElement& o) const {
        if (!table_->same_as(*o.table_))
            throw RingMismatch("elements of different algebras (" + table_->label + ", " +
                               o.table_->label + ")");
    }

    std::shared_ptr<const Table> table_;
    std::vector<E> coords_;
};

/// Finite-dimensional associative unital algebra over an exact field, given by
/// structure constants. Copies share the same immutable table.
template <ExactField F>
class FiniteAlgebra {
public:
    using Element = AlgebraElement<F>;
    using E = typename F::Element;
    using Table = detail::AlgebraTable<F>;
    static constexpr bool is_field = false;

    /// `table[i * dim + j]` holds the coordinates of b_i * b_j. Associativity on
    /// all basis triples and the identity laws are verified here; a failure
    /// throws DomainError.
    FiniteAlgebra(F field, std::vector<std::string> basis_labels,
                  const std::vector<std::vector<E>>& table, std::vector<E> one,
                  std::string label = "algebra") {
        auto t = std::make_shared<Table>(std::move(field));
        t->dim = basis_labels.size();
        t->label = std::move(label);
        t->basis_labels = std::move(basis_labels);
        const std::size_t d = t->dim;
        if (table.size() != d * d) throw DimensionMismatch("structure table must have dim^2 entries");
        if (one.size() != d) throw DimensionMismatch("identity coordinates must have length dim");
        t->products.resize(d * d);
        for (std::size_t ij = 0; ij < d * d; ++ij) {
            if (table[ij].size() != d) throw DimensionMismatch("structure constant vector length != dim");
            for (std::size_t m = 0; m < d; ++m)
                if (!table[ij][m].is_zero()) t->products[ij].emplace_back(m, table[ij][m]);
        }
        t->one = std::move(one);
        table_ = std::move(t);
        verify_identity();
        verify_associativity();
    }

    std::size_t dimension() const noexcept { return table_->dim; }
    const F& base_field() const noexcept { return table_->field; }
    const std::string& label() const noexcept { return table_->label; }
    const std::vector<std::string>& basis_labels() const noexcept { return table_->basis_labels; }

    Element element(std::vector<E> coords) const { return Element(table_, std::move(coords)); }
    Element basis(std::size_t i) const {
        std::vector<E> c(dimension(), base_field().zero());
        c.at(i) = base_field().one();
        return element(std::move(c));
    }
    std::vector<Element> basis() const {
        std::vector<Element> b;
        for (std::size_t i = 0; i < dimension(); ++i) b.push_back(basis(i));
        return b;
    }
    std::vector<E> coordinates(const Element& x) const { return x.coords(); }
    /// c * 1.
    Element scalar(const E& c) const { return one().scaled(c); }

    Element zero() const { return element(std::vector<E>(dimension(), base_field().zero())); }
    Element one() const { return element(table_->one); }
    Element from_int(std::int64_t k) const { return scalar(base_field().from_int(k)); }

    /// Two-sided inverse via the left-multiplication operator, or nullopt.
    std::optional<Element> try_inverse(const Element& v) const {
        const std::size_t d = dimension();
        if (d == 0) return zero();
        std::vector<std::vector<E>> op(d, std::vector<E>(d, base_field().zero()));
        for (std::size_t j = 0; j < d; ++j) {
            const auto col = (v * basis(j)).coords();
            for (std::size_t i = 0; i < d; ++i) op[i][j] = col[i];
        }
        auto w = solve_linear(base_field(), std::move(op), table_->one);
        if (!w) return std::nullopt;
        Element inv = element(std::move(*w));
        if (!(inv * v == one()) || !(v * inv == one())) return std::nullopt;
        return inv;
    }

    bool is_unit(const Element& x) const { return try_inverse(x).has_value(); }
    Element inverse(const Element& x) const {
        auto inv = try_inverse(x);
        if (!inv) throw NotAUnit(name());
        return std::move(*inv);
    }
    /// Complete check: x commutes with every basis element.
    bool is_central(const Element& x) const {
        for (std::size_t i = 0; i < dimension(); ++i) {
            const Element b = basis(i);
            if (!(x * b == b * x)) return false;
        }
        return true;
    }
    bool contains(const Element& x) const { return x.table()->same_as(*table_); }
    std::int64_t characteristic() const {
        if (dimension() == 0) return 1;
        return base_field().characteristic();
    }
    Element random(std::mt19937_64& rng) const {
        std::vector<E> c;
        for (std::size_t i = 0; i < dimension(); ++i) c.push_back(base_field().from_int(sample_small(rng)));
        return element(std::move(c));
    }
    std::string name() const { return table_->label; }
    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b) {
        return a.table_->same_as(*b.table_);
    }

private:
    void verify_identity() const {
        const Element e = one();
        for (std::size_t i = 0; i < dimension(); ++i) {
            const Element b = basis(i);
            if (!(e * b == b) || !(b * e == b))
                throw DomainError("identity coordinates fail 1*b = b*1 = b for basis element " +
                                  table_->basis_labels[i]);
        }
    }

    void verify_associativity() const {
        const std::size_t d = dimension();
        const auto& prod = table_->products;
        const F& f = base_field();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    std::vector<E> left(d, f.zero()), right(d, f.zero());
                    for (const auto& [m, c] : prod[i * d + j])
                        for (const auto& [q, c2] : prod[m * d + k]) left[q] = left[q] + c * c2;
                    for (const auto& [m, c] : prod[j * d + k])
                        for (const auto& [q, c2] : prod[i * d + m]) right[q] = right[q] + c * c2;
                    if (!(left == right))
                        throw DomainError("structure constants are not associative on (" +
                                          table_->basis_labels[i] + ", " + table_->basis_labels[j] +
                                          ", " + table_->basis_labels[k] + ")");
                }
    }

    std::shared_ptr<const Table> table_;
};

template <ExactField F>
typename FiniteAlgebra<F>::Element algebra_inverse(const FiniteAlgebra<F>& alg,
                                                   const typename FiniteAlgebra<F>::Element& v) {
    return alg.inverse(v);
}

/// Greedy basis of e * alg * e, taken from {e b_i e} in basis order.
template <ExactField F>
std::vector<typename FiniteAlgebra<F>::Element> corner_basis(
    const FiniteAlgebra<F>& alg, const typename FiniteAlgebra<F>::Element& e) {
    if (!(e * e == e)) throw DomainError("corner requires an idempotent");
    EchelonSpan<F> span(alg.base_field(), alg.dimension());
    std::vector<typename FiniteAlgebra<F>::Element> out;
    for (std::size_t i = 0; i < alg.dimension(); ++i) {
        auto c = e * alg.basis(i) * e;
        if (span.add(c.coords())) out.push_back(std::move(c));
    }
    return out;
}

/// e * alg * e as an algebra in its own right, with identity e.
template <ExactField F>
FiniteAlgebra<F> subring_corner(const FiniteAlgebra<F>& alg,
                                const typename FiniteAlgebra<F>::Element& e) {
    using E = typename F::Element;
    const auto basis = corner_basis(alg, e);
    const std::size_t s = basis.size();
    const F& field = alg.base_field();
    auto coords_in_corner = [&](const typename FiniteAlgebra<F>::Element& x) {
        std::vector<std::vector<E>> a(alg.dimension(), std::vector<E>(s, field.zero()));
        for (std::size_t c = 0; c < s; ++c)
            for (std::size_t r = 0; r < alg.dimension(); ++r) a[r][c] = basis[c].coords()[r];
        auto sol = solve_linear(field, std::move(a), x.coords());
        if (!sol) throw InvariantViolation("corner is not closed under multiplication");
        return std::move(*sol);
    };
    std::vector<std::vector<E>> table;
    table.reserve(s * s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) table.push_back(coords_in_corner(basis[i] * basis[j]));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < s; ++i) labels.push_back("c" + std::to_string(i));
    std::vector<E> one = s == 0 ? std::vector<E>{} : coords_in_corner(e);
    return FiniteAlgebra<F>(field, std::move(labels), table, std::move(one), "corner of " + alg.label());
}

} // namespace commord
