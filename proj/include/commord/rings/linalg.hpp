#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "commord/errors.hpp"
#include "commord/rings/ring.hpp"

namespace commord {

/// Incremental row-echelon span over an exact field. `add` keeps a vector iff
/// it is independent of everything kept so far, which gives a greedy basis in
/// insertion order.
template <ExactField F>
class EchelonSpan {
public:
    using Vec = std::vector<typename F::Element>;

    EchelonSpan(F field, std::size_t dim) : field_(std::move(field)), dim_(dim) {}

    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t dimension() const noexcept { return dim_; }

    bool contains(Vec v) const { return is_zero(reduce(std::move(v))); }

    bool add(Vec v) {
        if (v.size() != dim_) throw DimensionMismatch("vector length does not match span dimension");
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < dim_ && v[p].is_zero()) ++p;
        if (p == dim_) return false;
        const auto inv = field_.inverse(v[p]);
        for (auto& x : v) x = x * inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

private:
    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& c = v[pivots_[r]];
            if (c.is_zero()) continue;
            const auto f = c;
            for (std::size_t j = 0; j < dim_; ++j)
                if (!rows_[r][j].is_zero()) v[j] = v[j] - f * rows_[r][j];
        }
        return v;
    }

    static bool is_zero(const Vec& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }

    F field_;
    std::size_t dim_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
};

template <ExactField F>
std::size_t rank(const F& field, const std::vector<std::vector<typename F::Element>>& vectors,
                 std::size_t dim) {
    EchelonSpan<F> span(field, dim);
    for (const auto& v : vectors) span.add(v);
    return span.rank();
}

/// Some solution x of A x = b (A given by rows), or nullopt if inconsistent.
template <ExactField F>
std::optional<std::vector<typename F::Element>> solve_linear(
    const F& field, std::vector<std::vector<typename F::Element>> a,
    std::vector<typename F::Element> b) {
    using E = typename F::Element;
    const std::size_t m = a.size();
    if (b.size() != m) throw DimensionMismatch("right-hand side length mismatch");
    const std::size_t n = m == 0 ? 0 : a.front().size();
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = row;
        while (piv < m && a[piv][col].is_zero()) ++piv;
        if (piv == m) continue;
        std::swap(a[piv], a[row]);
        std::swap(b[piv], b[row]);
        const E inv = field.inverse(a[row][col]);
        for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const E f = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] = a[r][j] - f * a[row][j];
            b[r] = b[r] - f * b[row];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < m; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    std::vector<E> x(n, field.zero());
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = b[r];
    return x;
}

} // namespace commord
