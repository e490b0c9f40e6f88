#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commord/errors.hpp"
#include "commord/rings/ring.hpp"

namespace commord {

/// Row-major matrix with entries in a unital ring R. Storage is 0-based; the
/// cyclic index helpers below take 1-based indices.
template <UnitalRing R>
class DenseMatrix {
public:
    using Ring = R;
    using Entry = typename R::Element;

    DenseMatrix(R ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_.zero()) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
    }

    DenseMatrix(R ring, std::size_t rows, std::size_t cols, std::vector<Entry> entries)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
        if (entries_.size() != rows * cols)
            throw DimensionMismatch("entry count " + std::to_string(entries_.size()) + " != " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
        for (const auto& e : entries_)
            if (!ring_.contains(e)) throw RingMismatch("matrix entry outside " + ring_.name());
    }

    static DenseMatrix identity(const R& ring, std::size_t n) {
        DenseMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
        return m;
    }

    static DenseMatrix diagonal(const R& ring, const std::vector<Entry>& diag) {
        DenseMatrix m(ring, diag.size(), diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
        return m;
    }

    /// c * Id_n.
    static DenseMatrix scalar(const R& ring, std::size_t n, const Entry& c) {
        DenseMatrix m(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
        return m;
    }

    const R& ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<Entry>& entries() const noexcept { return entries_; }

    Entry& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Entry& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_zero() const {
        const Entry z = ring_.zero();
        for (const auto& e : entries_)
            if (!(e == z)) return false;
        return true;
    }

    bool is_diagonal() const {
        const Entry z = ring_.zero();
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !((*this)(i, j) == z)) return false;
        return true;
    }

    DenseMatrix& operator+=(const DenseMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] + o.entries_[i];
        return *this;
    }
    DenseMatrix& operator-=(const DenseMatrix& o) {
        check_same_shape(o);
        for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] = entries_[i] - o.entries_[i];
        return *this;
    }

    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator-(DenseMatrix a) {
        for (auto& e : a.entries_) e = -e;
        return a;
    }

    /// Entry (i,j) of the product is sum_k lhs(i,k) * rhs(k,j), in that order.
    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (!(a.ring_ == b.ring_)) throw RingMismatch(a.ring_.name() + " vs " + b.ring_.name());
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("cannot multiply " + a.shape() + " by " + b.shape());
        DenseMatrix c(a.ring_, a.rows_, b.cols_);
        const Entry zero = a.ring_.zero();
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Entry& aik = a(i, k);
                if (aik == zero) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
            }
        return c;
    }

    /// c * M (left scalar multiplication).
    DenseMatrix left_scaled(const Entry& c) const {
        DenseMatrix r = *this;
        for (auto& e : r.entries_) e = c * e;
        return r;
    }
    /// M * c.
    DenseMatrix right_scaled(const Entry& c) const {
        DenseMatrix r = *this;
        for (auto& e : r.entries_) e = e * c;
        return r;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.entries_ == b.entries_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void check_same_shape(const DenseMatrix& o) const {
        if (!(ring_ == o.ring_)) throw RingMismatch(ring_.name() + " vs " + o.ring_.name());
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch(shape() + " vs " + o.shape());
    }

    R ring_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Entry> entries_;
};

template <UnitalRing R>
DenseMatrix<R> mat_mul(const DenseMatrix<R>& lhs, const DenseMatrix<R>& rhs) {
    return lhs * rhs;
}

template <UnitalRing R>
typename R::Element trace(const DenseMatrix<R>& m) {
    if (!m.is_square()) throw DimensionMismatch("trace of non-square " + m.shape());
    auto t = m.ring().zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
    return t;
}

/// Gauss-Jordan on [M | I] using only unit pivots. Row operations are left
/// multiplications, so this also works over noncommutative entry rings; the
/// candidate is accepted only if it is a two-sided inverse.
template <UnitalRing R>
std::optional<DenseMatrix<R>> try_inverse(const DenseMatrix<R>& m) {
    if (!m.is_square()) return std::nullopt;
    const R& ring = m.ring();
    const std::size_t n = m.rows();
    DenseMatrix<R> a = m;
    DenseMatrix<R> inv = DenseMatrix<R>::identity(ring, n);
    const auto zero = ring.zero();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && !ring.is_unit(a(piv, col))) ++piv;
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        const auto p = ring.inverse(a(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = p * a(col, j);
            inv(col, j) = p * inv(col, j);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const auto f = a(r, col);
            if (f == zero) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) = a(r, j) - f * a(col, j);
                inv(r, j) = inv(r, j) - f * inv(col, j);
            }
        }
    }
    const auto id = DenseMatrix<R>::identity(ring, n);
    if (!(inv * m == id) || !(m * inv == id)) return std::nullopt;
    return inv;
}

template <UnitalRing R>
DenseMatrix<R> inverse(const DenseMatrix<R>& m) {
    auto inv = try_inverse(m);
    if (!inv) throw NotAUnit("M_" + std::to_string(m.rows()) + "(" + m.ring().name() + ")");
    return std::move(*inv);
}

/// Exact k-th power; k = 0 gives the identity, negative k requires an inverse.
template <UnitalRing R>
DenseMatrix<R> mat_power(DenseMatrix<R> m, std::int64_t k) {
    if (!m.is_square()) throw DimensionMismatch("power of non-square " + m.shape());
    if (k < 0) {
        m = inverse(m);
        k = -k;
    }
    auto result = DenseMatrix<R>::identity(m.ring(), m.rows());
    while (k > 0) {
        if (k & 1) result = result * m;
        k >>= 1;
        if (k > 0) m = m * m;
    }
    return result;
}

/// The nonzero remainder of k modulo n, in {1, ..., n}.
inline std::size_t cyclic_index(std::int64_t k, std::size_t n) {
    const auto nn = static_cast<std::int64_t>(n);
    return static_cast<std::size_t>(((k - 1) % nn + nn) % nn + 1);
}

/// Matrix unit E_{ij} with 1-based indices.
template <UnitalRing R>
DenseMatrix<R> matrix_unit(const R& ring, std::size_t n, std::size_t i, std::size_t j) {
    DenseMatrix<R> m(ring, n, n);
    m(i - 1, j - 1) = ring.one();
    return m;
}

} // namespace commord
