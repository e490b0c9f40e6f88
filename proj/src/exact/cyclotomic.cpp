#include "commord/exact/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "commord/errors.hpp"

namespace commord {

namespace {

using IntPoly = std::vector<std::int64_t>;

void check_order(std::int64_t m) {
    if (m < 1) throw DomainError("cyclotomic order must be >= 1, got " + std::to_string(m));
}

/// Exact quotient num / den for monic den; throws InvariantViolation on a remainder.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dd = den.size() - 1;
    if (num.size() <= dd) throw InvariantViolation("cyclotomic division: degree too small");
    IntPoly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const std::int64_t c = num[i];
        q[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw InvariantViolation("cyclotomic division left a remainder");
    return q;
}

/// In-place reduction of the integer polynomial `p` modulo the monic `phi`.
void reduce(std::vector<mpz_class>& p, const IntPoly& phi) {
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = p.size(); i-- > deg;) {
        if (sgn(p[i]) == 0) continue;
        const mpz_class c = p[i];
        for (std::size_t j = 0; j < deg; ++j) {
            mpz_class& t = p[i - deg + j];
            if (phi[j] == 0) continue;
            if (phi[j] == 1)
                t -= c;
            else if (phi[j] == -1)
                t += c;
            else
                t -= c * static_cast<long>(phi[j]);
        }
        p[i] = 0;
    }
    p.resize(deg);
}

/// Solves a square rational system by Gauss-Jordan; returns false if singular.
bool solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
                    std::vector<Rational>& x) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        const Rational inv = a[col][col].inverse();
        for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    x = std::move(b);
    return true;
}

} // namespace

std::int64_t euler_phi(std::int64_t m) {
    check_order(m);
    std::int64_t result = m;
    for (std::int64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t m) {
    check_order(m);
    static std::mutex mutex;
    static std::map<std::int64_t, IntPoly> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    IntPoly poly(static_cast<std::size_t>(m) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(m)] = 1;
    for (std::int64_t d = 1; d < m; ++d)
        if (m % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
    std::lock_guard lock(mutex);
    return cache.emplace(m, std::move(poly)).first->second;
}

CycloScalar::CycloScalar(std::int64_t order) : order_(order) {
    num_.assign(static_cast<std::size_t>(euler_phi(order)), mpz_class(0));
}

CycloScalar::CycloScalar(std::int64_t order, const Rational& constant) : CycloScalar(order) {
    num_[0] = constant.numerator();
    den_ = constant.denominator();
}

CycloScalar::CycloScalar(std::int64_t order, std::vector<Rational> coeffs) : order_(order) {
    check_order(order);
    const auto& phi = cyclotomic_polynomial(order);
    mpz_class den = 1;
    for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.denominator().get_mpz_t());
    num_.reserve(std::max(coeffs.size(), phi.size() - 1));
    for (const auto& c : coeffs) num_.push_back(c.numerator() * (den / c.denominator()));
    if (num_.size() < phi.size() - 1) num_.resize(phi.size() - 1, mpz_class(0));
    den_ = std::move(den);
    reduce(num_, phi);
    normalize();
}

void CycloScalar::normalize() {
    mpz_class g = den_;
    for (const auto& c : num_) {
        if (g == 1) break;
        if (sgn(c) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    bool all_zero = true;
    for (const auto& c : num_)
        if (sgn(c) != 0) all_zero = false;
    if (all_zero) {
        den_ = 1;
        return;
    }
    if (g != 1) {
        for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

std::vector<Rational> CycloScalar::coeffs() const {
    std::vector<Rational> out;
    out.reserve(num_.size());
    for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
    return out;
}

Rational CycloScalar::coeff(std::size_t i) const { return Rational(mpq_class(num_.at(i), den_)); }

CycloScalar CycloScalar::root(std::int64_t order, std::int64_t exponent) {
    check_order(order);
    std::int64_t e = exponent % order;
    if (e < 0) e += order;
    std::vector<Rational> c(static_cast<std::size_t>(e) + 1, Rational(0));
    c.back() = Rational(1);
    return CycloScalar(order, std::move(c));
}

bool CycloScalar::is_zero() const {
    for (const auto& c : num_)
        if (sgn(c) != 0) return false;
    return true;
}

bool CycloScalar::is_rational() const {
    for (std::size_t i = 1; i < num_.size(); ++i)
        if (sgn(num_[i]) != 0) return false;
    return true;
}

void CycloScalar::check_same_field(const CycloScalar& o) const {
    if (order_ != o.order_)
        throw RingMismatch("Q(zeta_" + std::to_string(order_) + ") vs Q(zeta_" +
                           std::to_string(o.order_) + ")");
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
    check_same_field(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] += o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ + o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) {
    check_same_field(o);
    if (den_ == o.den_) {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] -= o.num_[i];
    } else {
        for (std::size_t i = 0; i < num_.size(); ++i) num_[i] = num_[i] * o.den_ - o.num_[i] * den_;
        den_ *= o.den_;
    }
    normalize();
    return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
    check_same_field(o);
    const std::size_t d = num_.size();
    std::vector<mpz_class> prod(2 * d - 1, mpz_class(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (sgn(num_[i]) == 0) continue;
        for (std::size_t j = 0; j < d; ++j)
            if (sgn(o.num_[j]) != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    reduce(prod, cyclotomic_polynomial(order_));
    num_ = std::move(prod);
    den_ *= o.den_;
    normalize();
    return *this;
}

CycloScalar& CycloScalar::operator*=(const Rational& q) {
    for (auto& c : num_) c *= q.numerator();
    den_ *= q.denominator();
    normalize();
    return *this;
}

CycloScalar operator-(CycloScalar a) {
    for (auto& c : a.num_) c = -c;
    return a;
}

CycloScalar CycloScalar::inverse() const {
    const std::string field = "Q(zeta_" + std::to_string(order_) + ")";
    if (is_zero()) throw NotAUnit(field);
    const std::size_t d = num_.size();
    // column j of the operator is this * zeta^j
    std::vector<std::vector<Rational>> op(d, std::vector<Rational>(d, Rational(0)));
    for (std::size_t j = 0; j < d; ++j) {
        const CycloScalar col = *this * root(order_, static_cast<std::int64_t>(j));
        for (std::size_t i = 0; i < d; ++i) op[i][j] = col.coeff(i);
    }
    std::vector<Rational> rhs(d, Rational(0));
    rhs[0] = Rational(1);
    std::vector<Rational> x;
    if (!solve_rational(std::move(op), std::move(rhs), x)) throw NotAUnit(field);
    CycloScalar inv(order_, std::move(x));
    if (!(inv * *this == CycloScalar(order_, Rational(1))))
        throw InvariantViolation("cyclotomic inverse failed verification");
    return inv;
}

CycloScalar CycloScalar::embed(std::int64_t t) const {
    if (t < 1) throw DomainError("embedding factor must be >= 1");
    const auto c = coeffs();
    std::vector<Rational> e((c.size() - 1) * static_cast<std::size_t>(t) + 1, Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) e[i * static_cast<std::size_t>(t)] = c[i];
    return CycloScalar(order_ * t, std::move(e));
}

std::string CycloScalar::str() const {
    std::string out;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (sgn(num_[i]) == 0) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeff(i).str() + ")";
        if (i > 0) out += "*z" + std::to_string(order_) + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

} // namespace commord
