#include "commord/weightset/weightset.hpp"

#include <limits>
#include <string>

#include "commord/errors.hpp"
#include "commord/exact/cyclotomic.hpp"

namespace commord::weightset {

namespace {

void check_domain(std::int64_t k, std::int64_t n) {
    if (k < 2) throw DomainError("k must be >= 2, got " + std::to_string(k));
    if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
}

/// reach[i][t]: t is an N-combination of primes[i..]. reach[r] only contains 0.
std::vector<std::vector<bool>> suffix_reachability(const std::vector<std::int64_t>& primes,
                                                   std::int64_t n) {
    const std::size_t r = primes.size();
    const auto size = static_cast<std::size_t>(n) + 1;
    std::vector<std::vector<bool>> reach(r + 1, std::vector<bool>(size, false));
    reach[r][0] = true;
    for (std::size_t i = r; i-- > 0;) {
        const auto p = static_cast<std::size_t>(primes[i]);
        for (std::size_t t = 0; t < size; ++t)
            reach[i][t] = reach[i + 1][t] || (t >= p && reach[i][t - p]);
    }
    return reach;
}

} // namespace

std::vector<std::int64_t> prime_divisors(std::int64_t k) {
    if (k < 1) throw DomainError("prime_divisors requires k >= 1");
    std::vector<std::int64_t> out;
    for (std::int64_t p = 2; p * p <= k; ++p) {
        if (k % p != 0) continue;
        out.push_back(p);
        while (k % p == 0) k /= p;
    }
    if (k > 1) out.push_back(k);
    return out;
}

bool decide(std::int64_t k, std::int64_t n) {
    check_domain(k, n);
    const auto primes = prime_divisors(k);
    std::vector<bool> reach(static_cast<std::size_t>(n) + 1, false);
    reach[0] = true;
    for (std::size_t t = 1; t < reach.size(); ++t)
        for (auto p : primes)
            if (t >= static_cast<std::size_t>(p) && reach[t - static_cast<std::size_t>(p)]) {
                reach[t] = true;
                break;
            }
    return reach.back();
}

WeightCertificate decompose(std::int64_t k, std::int64_t n) {
    check_domain(k, n);
    WeightCertificate cert{k, n, prime_divisors(k), std::nullopt};
    const auto reach = suffix_reachability(cert.primes, n);
    if (!reach[0][static_cast<std::size_t>(n)]) return cert;
    std::vector<std::int64_t> coeffs;
    std::int64_t rest = n;
    for (std::size_t i = 0; i < cert.primes.size(); ++i) {
        std::int64_t c = 0;
        while (!reach[i + 1][static_cast<std::size_t>(rest - c * cert.primes[i])]) ++c;
        coeffs.push_back(c);
        rest -= c * cert.primes[i];
    }
    cert.coefficients = std::move(coeffs);
    return cert;
}

bool sums_to_zero(const RootMultiset& roots) {
    CycloScalar sum(roots.k);
    for (auto e : roots.exponents) sum += CycloScalar::root(roots.k, e);
    return sum.is_zero();
}

RootMultiset build_root_multiset(const WeightCertificate& cert) {
    if (!cert.coefficients)
        throw NotInWeightSet(std::to_string(cert.n) + " is not in the weight set of " +
                             std::to_string(cert.k));
    RootMultiset out{cert.k, {}};
    for (std::size_t i = 0; i < cert.primes.size(); ++i) {
        const std::int64_t p = cert.primes[i];
        for (std::int64_t block = 0; block < (*cert.coefficients)[i]; ++block)
            for (std::int64_t j = 0; j < p; ++j) out.exponents.push_back((cert.k / p) * j);
    }
    if (static_cast<std::int64_t>(out.exponents.size()) != cert.n)
        throw InvariantViolation("certificate coefficients do not sum to n");
    if (!sums_to_zero(out)) throw InvariantViolation("root multiset does not sum to zero");
    return out;
}

std::uint64_t multiset_count(std::int64_t k, std::int64_t n) {
    // C(n + k - 1, n) built incrementally; each partial product is itself a binomial.
    unsigned __int128 c = 1;
    const auto cap = std::numeric_limits<std::uint64_t>::max();
    for (std::int64_t i = 1; i <= n; ++i) {
        c = c * static_cast<unsigned __int128>(k - 1 + i) / static_cast<unsigned __int128>(i);
        if (c > cap) return cap;
    }
    return static_cast<std::uint64_t>(c);
}

std::vector<RootMultiset> enumerate_zero_sums(std::int64_t k, std::int64_t n, std::size_t limit,
                                              std::uint64_t bound) {
    check_domain(k, n);
    const std::uint64_t count = multiset_count(k, n);
    if (count > bound)
        throw OracleTooLarge("C(n+k-1, n) = " + std::to_string(count) + " exceeds bound " +
                             std::to_string(bound));
    // zeta_k^e in the power basis has integer coordinates since Phi_k is monic.
    const auto dim = static_cast<std::size_t>(euler_phi(k));
    std::vector<std::vector<std::int64_t>> roots;
    for (std::int64_t e = 0; e < k; ++e) {
        const auto z = CycloScalar::root(k, e);
        std::vector<std::int64_t> v;
        for (const auto& c : z.coeffs()) {
            if (c.denominator() != 1 || !c.numerator().fits_slong_p())
                throw InvariantViolation("root of unity with non-integral coordinates");
            v.push_back(c.numerator().get_si());
        }
        roots.push_back(std::move(v));
    }

    std::vector<RootMultiset> found;
    std::vector<std::int64_t> current;
    std::vector<std::int64_t> sum(dim, 0);
    auto recurse = [&](auto&& self, std::int64_t first) -> void {
        if (found.size() >= limit) return;
        if (static_cast<std::int64_t>(current.size()) == n) {
            for (auto s : sum)
                if (s != 0) return;
            found.push_back(RootMultiset{k, current});
            return;
        }
        for (std::int64_t e = first; e < k; ++e) {
            current.push_back(e);
            for (std::size_t i = 0; i < dim; ++i) sum[i] += roots[e][i];
            self(self, e);
            for (std::size_t i = 0; i < dim; ++i) sum[i] -= roots[e][i];
            current.pop_back();
            if (found.size() >= limit) return;
        }
    };
    recurse(recurse, 0);
    return found;
}

} // namespace commord::weightset
