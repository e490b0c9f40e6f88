#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace commord::weightset {

/// Distinct prime divisors of k, ascending.
std::vector<std::int64_t> prime_divisors(std::int64_t k);

/// Witness that n lies in N p_1 + ... + N p_r for the primes p_i dividing k.
struct WeightCertificate {
    std::int64_t k = 0;
    std::int64_t n = 0;
    std::vector<std::int64_t> primes;
    /// sum_i coefficients[i] * primes[i] == n; absent when n is not in W(k).
    std::optional<std::vector<std::int64_t>> coefficients;

    bool nonempty() const noexcept { return coefficients.has_value(); }
    friend bool operator==(const WeightCertificate&, const WeightCertificate&) = default;
};

/// Exponents e_1..e_n in [0, k) whose k-th roots of unity sum to zero.
struct RootMultiset {
    std::int64_t k = 0;
    std::vector<std::int64_t> exponents;
    friend bool operator==(const RootMultiset&, const RootMultiset&) = default;
};

/// True iff n k-th roots of unity can sum to zero, i.e. n is a nonnegative
/// integer combination of the prime divisors of k. Requires k >= 2, n >= 1.
bool decide(std::int64_t k, std::int64_t n);

/// Lexicographically smallest coefficient vector (primes ascending), if any.
WeightCertificate decompose(std::int64_t k, std::int64_t n);

/// c_i blocks of the full set of p_i-th roots, each embedded as k-th roots.
/// The zero sum is re-checked exactly in Q(zeta_k). Throws NotInWeightSet.
RootMultiset build_root_multiset(const WeightCertificate& cert);

/// Exact zero test of sum zeta_k^e over the multiset.
bool sums_to_zero(const RootMultiset& roots);

inline constexpr std::uint64_t kDefaultOracleBound = 2'000'000;

/// Number of size-n multisets over k symbols, C(n + k - 1, n), saturating at UINT64_MAX.
std::uint64_t multiset_count(std::int64_t k, std::int64_t n);

/// Brute-force oracle: every nondecreasing exponent sequence of length n whose
/// roots sum to zero, in lexicographic order, at most `limit` of them.
/// Throws OracleTooLarge when multiset_count(k, n) exceeds `bound`.
std::vector<RootMultiset> enumerate_zero_sums(std::int64_t k, std::int64_t n, std::size_t limit,
                                              std::uint64_t bound = kDefaultOracleBound);

} // namespace commord::weightset
