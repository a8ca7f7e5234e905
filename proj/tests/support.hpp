#pragma once

// Shared helpers for the test suites: a fixed-stream generator and small
// independent reference implementations used as oracles. Everything here
// is deliberately naive; the point is independence from the library code.

#include <cstdint>
#include <vector>

namespace testsupport {

struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t s) : state(s) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Dense convolution over machine integers; coefficients stay tiny in every
// test that uses it.
inline std::vector<long long> conv(const std::vector<long long>& a,
                                   const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Fold exponents modulo n.
inline std::vector<long long> fold_mod(const std::vector<long long>& a, long n) {
    std::vector<long long> c(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i % static_cast<std::size_t>(n)] += a[i];
    return c;
}

inline long local_totient(long n) {
    long t = n, m = n;
    for (long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            t = t / p * (p - 1);
            while (m % p == 0) m /= p;
        }
    if (m > 1) t = t / m * (m - 1);
    return t;
}

}  // namespace testsupport
