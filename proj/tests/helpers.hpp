// Test-only oracles, independent of the library's evaluation path: naive
// dense truncated products and a random-series generator.
#ifndef QCW_TESTS_HELPERS_HPP
#define QCW_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include "qcw/series.hpp"

namespace qcw::testing {

/// Dense truncated product acc *= (1 + c q^p), no sparsity tricks.
inline void naive_mul_binomial(std::vector<Int>& acc, const Int& c, int p) {
    const int n = static_cast<int>(acc.size());
    for (int i = n - 1; i >= 0; --i) {
        if (i + p < n && acc[static_cast<size_t>(i)] != 0)
            acc[static_cast<size_t>(i + p)] += c * acc[static_cast<size_t>(i)];
    }
}

/// prod_{j>=1} (1 - q^{r j}) multiplied out factor by factor.
inline std::vector<Int> naive_pochhammer(int r, int order) {
    std::vector<Int> acc(static_cast<size_t>(order));
    acc[0] = 1;
    for (int j = 1; r * j < order; ++j) naive_mul_binomial(acc, -1, r * j);
    return acc;
}

/// Full O(N^2) Cauchy product of two coefficient vectors.
inline std::vector<Int> naive_mul(const std::vector<Int>& a,
                                  const std::vector<Int>& b) {
    const size_t n = std::min(a.size(), b.size());
    std::vector<Int> out(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    return out;
}

inline Series random_series(std::mt19937& rng, int max_order = 64,
                            bool with_modulus = false) {
    std::uniform_int_distribution<int> order_dist(1, max_order);
    std::uniform_int_distribution<int> coeff_dist(-9, 9);
    const int order = order_dist(rng);
    std::vector<Int> v(static_cast<size_t>(order));
    for (auto& c : v) c = coeff_dist(rng);
    std::optional<Int> modulus;
    if (with_modulus) {
        std::uniform_int_distribution<int> mod_dist(2, 30);
        modulus = mod_dist(rng);
    }
    return Series(std::move(v), modulus);
}

/// Random series with unit constant term, for inversion tests.
inline Series random_unit_series(std::mt19937& rng, int max_order = 64) {
    Series s = random_series(rng, max_order, false);
    std::vector<Int> v = s.coeffs();
    v[0] = (rng() % 2 == 0) ? 1 : -1;
    return Series(std::move(v));
}

}  // namespace qcw::testing

#endif
