#ifndef QCW_ETA_HPP
#define QCW_ETA_HPP

#include <map>
#include <optional>
#include <string>

#include "qcw/series.hpp"

namespace qcw {

/// One term c * q^s * prod f_r^{e_r}, where f_r = (q^r; q^r)_inf.
/// Factors are keyed by subscript; zero exponents are never stored.
struct EtaQuotient {
    Int coeff = 1;
    int qpow = 0;
    std::map<int, int> factors;

    bool operator==(const EtaQuotient&) const = default;
};

/// Truncated expansion of f_r = prod_{j>=1} (1 - q^{r j}).
/// Nonzero coefficients sit only at r*g_k for generalized pentagonal
/// numbers g_k = k(3k-1)/2, with value (-1)^k.
Series pochhammer(int r, int order, const std::optional<Int>& modulus = std::nullopt);

/// Truncated prod_{j>=0} (1 + sign * q^{a + j b}) for sign in {+1, -1}.
Series pochhammer_general(int sign, int a, int b, int order);

/// Evaluate coeff * q^qpow * prod f_r^{e_r} to the given order.
/// Positive-exponent factors are multiplied in first (sparse products),
/// then each inversion runs the sparse division recurrence.
Series eta_quotient(const EtaQuotient& t, int order,
                    const std::optional<Int>& modulus = std::nullopt);

/// Process-level pochhammer memo, keyed by (r, order, modulus).
void clear_pochhammer_cache();

}  // namespace qcw

#endif
