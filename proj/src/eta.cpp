#include "qcw/eta.hpp"

#include <mutex>
#include <stdexcept>
#include <tuple>

namespace qcw {

namespace {

struct PochKey {
    int r;
    int order;
    std::string modulus;  // empty when exact
    bool operator<(const PochKey& o) const {
        return std::tie(r, order, modulus) < std::tie(o.r, o.order, o.modulus);
    }
};

std::mutex g_poch_mutex;
std::map<PochKey, Series> g_poch_cache;

Series pochhammer_uncached(int r, int order, const std::optional<Int>& modulus) {
    std::vector<Int> v(static_cast<size_t>(order));
    v[0] = 1;
    // k(3k-1)/2 for k = 1, -1, 2, -2, ...
    for (long long k = 1;; ++k) {
        const long long g1 = k * (3 * k - 1) / 2;
        const long long g2 = k * (3 * k + 1) / 2;
        if (g1 * r >= order && g2 * r >= order) break;
        const Int sign = (k % 2 == 0) ? 1 : -1;
        if (g1 * r < order) v[static_cast<size_t>(g1 * r)] = sign;
        if (g2 * r < order) v[static_cast<size_t>(g2 * r)] = sign;
    }
    return Series(std::move(v), modulus);
}

}  // namespace

Series pochhammer(int r, int order, const std::optional<Int>& modulus) {
    if (r < 1) throw std::invalid_argument("pochhammer: subscript r must be >= 1");
    if (order < 1) throw std::invalid_argument("pochhammer: order must be >= 1");
    const PochKey key{r, order, modulus ? modulus->str() : std::string()};
    {
        std::lock_guard lock(g_poch_mutex);
        if (auto it = g_poch_cache.find(key); it != g_poch_cache.end())
            return it->second;
    }
    Series s = pochhammer_uncached(r, order, modulus);
    std::lock_guard lock(g_poch_mutex);
    return g_poch_cache.emplace(key, std::move(s)).first->second;
}

void clear_pochhammer_cache() {
    std::lock_guard lock(g_poch_mutex);
    g_poch_cache.clear();
}

Series pochhammer_general(int sign, int a, int b, int order) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer_general: sign must be +1 or -1");
    if (a < 1 || b < 1)
        throw std::invalid_argument("pochhammer_general: a and b must be >= 1");
    Series acc = Series::one(order);
    for (long long e = a; e < order; e += b) {
        std::vector<Int> f(static_cast<size_t>(order));
        f[0] = 1;
        f[static_cast<size_t>(e)] = sign;
        acc = mul(acc, Series(std::move(f)));
    }
    return acc;
}

Series eta_quotient(const EtaQuotient& t, int order,
                    const std::optional<Int>& modulus) {
    if (order < 1) throw std::invalid_argument("eta_quotient: order must be >= 1");
    if (t.qpow < 0) {
        throw std::domain_error(
            "eta_quotient: term has negative q-valuation (q^" +
            std::to_string(t.qpow) + ")");
    }
    for (const auto& [r, e] : t.factors) {
        if (r < 1) throw std::invalid_argument("eta_quotient: subscript must be >= 1");
        if (e == 0) throw std::invalid_argument("eta_quotient: zero exponent stored");
    }

    Series acc = Series::monomial(t.coeff, t.qpow, order, modulus);
    for (const auto& [r, e] : t.factors) {
        if (e <= 0) continue;
        const Series p = pochhammer(r, order, modulus);
        for (int i = 0; i < e; ++i) acc = mul(acc, p);
    }
    for (const auto& [r, e] : t.factors) {
        if (e >= 0) continue;
        const Series p = pochhammer(r, order, modulus);
        for (int i = 0; i < -e; ++i) acc = divide(acc, p);
    }
    return acc;
}

}  // namespace qcw
