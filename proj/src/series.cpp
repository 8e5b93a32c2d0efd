#include "qcw/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/integer/mod_inverse.hpp>

namespace qcw {

namespace {

Int canonical(Int c, const Int& m) {
    c %= m;
    if (c < 0) c += m;
    return c;
}

void require_same_modulus(const Series& a, const Series& b, const char* op) {
    if (a.modulus() != b.modulus()) {
        std::ostringstream msg;
        msg << op << ": modulus mismatch ("
            << (a.modulus() ? a.modulus()->str() : std::string("none")) << " vs "
            << (b.modulus() ? b.modulus()->str() : std::string("none")) << ")";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Series::Series(std::vector<Int> coeffs, std::optional<Int> modulus)
    : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Series: order must be >= 1");
    if (modulus_) {
        if (*modulus_ < 2) throw std::invalid_argument("Series: modulus must be >= 2");
        for (auto& c : coeffs_) c = canonical(std::move(c), *modulus_);
    }
}

Series Series::zero(int order, std::optional<Int> modulus) {
    return Series(std::vector<Int>(static_cast<size_t>(order)), std::move(modulus));
}

Series Series::one(int order, std::optional<Int> modulus) {
    return monomial(1, 0, order, std::move(modulus));
}

Series Series::monomial(Int c, int power, int order, std::optional<Int> modulus) {
    if (power < 0) throw std::invalid_argument("monomial: negative power of q");
    std::vector<Int> v(static_cast<size_t>(order));
    if (power < order) v[static_cast<size_t>(power)] = std::move(c);
    return Series(std::move(v), std::move(modulus));
}

bool Series::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Int& c) { return c == 0; });
}

std::vector<int> Series::support() const {
    std::vector<int> idx;
    for (int n = 0; n < order(); ++n)
        if (coeffs_[static_cast<size_t>(n)] != 0) idx.push_back(n);
    return idx;
}

int common_order(const Series& a, const Series& b) {
    return std::min(a.order(), b.order());
}

Series add(const Series& a, const Series& b) {
    require_same_modulus(a, b, "add");
    const int n = common_order(a, b);
    std::vector<Int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a[i] + b[i];
    return Series(std::move(v), a.modulus());
}

Series sub(const Series& a, const Series& b) {
    require_same_modulus(a, b, "sub");
    const int n = common_order(a, b);
    std::vector<Int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = a[i] - b[i];
    return Series(std::move(v), a.modulus());
}

Series negate(const Series& a) {
    std::vector<Int> v(a.coeffs());
    for (auto& c : v) c = -c;
    return Series(std::move(v), a.modulus());
}

Series mul(const Series& a, const Series& b) {
    require_same_modulus(a, b, "mul");
    const int n = common_order(a, b);
    const auto sa = a.support();
    const auto sb = b.support();
    const Series& sparse = sa.size() <= sb.size() ? a : b;
    const Series& dense = sa.size() <= sb.size() ? b : a;
    const auto& sup = sa.size() <= sb.size() ? sa : sb;

    std::vector<Int> v(static_cast<size_t>(n));
    for (int i : sup) {
        if (i >= n) break;
        const Int& ci = sparse[i];
        const int top = n - i;
        for (int j = 0; j < top && j < dense.order(); ++j) {
            if (dense[j] != 0) v[static_cast<size_t>(i + j)] += ci * dense[j];
        }
    }
    return Series(std::move(v), a.modulus());
}

Series divide(const Series& num, const Series& den) {
    require_same_modulus(num, den, "divide");
    const int n = common_order(num, den);
    const Int& c0 = den[0];
    if (c0 == 0) {
        throw std::domain_error(
            "divide: constant term is 0 (positive q-valuation, shift first)");
    }

    // Unit inverse of the constant term.
    Int c0_inv;
    if (den.modulus()) {
        c0_inv = boost::integer::mod_inverse(c0, *den.modulus());
        if (c0_inv == 0) {
            throw std::domain_error("divide: constant term " + c0.str() +
                                    " is not a unit mod " + den.modulus()->str());
        }
    } else {
        if (c0 != 1 && c0 != -1) {
            throw std::domain_error("divide: constant term " + c0.str() +
                                    " is not a unit (need +-1)");
        }
        c0_inv = c0;
    }

    std::vector<int> den_sup;
    for (int k = 1; k < n; ++k)
        if (den[k] != 0) den_sup.push_back(k);

    std::vector<Int> q(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int acc = num[i];
        for (int k : den_sup) {
            if (k > i) break;
            acc -= den[k] * q[static_cast<size_t>(i - k)];
        }
        acc *= c0_inv;
        if (den.modulus()) acc = canonical(std::move(acc), *den.modulus());
        q[static_cast<size_t>(i)] = std::move(acc);
    }
    return Series(std::move(q), num.modulus());
}

Series invert(const Series& a) {
    return divide(Series::one(a.order(), a.modulus()), a);
}

Series substitute_power(const Series& a, int k) {
    if (k < 1) throw std::invalid_argument("substitute_power: k must be >= 1");
    const int n = a.order();
    std::vector<Int> v(static_cast<size_t>(n));
    for (int j = 0; static_cast<long long>(j) * k < n; ++j)
        v[static_cast<size_t>(j * k)] = a[j];
    return Series(std::move(v), a.modulus());
}

Series shift(const Series& a, int s) {
    if (s < 0) throw std::invalid_argument("shift: negative shift (no Laurent series)");
    const int n = a.order();
    std::vector<Int> v(static_cast<size_t>(n));
    for (int i = 0; i + s < n; ++i) v[static_cast<size_t>(i + s)] = a[i];
    return Series(std::move(v), a.modulus());
}

Series component(const Series& a, int m, int r) {
    if (m < 2) throw std::invalid_argument("component: m must be >= 2");
    if (r < 0 || r >= m)
        throw std::out_of_range("component: residue r out of range [0, m-1]");
    const int n = (a.order() - r + m - 1) / m;
    if (n < 1)
        throw std::invalid_argument("component: input order too small for residue class");
    std::vector<Int> v(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = a[m * j + r];
    return Series(std::move(v), a.modulus());
}

Series reduce_mod(const Series& a, const Int& M) {
    if (M < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    if (a.modulus() && *a.modulus() % M != 0) {
        throw std::invalid_argument("reduce_mod: existing modulus " +
                                    a.modulus()->str() + " is not a multiple of " +
                                    M.str());
    }
    return Series(a.coeffs(), M);
}

std::optional<CoeffDifference> first_difference(const Series& a, const Series& b) {
    require_same_modulus(a, b, "first_difference");
    const int n = common_order(a, b);
    for (int i = 0; i < n; ++i)
        if (a[i] != b[i]) return CoeffDifference{i, a[i], b[i]};
    return std::nullopt;
}

std::string to_string(const Series& a, int max_terms) {
    std::ostringstream out;
    int shown = 0;
    bool first = true;
    for (int n = 0; n < a.order() && shown < max_terms; ++n) {
        if (a[n] == 0) continue;
        if (!first) out << " + ";
        out << a[n].str();
        if (n > 0) out << "*q^" << n;
        first = false;
        ++shown;
    }
    if (first) out << "0";
    out << " + O(q^" << a.order() << ")";
    return out.str();
}

}  // namespace qcw
