#ifndef QCW_SERIES_HPP
#define QCW_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcw {

using Int = boost::multiprecision::cpp_int;

/// Truncated formal power series in q with exact integer coefficients,
/// optionally reduced in Z/MZ (canonical residues 0 <= c < M).
///
/// Coefficients of q^0 .. q^{order-1} are known; operations never extend
/// the order, the result order is always the minimum of the operand orders.
class Series {
public:
    Series(std::vector<Int> coeffs, std::optional<Int> modulus = std::nullopt);

    static Series zero(int order, std::optional<Int> modulus = std::nullopt);
    static Series one(int order, std::optional<Int> modulus = std::nullopt);
    /// c * q^power, truncated to the given order.
    static Series monomial(Int c, int power, int order,
                           std::optional<Int> modulus = std::nullopt);

    int order() const { return static_cast<int>(coeffs_.size()); }
    const Int& operator[](int n) const { return coeffs_[static_cast<size_t>(n)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const std::optional<Int>& modulus() const { return modulus_; }

    bool is_zero() const;

    /// Indices with nonzero coefficient, ascending.
    std::vector<int> support() const;

    bool operator==(const Series& other) const = default;

private:
    std::optional<Int> modulus_;
    std::vector<Int> coeffs_;
};

Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);

/// Truncated Cauchy product; iterates over the sparser operand's support.
Series mul(const Series& a, const Series& b);

/// num / den where den has a unit constant term. Solves the convolution
/// recurrence term by term; cost O(N * nnz(den)).
Series divide(const Series& num, const Series& den);

/// Multiplicative inverse: divide(1, a).
Series invert(const Series& a);

/// q -> q^k. Coefficient of q^{kj} is a_j; result order = order(a).
Series substitute_power(const Series& a, int k);

/// Multiply by q^s; the top s coefficients fall off the truncation.
Series shift(const Series& a, int s);

/// r-th component of the m-dissection: c_j = a_{m j + r}, already reindexed
/// q^m -> q. Result order = ceil((order(a) - r) / m).
Series component(const Series& a, int m, int r);

/// Reduce coefficients to canonical residues mod M and mark the series.
/// The input must be exact or carry a modulus that M divides.
Series reduce_mod(const Series& a, const Int& M);

struct CoeffDifference {
    int index;
    Int lhs;
    Int rhs;
};

/// Smallest index below min(orders) where a and b differ, or nullopt if the
/// series agree on the whole common range.
std::optional<CoeffDifference> first_difference(const Series& a, const Series& b);

/// The common known range of two series.
int common_order(const Series& a, const Series& b);

std::string to_string(const Series& a, int max_terms = 12);

}  // namespace qcw

#endif
