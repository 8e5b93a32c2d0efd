#ifndef QCW_ORACLE_HPP
#define QCW_ORACLE_HPP

#include <string>
#include <vector>

#include "qcw/series.hpp"

namespace qcw {

/// Multiplicity rule for parts in one residue class.
enum class MultiplicityRule {
    Any,        // multiplicity 0, 1, 2, ...
    Distinct,   // 0 or 1
    NotOne,     // 0 or >= 2 ("cannot be distinct")
    Forbidden,  // 0
    Overlined,  // any multiplicity, first occurrence optionally marked
};

/// Per-residue-class multiplicity rules defining a partition counter:
/// a part p is governed by rules[p mod classifier_modulus].
struct ConstraintSpec {
    int classifier_modulus = 1;
    std::vector<MultiplicityRule> rules{MultiplicityRule::Any};

    MultiplicityRule rule_for(long long part) const {
        return rules[static_cast<size_t>(part % classifier_modulus)];
    }
};

/// Series whose n-th coefficient counts the partitions of n obeying spec,
/// built as the product of per-part factor series for parts below N.
Series counts_series(const ConstraintSpec& spec, int order);

/// Number of partitions of n obeying spec (count of the empty partition is 1).
Int count(const ConstraintSpec& spec, int n);

/// Exhaustive multiset enumeration, the oracle for the oracle. n <= 40.
Int enumerate_count(const ConstraintSpec& spec, int n);

inline constexpr int kEnumerateLimit = 40;

/// Named specs: pond, pend, ped, pod, partitions, overpartitions, mult4-repeat.
ConstraintSpec builtin_spec(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Mini-syntax "m=2;1:not-one;0:any"; unlisted classes default to any.
/// Rule names: any, distinct, not-one, forbidden, overlined.
ConstraintSpec parse_constraint(const std::string& text);

}  // namespace qcw

#endif
