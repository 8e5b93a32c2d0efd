#include "qcw/oracle.hpp"

#include <sstream>
#include <stdexcept>

namespace qcw {

namespace {

Series binomial_factor(int p, int order, int sign) {
    std::vector<Int> v(static_cast<size_t>(order));
    v[0] = 1;
    if (p < order) v[static_cast<size_t>(p)] = sign;
    return Series(std::move(v));
}

// 1 - q^p + q^{2p}, the numerator of the "not allowed to be distinct" factor
// 1/(1-q^p) - q^p.
Series not_one_numerator(int p, int order) {
    std::vector<Int> v(static_cast<size_t>(order));
    v[0] = 1;
    if (p < order) v[static_cast<size_t>(p)] = -1;
    if (2LL * p < order) v[static_cast<size_t>(2 * p)] = 1;
    return Series(std::move(v));
}

void validate(const ConstraintSpec& spec) {
    if (spec.classifier_modulus < 1)
        throw std::invalid_argument("ConstraintSpec: classifier modulus must be >= 1");
    if (spec.rules.size() != static_cast<size_t>(spec.classifier_modulus))
        throw std::invalid_argument("ConstraintSpec: need one rule per residue class");
}

Int enumerate(const ConstraintSpec& spec, int remaining, int max_part) {
    if (remaining == 0) return 1;
    if (max_part == 0) return 0;
    Int total = 0;
    const int p = max_part;
    const auto rule = spec.rule_for(p);
    // multiplicity 0
    total += enumerate(spec, remaining, p - 1);
    const int max_mult = remaining / p;
    for (int k = 1; k <= max_mult; ++k) {
        bool allowed = true;
        Int weight = 1;
        switch (rule) {
            case MultiplicityRule::Any: break;
            case MultiplicityRule::Distinct: allowed = (k == 1); break;
            case MultiplicityRule::NotOne: allowed = (k >= 2); break;
            case MultiplicityRule::Forbidden: allowed = false; break;
            case MultiplicityRule::Overlined: weight = 2; break;
        }
        if (!allowed) continue;
        total += weight * enumerate(spec, remaining - k * p, p - 1);
    }
    return total;
}

MultiplicityRule rule_from_name(const std::string& name) {
    if (name == "any") return MultiplicityRule::Any;
    if (name == "distinct") return MultiplicityRule::Distinct;
    if (name == "not-one") return MultiplicityRule::NotOne;
    if (name == "forbidden") return MultiplicityRule::Forbidden;
    if (name == "overlined") return MultiplicityRule::Overlined;
    throw std::invalid_argument(
        "unknown multiplicity rule '" + name +
        "' (expected any, distinct, not-one, forbidden or overlined)");
}

}  // namespace

Series counts_series(const ConstraintSpec& spec, int order) {
    validate(spec);
    if (order < 1) throw std::invalid_argument("counts_series: order must be >= 1");
    Series acc = Series::one(order);
    for (int p = 1; p < order; ++p) {
        switch (spec.rule_for(p)) {
            case MultiplicityRule::Any:
                acc = divide(acc, binomial_factor(p, order, -1));
                break;
            case MultiplicityRule::Distinct:
                acc = mul(acc, binomial_factor(p, order, 1));
                break;
            case MultiplicityRule::NotOne:
                acc = divide(mul(acc, not_one_numerator(p, order)),
                             binomial_factor(p, order, -1));
                break;
            case MultiplicityRule::Forbidden:
                break;
            case MultiplicityRule::Overlined:
                acc = divide(mul(acc, binomial_factor(p, order, 1)),
                             binomial_factor(p, order, -1));
                break;
        }
    }
    return acc;
}

Int count(const ConstraintSpec& spec, int n) {
    if (n < 0) throw std::invalid_argument("count: n must be >= 0");
    return counts_series(spec, n + 1)[n];
}

Int enumerate_count(const ConstraintSpec& spec, int n) {
    validate(spec);
    if (n < 0) throw std::invalid_argument("enumerate_count: n must be >= 0");
    if (n > kEnumerateLimit) {
        throw std::invalid_argument("enumerate_count: n = " + std::to_string(n) +
                                    " exceeds the exhaustive-enumeration bound " +
                                    std::to_string(kEnumerateLimit));
    }
    return enumerate(spec, n, n);
}

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {
        "pond", "pend", "ped", "pod", "partitions", "overpartitions",
        "mult4-repeat"};
    return names;
}

ConstraintSpec builtin_spec(const std::string& name) {
    using R = MultiplicityRule;
    if (name == "pond") return {2, {R::Any, R::NotOne}};
    if (name == "pend") return {2, {R::NotOne, R::Any}};
    if (name == "ped") return {2, {R::Distinct, R::Any}};
    if (name == "pod") return {2, {R::Any, R::Distinct}};
    if (name == "partitions") return {1, {R::Any}};
    if (name == "overpartitions") return {1, {R::Overlined}};
    if (name == "mult4-repeat") return {4, {R::NotOne, R::Any, R::Any, R::Any}};
    std::ostringstream msg;
    msg << "unknown builtin spec '" << name << "'; known specs:";
    for (const auto& n : builtin_names()) msg << " " << n;
    throw std::invalid_argument(msg.str());
}

ConstraintSpec parse_constraint(const std::string& text) {
    std::istringstream in(text);
    std::string field;
    if (!std::getline(in, field, ';') || field.rfind("m=", 0) != 0)
        throw std::invalid_argument("constraint syntax must start with \"m=<int>\"");
    const int m = std::stoi(field.substr(2));
    if (m < 1) throw std::invalid_argument("classifier modulus must be >= 1");
    ConstraintSpec spec{m, std::vector<MultiplicityRule>(
                               static_cast<size_t>(m), MultiplicityRule::Any)};
    while (std::getline(in, field, ';')) {
        if (field.empty()) continue;
        const auto colon = field.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("expected \"<class>:<rule>\", got \"" +
                                        field + "\"");
        const int r = std::stoi(field.substr(0, colon));
        if (r < 0 || r >= m)
            throw std::invalid_argument("residue class " + std::to_string(r) +
                                        " out of range [0, " + std::to_string(m - 1) +
                                        "]");
        spec.rules[static_cast<size_t>(r)] = rule_from_name(field.substr(colon + 1));
    }
    return spec;
}

}  // namespace qcw
