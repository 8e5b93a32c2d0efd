#include "qcw/verifier.hpp"

#include <chrono>
#include <stdexcept>

namespace qcw {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Int mod_reduce(Int v, const Int& M) {
    v %= M;
    if (v < 0) v += M;
    return v;
}

std::string source_label(const Source& s) {
    if (const auto* name = std::get_if<std::string>(&s)) return *name;
    return print(std::get<EtaExpr>(s));
}

/// Exact coefficient series for a claim source. Builtin sources come from
/// their generating function and are cross-checked against the oracle DP
/// on a prefix; a mismatch is a hard error.
Series expand_source(const Source& s, int order, const VerifierOptions& opts) {
    if (const auto* name = std::get_if<std::string>(&s)) {
        const Series series = evaluate(builtin_generating_function(*name), order);
        const int check = static_cast<int>(
            std::min<long long>(opts.oracle_check_limit, order));
        if (check >= 1) {
            const Series oracle = counts_series(builtin_spec(*name), check);
            if (const auto diff = first_difference(series, oracle)) {
                throw std::logic_error(
                    "generating function for '" + *name +
                    "' disagrees with the combinatorial oracle at n=" +
                    std::to_string(diff->index) + " (" + diff->lhs.str() + " vs " +
                    diff->rhs.str() + ")");
            }
        }
        return series;
    }
    return evaluate(std::get<EtaExpr>(s), order);
}

VerificationReport error_report(VerificationReport r, const std::string& message,
                                Clock::time_point t0) {
    r.outcome = Outcome::Error;
    r.message = message;
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace

bool is_prime(const Int& p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

EtaExpr builtin_generating_function(const std::string& name) {
    if (name == "pond") return parse_expr("f4*f6^2/(f2^2*f3*f12)");
    if (name == "pend") return parse_expr("f2*f12/(f1*f4*f6)");
    if (name == "ped") return parse_expr("f4/f1");
    if (name == "pod") return parse_expr("f2/(f1*f4)");
    if (name == "partitions") return parse_expr("1/f1");
    if (name == "overpartitions") return parse_expr("f2/f1^2");
    if (name == "mult4-repeat") return parse_expr("f4*f24/(f1*f8*f12)");
    builtin_spec(name);  // throws with the suggestion list
    throw std::logic_error("unreachable");
}

VerificationReport verify_congruence(const CongruenceClaim& c, long long n_limit,
                                     const VerifierOptions& opts) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "congruence";
    r.label = source_label(c.source);
    r.params = {{"A", c.A}, {"B", c.B}, {"n_limit", n_limit}};
    r.modulus = c.M;
    try {
        if (n_limit < 1) throw std::invalid_argument("n_limit must be >= 1");
        if (c.A < 1 || c.B < 0) throw std::invalid_argument("need A >= 1 and B >= 0");
        const long long order = c.A * n_limit + c.B + 1;
        if (order > opts.max_order) {
            return error_report(std::move(r),
                                "required order " + std::to_string(order) +
                                    " exceeds the budget " +
                                    std::to_string(opts.max_order),
                                t0);
        }
        r.order = order;
        const Series a = expand_source(c.source, static_cast<int>(order), opts);
        for (long long n = 0; n <= n_limit; ++n) {
            const Int v = mod_reduce(a[static_cast<int>(c.A * n + c.B)], c.M);
            if (v != 0) {
                r.outcome = Outcome::Fail;
                r.witness = n;
                r.witness_value = v;
                r.elapsed_ms = ms_since(t0);
                return r;
            }
        }
        r.outcome = Outcome::Pass;
        r.elapsed_ms = ms_since(t0);
        return r;
    } catch (const std::exception& e) {
        return error_report(std::move(r), e.what(), t0);
    }
}

VerificationReport verify_internal(const InternalClaim& c, long long n_limit,
                                   const VerifierOptions& opts) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "internal";
    r.label = source_label(c.source);
    r.params = {{"A", c.A}, {"B", c.B}, {"C", c.C}, {"D", c.D}, {"n_limit", n_limit}};
    r.modulus = c.M;
    try {
        if (n_limit < 1) throw std::invalid_argument("n_limit must be >= 1");
        if (c.A < 1 || c.C < 1) throw std::invalid_argument("need A >= 1 and C >= 1");
        const long long order =
            std::max(c.A * n_limit + c.B, c.C * n_limit + c.D) + 1;
        if (order > opts.max_order) {
            return error_report(std::move(r),
                                "required order " + std::to_string(order) +
                                    " exceeds the budget " +
                                    std::to_string(opts.max_order),
                                t0);
        }
        r.order = order;
        const Series a = expand_source(c.source, static_cast<int>(order), opts);
        for (long long n = 0; n <= n_limit; ++n) {
            const Int v = mod_reduce(
                a[static_cast<int>(c.A * n + c.B)] - a[static_cast<int>(c.C * n + c.D)],
                c.M);
            if (v != 0) {
                r.outcome = Outcome::Fail;
                r.witness = n;
                r.witness_value = v;
                r.elapsed_ms = ms_since(t0);
                return r;
            }
        }
        r.outcome = Outcome::Pass;
        r.elapsed_ms = ms_since(t0);
        return r;
    } catch (const std::exception& e) {
        return error_report(std::move(r), e.what(), t0);
    }
}

std::pair<Int, Int> family_progression(const FamilyClaim& f) {
    if (f.alpha < 1) throw std::invalid_argument("family: alpha must be >= 1");
    const Int p2a = pow(Int(3), 2 * f.alpha);        // 3^{2a}
    const Int p2a1 = pow(Int(3), 2 * f.alpha - 1);   // 3^{2a-1}
    const Int A = 3 * p2a;
    Int Bnum, step_num;
    if (f.family == Family::Pond) {
        Bnum = 23 * p2a + 1;
        step_num = 23 * p2a1 - 5;
    } else {
        Bnum = 17 * p2a - 1;
        step_num = 17 * p2a1 - 3;
    }
    if (Bnum % 8 != 0) {
        throw std::logic_error("family progression offset " + Bnum.str() +
                               " is not divisible by 8");
    }
    if (step_num % 8 != 0) {
        throw std::logic_error("family induction-step offset " + step_num.str() +
                               " is not divisible by 8");
    }
    return {A, Bnum / 8};
}

VerificationReport verify_family(const FamilyClaim& f, long long n_limit,
                                 const VerifierOptions& opts) {
    const auto t0 = Clock::now();
    const std::string name = f.family == Family::Pond ? "pond" : "pend";
    VerificationReport r;
    r.kind = "family";
    r.label = name + " alpha=" + std::to_string(f.alpha);
    r.params = {{"family", name}, {"alpha", f.alpha}, {"n_limit", n_limit}};
    r.modulus = Int(3);
    try {
        const auto [A, B] = family_progression(f);
        r.params["A"] = A.str();
        r.params["B"] = B.str();
        const Int required = A * n_limit + B + 1;
        if (required > opts.max_order) {
            return error_report(std::move(r),
                                "required order " + required.str() +
                                    " exceeds the budget " +
                                    std::to_string(opts.max_order),
                                t0);
        }
        CongruenceClaim c{name, static_cast<long long>(A),
                          static_cast<long long>(B), Int(3)};
        VerificationReport inner = verify_congruence(c, n_limit, opts);
        inner.kind = "family";
        inner.label = r.label;
        inner.params = r.params;
        return inner;
    } catch (const std::exception& e) {
        return error_report(std::move(r), e.what(), t0);
    }
}

VerificationReport verify_binomial(const Int& p, int j, int k, int m, int order,
                                   bool with_modulus) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "binomial";
    r.label = "f" + std::to_string(m) + "^(p^j*k) vs f(p*m)^(p^(j-1)*k)";
    r.params = {{"p", p.str()}, {"j", j}, {"k", k}, {"m", m}};
    r.order = order;
    try {
        if (j < 1 || k < 1 || m < 1)
            throw std::invalid_argument("need j, k, m >= 1");
        if (!is_prime(p))
            throw std::invalid_argument("p = " + p.str() + " is not prime");
        const Int pj = pow(p, j);
        const Int e_lhs = pj * k;
        const Int e_rhs = pow(p, j - 1) * k;
        if (e_lhs > 1000000)
            throw std::invalid_argument("exponent " + e_lhs.str() + " too large");
        std::optional<Int> modulus;
        if (with_modulus) {
            modulus = pj;
            r.modulus = pj;
        }
        EtaQuotient lhs{1, 0, {{m, static_cast<int>(e_lhs)}}};
        EtaQuotient rhs{1, 0, {{static_cast<int>(p) * m, static_cast<int>(e_rhs)}}};
        const Series ls = eta_quotient(lhs, order, modulus);
        const Series rs = eta_quotient(rhs, order, modulus);
        if (const auto diff = first_difference(ls, rs)) {
            r.outcome = Outcome::Fail;
            r.witness = diff->index;
            r.witness_value = diff->lhs - diff->rhs;
            r.message = "lhs=" + diff->lhs.str() + " rhs=" + diff->rhs.str();
        } else {
            r.outcome = Outcome::Pass;
        }
        r.elapsed_ms = ms_since(t0);
        return r;
    } catch (const std::exception& e) {
        return error_report(std::move(r), e.what(), t0);
    }
}

VerificationReport verify_identity(const IdentityClaim& c, int order) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "identity";
    r.label = c.label.empty() ? print(c.lhs) + " = " + print(c.rhs) : c.label;
    r.order = order;
    r.modulus = c.modulus;
    try {
        Series lhs = [&] {
            try {
                return evaluate(c.lhs, order, c.modulus);
            } catch (const std::exception& e) {
                throw std::runtime_error(std::string("lhs: ") + e.what());
            }
        }();
        Series rhs = [&] {
            try {
                return evaluate(c.rhs, order, c.modulus);
            } catch (const std::exception& e) {
                throw std::runtime_error(std::string("rhs: ") + e.what());
            }
        }();
        if (const auto diff = first_difference(lhs, rhs)) {
            r.outcome = Outcome::Fail;
            r.witness = diff->index;
            r.witness_value = diff->lhs - diff->rhs;
            r.message = "lhs=" + diff->lhs.str() + " rhs=" + diff->rhs.str();
        } else {
            r.outcome = Outcome::Pass;
        }
        r.elapsed_ms = ms_since(t0);
        return r;
    } catch (const std::exception& e) {
        return error_report(std::move(r), e.what(), t0);
    }
}

VerificationReport dissect_and_match(const EtaExpr& gf, int m, int r_class,
                                     const EtaExpr& claimed, int order,
                                     const std::optional<Int>& modulus) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.kind = "dissection";
    r.label = print(gf) + " [" + std::to_string(m) + "n+" +
              std::to_string(r_class) + "]";
    r.params = {{"m", m}, {"r", r_class}, {"claimed", print(claimed)}};
    r.order = order;
    r.modulus = modulus;
    try {
        if (order < 1) throw std::invalid_argument("order must be >= 1");
        Series full = evaluate(gf, m * order);
        Series comp = component(full, m, r_class);
        Series want = evaluate(claimed, order);
        if (modulus) {
            comp = reduce_mod(comp, *modulus);
            want = reduce_mod(want, *modulus);
        }
        if (const auto diff = first_difference(comp, want)) {
            r.outcome = Outcome::Fail;
            r.witness = diff->index;
            r.witness_value = diff->lhs - diff->rhs;
            r.message = "component=" + diff->lhs.str() + " claimed=" + diff->rhs.str();
        } else {
            r.outcome = Outcome::Pass;
        }
        r.elapsed_ms = ms_since(t0);
        return r;
    } catch (const std::exception& e) {
        return error_report(std::move(r), e.what(), t0);
    }
}

}  // namespace qcw
