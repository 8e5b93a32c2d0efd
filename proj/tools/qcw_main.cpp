// qcw: workbench for exact q-series expansion and partition-congruence
// verification. Exit codes: 0 all checks passed, 1 some check failed,
// 2 usage or evaluation error.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcw/cache.hpp"
#include "qcw/expr.hpp"
#include "qcw/oracle.hpp"
#include "qcw/report.hpp"
#include "qcw/verifier.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct CommonOpts {
    bool json = false;
    std::string cache_dir;
    bool no_cache = false;
    long long max_order = 20000;
};

std::optional<qcw::Int> parse_mod_flag(const std::string& mod) {
    if (mod.empty()) return std::nullopt;
    qcw::Int m(mod);
    if (m < 2) throw CLI::ValidationError("--mod must be >= 2");
    return m;
}

qcw::SeriesCache open_cache(const CommonOpts& opts) {
    return qcw::SeriesCache(opts.cache_dir.empty()
                                ? qcw::SeriesCache::default_dir()
                                : std::filesystem::path(opts.cache_dir));
}

int emit_reports(const std::vector<qcw::VerificationReport>& reports, bool json) {
    bool any_fail = false, any_error = false;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(qcw::to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << qcw::to_plain_text(r) << "\n";
    }
    for (const auto& r : reports) {
        any_fail |= r.outcome == qcw::Outcome::Fail;
        any_error |= r.outcome == qcw::Outcome::Error;
    }
    if (any_error) return kExitError;
    return any_fail ? kExitFail : kExitPass;
}

qcw::Series expand_with_cache(const std::string& expr_text, int order,
                              const std::optional<qcw::Int>& modulus,
                              const CommonOpts& opts) {
    const qcw::EtaExpr expr = qcw::parse_expr(expr_text);
    const std::string canonical = qcw::print(expr);
    if (!opts.no_cache) {
        const auto cache = open_cache(opts);
        if (auto hit = cache.get(canonical, modulus, order)) return *hit;
        qcw::Series s = qcw::evaluate(expr, order, modulus);
        cache.put(canonical, modulus, s);
        return s;
    }
    return qcw::evaluate(expr, order, modulus);
}

qcw::Source make_source(const std::string& series_name, const std::string& expr) {
    if (!series_name.empty()) return series_name;
    return qcw::parse_expr(expr);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact q-series workbench: eta-quotient expansion, identity "
                 "checking and partition congruence verification"};
    app.require_subcommand(1);

    CommonOpts common;

    // expand
    auto* expand = app.add_subcommand("expand", "Expand an eta expression");
    std::string expand_expr;
    int expand_order = 20;
    std::string expand_mod;
    expand->add_option("expr", expand_expr, "Expression, e.g. \"f4*f6^2/(f2^2*f3*f12)\"")
        ->required();
    expand->add_option("--order", expand_order, "Truncation order");
    expand->add_option("--mod", expand_mod, "Reduce coefficients mod M");
    expand->add_flag("--json", common.json, "JSON output");
    expand->add_option("--cache-dir", common.cache_dir, "Cache directory");
    expand->add_flag("--no-cache", common.no_cache, "Bypass the on-disk cache");

    // verify-identity
    auto* verify = app.add_subcommand(
        "verify-identity", "Check identities from a fixture file or inline");
    std::vector<std::string> fixture_paths;
    std::string inline_identity;
    int verify_order = 500;
    verify->add_option("fixtures", fixture_paths, "Fixture files");
    verify->add_option("--inline", inline_identity, "Single identity text");
    verify->add_option("--order", verify_order, "Comparison order");
    verify->add_flag("--json", common.json, "JSON output");

    // congruence
    auto* cong = app.add_subcommand("congruence",
                                    "Check a(An+B) == 0 (mod M) on a scan range");
    std::string cong_series, cong_expr, cong_mod = "2";
    long long cong_A = 1, cong_B = 0, cong_limit = 100;
    cong->add_option("--series", cong_series, "Builtin counter name");
    cong->add_option("--expr", cong_expr, "Eta expression source");
    cong->add_option("--A", cong_A)->required();
    cong->add_option("--B", cong_B)->required();
    cong->add_option("--M", cong_mod)->required();
    cong->add_option("--limit", cong_limit, "Scan n = 0..limit");
    cong->add_option("--max-order", common.max_order, "Expansion-order budget");
    cong->add_flag("--json", common.json, "JSON output");

    // internal
    auto* internal = app.add_subcommand(
        "internal", "Check a(An+B) == a(Cn+D) (mod M) on a scan range");
    std::string int_series, int_expr, int_mod = "3";
    long long int_A = 1, int_B = 0, int_C = 1, int_D = 0, int_limit = 100;
    internal->add_option("--series", int_series, "Builtin counter name");
    internal->add_option("--expr", int_expr, "Eta expression source");
    internal->add_option("--A", int_A)->required();
    internal->add_option("--B", int_B)->required();
    internal->add_option("--C", int_C)->required();
    internal->add_option("--D", int_D)->required();
    internal->add_option("--M", int_mod)->required();
    internal->add_option("--limit", int_limit, "Scan n = 0..limit");
    internal->add_option("--max-order", common.max_order, "Expansion-order budget");
    internal->add_flag("--json", common.json, "JSON output");

    // family
    auto* family = app.add_subcommand(
        "family", "Check one member of the mod-3 infinite families");
    std::string family_name = "pond";
    int family_alpha = 1;
    long long family_limit = 30;
    family->add_option("--family", family_name, "pond or pend")
        ->check(CLI::IsMember({"pond", "pend"}));
    family->add_option("--alpha", family_alpha, "Family index alpha >= 1");
    family->add_option("--limit", family_limit, "Scan n = 0..limit");
    family->add_option("--max-order", common.max_order, "Expansion-order budget");
    family->add_flag("--json", common.json, "JSON output");

    // dissect
    auto* dissect = app.add_subcommand(
        "dissect", "Compare an m-dissection component with a claimed expression");
    std::string dis_gf, dis_claimed, dis_mod;
    int dis_m = 3, dis_r = 0, dis_order = 150;
    dissect->add_option("--gf", dis_gf, "Generating function expression")->required();
    dissect->add_option("--m", dis_m, "Dissection modulus");
    dissect->add_option("--r", dis_r, "Residue class");
    dissect->add_option("--claimed", dis_claimed, "Claimed component (reindexed)")
        ->required();
    dissect->add_option("--order", dis_order, "Comparison order");
    dissect->add_option("--mod", dis_mod, "Compare mod M");
    dissect->add_flag("--json", common.json, "JSON output");

    // oracle
    auto* oracle = app.add_subcommand(
        "oracle", "Combinatorial partition counts (dynamic program)");
    std::string oracle_builtin, oracle_spec;
    int oracle_order = 20;
    bool oracle_enumerate = false;
    oracle->add_option("--builtin", oracle_builtin, "Builtin spec name");
    oracle->add_option("--spec", oracle_spec,
                       "Constraint syntax, e.g. \"m=2;1:not-one\"");
    oracle->add_option("--order", oracle_order, "Print counts for n < order");
    oracle->add_flag("--enumerate", oracle_enumerate,
                     "Use the exhaustive enumerator (n <= 40)");
    oracle->add_flag("--json", common.json, "JSON output");

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "Cache maintenance");
    auto* cache_stats = cache_cmd->add_subcommand("stats", "Show cache statistics");
    auto* cache_clear = cache_cmd->add_subcommand("clear", "Remove all entries");
    cache_cmd->add_option("--cache-dir", common.cache_dir, "Cache directory");
    cache_cmd->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*expand) {
            const auto modulus = parse_mod_flag(expand_mod);
            const qcw::Series s =
                expand_with_cache(expand_expr, expand_order, modulus, common);
            if (common.json) {
                nlohmann::json j;
                j["expr"] = qcw::print(qcw::parse_expr(expand_expr));
                j["order"] = s.order();
                j["modulus"] = modulus ? nlohmann::json(modulus->str())
                                       : nlohmann::json();
                auto& coeffs = j["coeffs"] = nlohmann::json::array();
                for (const auto& c : s.coeffs()) coeffs.push_back(c.str());
                std::cout << j.dump(2) << "\n";
            } else {
                for (int n = 0; n < s.order(); ++n)
                    std::cout << n << ": " << s[n].str() << "\n";
            }
            return kExitPass;
        }

        if (*verify) {
            std::vector<qcw::IdentityClaim> claims;
            for (const auto& path : fixture_paths) {
                auto loaded = qcw::load_fixture_file(path);
                claims.insert(claims.end(), loaded.begin(), loaded.end());
            }
            if (!inline_identity.empty())
                claims.push_back(qcw::parse_identity(inline_identity));
            if (claims.empty())
                throw std::runtime_error("no identities given (file or --inline)");
            std::vector<qcw::VerificationReport> reports;
            for (const auto& c : claims)
                reports.push_back(qcw::verify_identity(c, verify_order));
            return emit_reports(reports, common.json);
        }

        qcw::VerifierOptions vopts;
        vopts.max_order = common.max_order;

        if (*cong) {
            if (cong_series.empty() == cong_expr.empty())
                throw std::runtime_error("give exactly one of --series / --expr");
            qcw::CongruenceClaim c{make_source(cong_series, cong_expr), cong_A,
                                   cong_B, qcw::Int(cong_mod)};
            return emit_reports({qcw::verify_congruence(c, cong_limit, vopts)},
                                common.json);
        }

        if (*internal) {
            if (int_series.empty() == int_expr.empty())
                throw std::runtime_error("give exactly one of --series / --expr");
            qcw::InternalClaim c{make_source(int_series, int_expr), int_A, int_B,
                                 int_C, int_D, qcw::Int(int_mod)};
            return emit_reports({qcw::verify_internal(c, int_limit, vopts)},
                                common.json);
        }

        if (*family) {
            qcw::FamilyClaim f{family_name == "pond" ? qcw::Family::Pond
                                                     : qcw::Family::Pend,
                               family_alpha};
            return emit_reports({qcw::verify_family(f, family_limit, vopts)},
                                common.json);
        }

        if (*dissect) {
            const auto modulus = parse_mod_flag(dis_mod);
            const auto report = qcw::dissect_and_match(
                qcw::parse_expr(dis_gf), dis_m, dis_r, qcw::parse_expr(dis_claimed),
                dis_order, modulus);
            return emit_reports({report}, common.json);
        }

        if (*oracle) {
            if (oracle_builtin.empty() == oracle_spec.empty())
                throw std::runtime_error("give exactly one of --builtin / --spec");
            const qcw::ConstraintSpec spec = oracle_builtin.empty()
                                                 ? qcw::parse_constraint(oracle_spec)
                                                 : qcw::builtin_spec(oracle_builtin);
            std::vector<qcw::Int> counts;
            if (oracle_enumerate) {
                for (int n = 0; n < oracle_order; ++n)
                    counts.push_back(qcw::enumerate_count(spec, n));
            } else {
                const qcw::Series s = qcw::counts_series(spec, oracle_order);
                counts.assign(s.coeffs().begin(), s.coeffs().end());
            }
            if (common.json) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& c : counts) j.push_back(c.str());
                std::cout << j.dump() << "\n";
            } else {
                for (size_t n = 0; n < counts.size(); ++n)
                    std::cout << n << ": " << counts[n].str() << "\n";
            }
            return kExitPass;
        }

        if (*cache_cmd) {
            const auto cache = open_cache(common);
            if (*cache_stats) {
                const auto s = cache.stats();
                std::cout << "dir: " << cache.dir().string() << "\n"
                          << "entries: " << s.entries << "\n"
                          << "bytes: " << s.bytes << "\n"
                          << "quarantined: " << s.quarantined << "\n";
            } else if (*cache_clear) {
                cache.clear();
                std::cout << "cache cleared\n";
            }
            return kExitPass;
        }
    } catch (const std::exception& e) {
        std::cerr << "qcw: error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
