#ifndef QCW_VERIFIER_HPP
#define QCW_VERIFIER_HPP

#include <string>
#include <utility>
#include <variant>

#include "qcw/expr.hpp"
#include "qcw/oracle.hpp"
#include "qcw/report.hpp"
#include "qcw/series.hpp"

namespace qcw {

/// Coefficient source: a builtin partition counter by name, or an explicit
/// eta-quotient expression. Builtin sources are expanded through their
/// generating function and cross-checked against the combinatorial oracle
/// on a prefix.
using Source = std::variant<std::string, EtaExpr>;

/// a(An+B) == 0 (mod M) for all n in the scanned range.
struct CongruenceClaim {
    Source source;
    long long A = 1;
    long long B = 0;
    Int M = 2;
};

/// a(An+B) == a(Cn+D) (mod M) for all n in the scanned range.
struct InternalClaim {
    Source source;
    long long A = 1, B = 0, C = 1, D = 0;
    Int M = 2;
};

enum class Family { Pond, Pend };

struct FamilyClaim {
    Family family = Family::Pond;
    int alpha = 1;
};

struct VerifierOptions {
    long long max_order = 20000;      // expansion-order budget
    long long oracle_check_limit = 200;  // oracle cross-check cap for builtins
};

/// Generating function of a builtin counter as an eta expression.
EtaExpr builtin_generating_function(const std::string& name);

VerificationReport verify_congruence(const CongruenceClaim& c, long long n_limit,
                                     const VerifierOptions& opts = {});

VerificationReport verify_internal(const InternalClaim& c, long long n_limit,
                                   const VerifierOptions& opts = {});

/// Progression (A, B) = (3^{2a+1}, (23*3^{2a}+1)/8) for the pond family and
/// (3^{2a+1}, (17*3^{2a}-1)/8) for the pend family; exact divisibility of B
/// is asserted, as is integrality of the induction-step offsets.
std::pair<Int, Int> family_progression(const FamilyClaim& f);

VerificationReport verify_family(const FamilyClaim& f, long long n_limit,
                                 const VerifierOptions& opts = {});

/// f_m^{p^j k} == f_{pm}^{p^{j-1} k} (mod p^j). p must be prime.
/// with_modulus=false compares the two sides exactly instead.
VerificationReport verify_binomial(const Int& p, int j, int k, int m, int order,
                                   bool with_modulus = true);

VerificationReport verify_identity(const IdentityClaim& c, int order);

/// Expands gf to order m*N, extracts the r-th m-dissection component and
/// compares it with `claimed`, which is written in the reindexed variable
/// (q^m -> q). Both sides are reduced when a modulus is given.
VerificationReport dissect_and_match(const EtaExpr& gf, int m, int r,
                                     const EtaExpr& claimed, int order,
                                     const std::optional<Int>& modulus = std::nullopt);

bool is_prime(const Int& p);

}  // namespace qcw

#endif
