#ifndef QCW_EXPR_HPP
#define QCW_EXPR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcw/eta.hpp"
#include "qcw/series.hpp"

namespace qcw {

/// Sum of eta-quotient terms. Canonical form: no zero-coefficient terms,
/// terms ordered by (qpow, factor profile, coeff).
struct EtaExpr {
    std::vector<EtaQuotient> terms;

    bool operator==(const EtaExpr&) const = default;
};

struct IdentityClaim {
    EtaExpr lhs;
    EtaExpr rhs;
    std::optional<Int> modulus;
    std::string label;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Grammar:
///   identity := expr "=" expr [ "(mod" integer ")" ]
///   expr     := [ "-" ] term { ("+" | "-") term }
///   term     := atom { "*" atom } [ "/" denom ]
///   denom    := atom | "(" atom { "*" atom } ")"
///   atom     := integer | "q" [ "^" integer ] | "f" integer [ "^" integer ]
EtaExpr parse_expr(const std::string& text);
IdentityClaim parse_identity(const std::string& text);

/// Canonical serialization; parse_expr(print(e)) == canonicalize(e).
std::string print(const EtaExpr& e);
std::string print(const EtaQuotient& t);

EtaExpr canonicalize(EtaExpr e);

Series evaluate(const EtaExpr& e, int order,
                const std::optional<Int>& modulus = std::nullopt);

/// One identity per line; "#" starts a comment, blank lines are skipped,
/// a line may begin with "[label]".
std::vector<IdentityClaim> load_fixture_file(const std::string& path);
std::vector<IdentityClaim> parse_fixture_text(const std::string& text);

}  // namespace qcw

#endif
