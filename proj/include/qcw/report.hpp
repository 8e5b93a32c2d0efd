#ifndef QCW_REPORT_HPP
#define QCW_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "qcw/series.hpp"

namespace qcw {

inline constexpr const char* kToolVersion = "qcw 0.1.0";

enum class Outcome { Pass, Fail, Error };

/// Machine-readable result of one verification. Outcomes are always
/// "verified to the scanned range", never a proof. A fail carries the
/// smallest witness in the scanned range.
struct VerificationReport {
    std::string label;
    std::string kind;
    nlohmann::json params = nlohmann::json::object();
    long long order = 0;
    std::optional<Int> modulus;
    Outcome outcome = Outcome::Error;
    std::optional<long long> witness;
    std::optional<Int> witness_value;
    std::string message;  // diagnostics for Error, detail for Fail
    double elapsed_ms = 0.0;

    bool passed() const { return outcome == Outcome::Pass; }
};

nlohmann::json to_json(const VerificationReport& r);
std::string to_plain_text(const VerificationReport& r);

}  // namespace qcw

#endif
