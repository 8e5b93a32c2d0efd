#include "qcw/report.hpp"

#include <sstream>

namespace qcw {

namespace {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::Error: return "error";
    }
    return "?";
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["label"] = r.label;
    j["kind"] = r.kind;
    j["params"] = r.params;
    j["order"] = r.order;
    j["modulus"] = r.modulus ? nlohmann::json(r.modulus->str()) : nlohmann::json();
    j["outcome"] = outcome_name(r.outcome);
    j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json();
    j["witness_value"] =
        r.witness_value ? nlohmann::json(r.witness_value->str()) : nlohmann::json();
    if (!r.message.empty()) j["message"] = r.message;
    j["elapsed_ms"] = r.elapsed_ms;
    j["tool_version"] = kToolVersion;
    return j;
}

std::string to_plain_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "[" << outcome_name(r.outcome) << "] " << r.kind;
    if (!r.label.empty()) out << " " << r.label;
    out << " (order " << r.order;
    if (r.modulus) out << ", mod " << r.modulus->str();
    out << ")";
    if (r.witness) {
        out << " witness n=" << *r.witness;
        if (r.witness_value) out << " value=" << r.witness_value->str();
    }
    if (!r.message.empty()) out << " -- " << r.message;
    return out.str();
}

}  // namespace qcw
