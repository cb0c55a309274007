#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sfh {

enum class ErrorCode {
    NOT_BALANCED,
    NOT_NICE,
    NOT_ADMISSIBLE,
    NO_CONTACT_GENERATOR,
    DSQUARED_NONZERO,
    BAD_DOMAIN,
    ARRANGEMENT_DEGENERATE,
    UNKNOWN_EXAMPLE,
    ORACLE_UNAVAILABLE,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NOT_BALANCED: return "NOT_BALANCED";
        case ErrorCode::NOT_NICE: return "NOT_NICE";
        case ErrorCode::NOT_ADMISSIBLE: return "NOT_ADMISSIBLE";
        case ErrorCode::NO_CONTACT_GENERATOR: return "NO_CONTACT_GENERATOR";
        case ErrorCode::DSQUARED_NONZERO: return "DSQUARED_NONZERO";
        case ErrorCode::BAD_DOMAIN: return "BAD_DOMAIN";
        case ErrorCode::ARRANGEMENT_DEGENERATE: return "ARRANGEMENT_DEGENERATE";
        case ErrorCode::UNKNOWN_EXAMPLE: return "UNKNOWN_EXAMPLE";
        case ErrorCode::ORACLE_UNAVAILABLE: return "ORACLE_UNAVAILABLE";
    }
    return "?";
}

// Hard failure of an engine operation. `offenders` carries the entity ids the
// message refers to (non-nice region ids, for instance) so front ends can
// print them deterministically.
class ComputeError : public std::runtime_error {
public:
    ComputeError(ErrorCode code, std::string message, std::vector<std::string> offenders = {})
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code), offenders_(std::move(offenders)) {}

    ErrorCode code() const { return code_; }
    const std::vector<std::string>& offenders() const { return offenders_; }

private:
    ErrorCode code_;
    std::vector<std::string> offenders_;
};

} // namespace sfh
