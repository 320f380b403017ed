#pragma once

#include <stdexcept>
#include <string>

namespace cupcap {

enum class ErrorCode {
    MalformedInput,
    DuplicateX,
    Collinear,
    ShearFailed,
    ExhaustedAttempts,
    InvalidArgument,
    NotFree,
    NotPeeled,
    Falsified,
    VerificationFailed,
    SearchSpaceTooLarge,
};

inline const char* to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DuplicateX: return "DuplicateX";
    case ErrorCode::Collinear: return "Collinear";
    case ErrorCode::ShearFailed: return "ShearFailed";
    case ErrorCode::ExhaustedAttempts: return "ExhaustedAttempts";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::NotPeeled: return "NotPeeled";
    case ErrorCode::Falsified: return "Falsified";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace cupcap
