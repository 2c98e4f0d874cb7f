#pragma once

#include <stdexcept>
#include <string>

namespace effamily {

enum class ErrorCode {
    InvalidExponents,
    InvalidDelta,
    InvalidParams,
    SeqInvalid,
    BelowResolution,
    OutOfDomain,
    GridViolation,
    NotWellDefined,
    SearchCapExceeded,
    DepthExceeded,
    NotDistinct,
    LevelUnavailable,
    ParseError,
    ArchiveInvalid,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

} // namespace effamily
