#pragma once

#include <stdexcept>
#include <string>

namespace pkc {

enum class Errc {
    EmptyInput,
    InvalidArgument,
    RankOutOfRange,
    NotFound,
    InternalInvariantViolation,
    DegenerateSpan,
    InstanceTooLarge,
    InvalidEpsilon,
    ParseError,
};

const char* to_string(Errc code) noexcept;

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace pkc
