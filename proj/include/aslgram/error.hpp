#pragma once

#include <stdexcept>
#include <string>

namespace aslgram {

// Failure categories surfaced by the library. The CLI maps any of these to
// exit code 1; tests match on the kind rather than the message text.
enum class ErrorKind {
    ShortVideo,
    DuplicateWindow,
    OutOfRange,
    EmptyVotes,
    ParseError,
    OverlapError,
    UnknownLabel,
    ConfidenceRange,
    NoEligibleInstance,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace aslgram
