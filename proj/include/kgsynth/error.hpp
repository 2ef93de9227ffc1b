#pragma once

#include <stdexcept>
#include <string>

namespace kgsynth {

enum class ErrorKind {
    InvalidEntity,
    NotFound,
    EmptyInput,
    InvalidInput,
    InvalidQuery,
    ParseFailure,
    Transport,
    Service,
    CorruptStore,
    VersionMismatch,
    Decomposition,
    Generation,
    DocumentFailed,
    FrozenGraph,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised when a model reply cannot be parsed even after the repair pass.
/// Carries the raw model output for the extraction error log.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::string raw_output)
        : Error(ErrorKind::ParseFailure, message), raw_output_(std::move(raw_output)) {}

    const std::string& raw_output() const { return raw_output_; }

private:
    std::string raw_output_;
};

} // namespace kgsynth
