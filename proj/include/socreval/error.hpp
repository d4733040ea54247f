#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace socreval {

enum class ErrorCode {
    // dataset
    MalformedRecord,
    CountMismatch,
    // prompting
    ParadigmMismatch,
    RepresentationMismatch,
    UnknownDataset,
    UnknownStrategy,
    // judge
    BackendUnavailable,
    MissingTranscript,
    AuthFailure,
    // parsing
    NoObjectFound,
    MissingQuality,
    QualityOutOfRange,
    MalformedObject,
    // metrics
    TooShort,
    DegenerateX,
    DegenerateSeries,
    ZeroVariance,
    ConstantVector,
    OutOfRange,
    UnknownClass,
    LengthMismatch,
    EmptySteps,
    NegativeTokens,
    // cli
    ConfigError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Value-or-error carrier for per-item outcomes (batch submission, per-example
/// verdicts). Hard failures elsewhere throw Error directly.
template <typename T>
class Result {
public:
    Result(T value) : store_(std::move(value)) {}
    Result(Error error) : store_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(store_); }
    const T& value() const { return std::get<T>(store_); }
    T& value() { return std::get<T>(store_); }
    const Error& error() const { return std::get<Error>(store_); }

private:
    std::variant<T, Error> store_;
};

}  // namespace socreval
