#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framecast {

enum class ErrorKind {
    AllZeroInput,
    NoConvergence,
    NotPositiveDefinite,
    NotHermitian,
    SpanMismatch,
    NotAFrame,
    ShapeMismatch,
    PartitionInvalid,
    DirectSumViolated,
    BadInterval,
    InadmissibleSpec,
    DuplicateLambda,
    DimensionMismatch,
    IllConditioned,
    InvalidArgument,
    ParseError,
    IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every library failure is a FrameError; kind() drives CLI exit codes.
class FrameError : public std::runtime_error {
public:
    FrameError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace framecast
