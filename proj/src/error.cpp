#include "framecast/error.hpp"

namespace framecast {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::AllZeroInput: return "AllZeroInput";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::SpanMismatch: return "SpanMismatch";
    case ErrorKind::NotAFrame: return "NotAFrame";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::PartitionInvalid: return "PartitionInvalid";
    case ErrorKind::DirectSumViolated: return "DirectSumViolated";
    case ErrorKind::BadInterval: return "BadInterval";
    case ErrorKind::InadmissibleSpec: return "InadmissibleSpec";
    case ErrorKind::DuplicateLambda: return "DuplicateLambda";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::IllConditioned: return "IllConditioned";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace framecast
