#include "rankdep/error.hpp"

namespace rankdep {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NonFiniteValue: return "NonFiniteValue";
        case ErrorCode::SampleTooSmall: return "SampleTooSmall";
        case ErrorCode::TiesPresent: return "TiesPresent";
        case ErrorCode::SampleSizeMismatch: return "SampleSizeMismatch";
        case ErrorCode::InvalidPValue: return "InvalidPValue";
        case ErrorCode::InvalidLevel: return "InvalidLevel";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::NTooLarge: return "NTooLarge";
        case ErrorCode::NTooSmallForMoment: return "NTooSmallForMoment";
        case ErrorCode::EvenN: return "EvenN";
        case ErrorCode::InvalidShape: return "InvalidShape";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace rankdep
