#pragma once

#include <stdexcept>
#include <string>

namespace beacon {

enum class ErrorCode {
    NotOrthogonal,
    NotSimple,
    GeneralPositionViolation,
    TooFewVertices,
    PerturbationFailure,
    EmptyInput,
    GenerationFailure,
    NotAdjacent,
    InternalInconsistency,
    NotShortNeighbor,
    NotPaired,
    PointOutsidePolygon,
    NoCaseMatched,
    NotPairedCut,
    DepthTooLarge,
    SpecInvariantViolated,
    SectionOutOfRange,
    CoordinateTooLarge,
    ParseError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace beacon
