#pragma once

#include <stdexcept>
#include <string>

namespace mirrorstokes {

/// Base class for all expected failure modes of the pipeline.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed expression text; carries the byte offset of the offending token.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

/// The chosen direction frame violates an admissibility requirement.
struct InadmissibleDirection : Error {
    using Error::Error;
};

// -- root finding / tracking --
struct RootFindingDiverged : Error {
    using Error::Error;
};
struct SheetCollision : Error {
    using Error::Error;
};
struct CorrectorDiverged : Error {
    using Error::Error;
};
struct AmbiguousLimit : Error {
    using Error::Error;
};
struct DegenerateBasePoint : Error {
    using Error::Error;
};

// -- degenerate inputs --
struct UnsupportedDegeneracy : Error {
    using Error::Error;
};
struct InconsistentTopology : Error {
    using Error::Error;
};
struct UnsupportedWeights : Error {
    using Error::Error;
};

// -- exact linear algebra --
struct SingularSystem : Error {
    using Error::Error;
};
struct ReductionFailure : Error {
    using Error::Error;
};
struct NoCyclicVector : Error {
    using Error::Error;
};
struct RankMismatch : Error {
    using Error::Error;
};
struct NotUnipotent : Error {
    using Error::Error;
};

}  // namespace mirrorstokes
