#ifndef SIGNEDFLIPS_ERRORS_HPP
#define SIGNEDFLIPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sdf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// core
struct DiagonalNotPresent : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

struct InvalidFlipAt : Error {
    int index;
    InvalidFlipAt(int i, const std::string& what)
        : Error("flip " + std::to_string(i) + ": " + what), index(i) {}
};

// flipgraph
struct NotAProperColoring : Error { using Error::Error; };
struct InvalidSignedSequence : Error { using Error::Error; };
// fires only if rules R1 and R2 ever disagree on a triangle's sign
struct RuleConsistencyViolation : Error { using Error::Error; };

// signing
struct NotProper : Error { using Error::Error; };
struct NotStrict : Error { using Error::Error; };
struct TaitViolation : Error { using Error::Error; };

struct FlipBlockedAt : Error {
    int index;
    FlipBlockedAt(int i, const std::string& what)
        : Error("flip " + std::to_string(i) + ": " + what), index(i) {}
};

// filler
struct DegenerateCycle : Error { using Error::Error; };
struct NotASphere : Error { using Error::Error; };
struct NonCycleLink : Error { using Error::Error; };
struct NoAdmissibleOrder : Error { using Error::Error; };

// io
struct ParseError : Error { using Error::Error; };

}  // namespace sdf

#endif
