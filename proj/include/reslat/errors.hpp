#pragma once

#include <stdexcept>
#include <string>

namespace reslat {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LatticeAxiomViolation : Error { using Error::Error; };
struct MonoidAxiomViolation : Error { using Error::Error; };
struct ResiduationViolation : Error { using Error::Error; };
struct NoResidual : Error { using Error::Error; };
struct NameError : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct NotComplemented : Error { using Error::Error; };
struct NotGlivenko : Error { using Error::Error; };
struct NotProper : Error { using Error::Error; };
struct RadicalMismatch : Error { using Error::Error; };
struct CenterNotPreserved : Error { using Error::Error; };
struct NotMorphism : Error { using Error::Error; };
struct TrivialAlgebra : Error { using Error::Error; };
struct UnknownKey : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

} // namespace reslat
