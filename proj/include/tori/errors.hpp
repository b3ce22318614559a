#ifndef TORI_ERRORS_HPP
#define TORI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tori {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// numberfield
struct ReduciblePolynomial : Error { using Error::Error; };
struct AmbiguousRoot : Error { using Error::Error; };
struct NoRootNearHint : Error { using Error::Error; };
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };

// exact-linalg
struct SizeGuardExceeded : Error { using Error::Error; };

// torus-model
struct DegenerateImaginaryPart : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct SingularRightBlock : Error { using Error::Error; };

// analysis
struct WrongDimension : Error { using Error::Error; };
struct InvalidDescriptor : Error { using Error::Error; };

// cli
struct ParseError : Error { using Error::Error; };
struct GenerationFailed : Error { using Error::Error; };

} // namespace tori

#endif
