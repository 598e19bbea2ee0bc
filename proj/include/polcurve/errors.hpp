#ifndef POLCURVE_ERRORS_HPP
#define POLCURVE_ERRORS_HPP

#include <stdexcept>

namespace polcurve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidCurve : Error { using Error::Error; };
struct InvalidSubcurve : Error { using Error::Error; };
struct GenusTooSmall : Error { using Error::Error; };
struct NotConnected : Error { using Error::Error; };
struct VertexMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct NoCusp : Error { using Error::Error; };
struct NotQuasiWpStable : Error { using Error::Error; };
struct WrongInputClass : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct NonTermination : Error { using Error::Error; };
struct NotComparable : Error { using Error::Error; };
struct Incomparable : Error { using Error::Error; };
struct NotProperlyBalanced : Error { using Error::Error; };
struct NotBalanced : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace polcurve

#endif
