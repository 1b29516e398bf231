// Exception types thrown by the ffcalc library. Every library error derives
// from ffcalc::Error so callers can catch domain failures in one place and
// keep them distinct from programming errors (std::logic_error and friends).
#pragma once

#include <stdexcept>
#include <string>

namespace ffcalc {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Scalar arithmetic.
struct InvalidModulus : Error { using Error::Error; };
struct ModulusMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ZeroHasNoOrder : Error { using Error::Error; };
struct Undefined : Error { using Error::Error; };

// Gaussian layer.
struct NotAField : Error { using Error::Error; };

// Interpolation and tabulated functions.
struct DuplicateNode : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct DomainMismatch : Error { using Error::Error; };
struct NotBijective : Error { using Error::Error; };

// Polynomial calculus.
struct WrongRing : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// Special functions.
struct CompositeModulusForTrig : Error { using Error::Error; };
struct InvalidBase : Error { using Error::Error; };

// Transforms.
struct WrongOrder : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };

}  // namespace ffcalc
