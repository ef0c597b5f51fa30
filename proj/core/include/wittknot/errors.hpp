#pragma once

#include <stdexcept>
#include <string>

namespace wittknot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// exact_arith
struct ZeroInput : Error { using Error::Error; };
struct NotPrime : Error { using Error::Error; };
struct NotCoprime : Error { using Error::Error; };

// quad_forms
struct NotSymmetric : Error { using Error::Error; };

// pretzel
struct NotAKnot : Error { using Error::Error; };
struct TooShort : Error { using Error::Error; };
struct ZeroTwist : Error { using Error::Error; };
struct EvenStabilizer : Error { using Error::Error; };

// knots
struct NotAdmissible : Error { using Error::Error; };
struct OddSize : Error { using Error::Error; };
struct NearSingular : Error { using Error::Error; };
struct NotOnCircle : Error { using Error::Error; };

// cli / file handling
struct BadInput : Error { using Error::Error; };

}  // namespace wittknot
