#pragma once

#include <stdexcept>
#include <string>

namespace ratiolab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleProximity : Error { using Error::Error; };
struct AccuracyLoss : Error { using Error::Error; };
struct BranchAmbiguity : Error { using Error::Error; };
struct PolePoint : Error { using Error::Error; };
struct MissedZero : Error { using Error::Error; };
struct NotFundamental : Error { using Error::Error; };
struct BadTwist : Error { using Error::Error; };
struct Overflow : Error { using Error::Error; };
struct DegenerateQR : Error { using Error::Error; };
struct NearSingularSample : Error { using Error::Error; };
struct CoincidentShifts : Error { using Error::Error; };
struct QuadratureNotConverged : Error { using Error::Error; };
struct PoleOnContour : Error { using Error::Error; };
struct TailNotConverged : Error { using Error::Error; };
struct MissingCoefficients : Error { using Error::Error; };
struct DegenerateShifts : Error { using Error::Error; };
struct RTooSmall : Error { using Error::Error; };
struct NearZeroDenominator : Error { using Error::Error; };
struct CutoffNotCertified : Error { using Error::Error; };
struct BadConfig : Error { using Error::Error; };

}  // namespace ratiolab
