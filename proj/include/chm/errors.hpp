#pragma once

#include <stdexcept>
#include <string>

namespace chm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// series kernel
struct NearZeroConstantTerm : Error { using Error::Error; };
struct NonzeroInnerConstant : Error { using Error::Error; };
struct OutsideEvaluationDisk : Error { using Error::Error; };
struct AliasingTooLarge : Error { using Error::Error; };

// mappings
struct NotUnimodular : Error { using Error::Error; };
struct VanishingDerivative : Error { using Error::Error; };
struct DenominatorVanishes : Error { using Error::Error; };

// transforms
struct MembershipNotCertified : Error { using Error::Error; };
struct IllConditioned : Error { using Error::Error; };
struct ACapExceeded : Error { using Error::Error; };

// analysis
struct RadiusOutOfRange : Error { using Error::Error; };
struct NotHerglotz : Error { using Error::Error; };
struct DegenerateAlpha : Error { using Error::Error; };
struct DegenerateCurve : Error { using Error::Error; };
struct NoAdmissiblePair : Error { using Error::Error; };

// cli
struct UnknownMap : Error { using Error::Error; };

}  // namespace chm
