#pragma once

#include <stdexcept>
#include <string>

namespace spinrep {

/// Base class for every error the library throws on contract violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// quaternion / rotation / spincover
struct NearZeroQuaternion : Error { using Error::Error; };
struct NotUnitQuaternion : Error { using Error::Error; };
struct NotARotation : Error { using Error::Error; };
struct BadIndex : Error { using Error::Error; };
struct NotTorusGenerator : Error { using Error::Error; };

// minkowski
struct NonpositiveMass : Error { using Error::Error; };

// finite groups and cohomology
struct ParseError : Error { using Error::Error; };
struct NotAGroup : Error { using Error::Error; };
struct UnknownGroup : Error { using Error::Error; };
struct SubgroupError : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BadCocycle : Error { using Error::Error; };
struct NotCyclicFiber : Error { using Error::Error; };

// representations
struct NotProjective : Error { using Error::Error; };
struct NotIrreducible : Error { using Error::Error; };
struct NotCentralScalar : Error { using Error::Error; };
struct DecompositionFailed : Error { using Error::Error; };

}  // namespace spinrep
