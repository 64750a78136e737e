#pragma once

#include <stdexcept>

namespace moduli {

// Base type for every failure this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boundary index outside the valid range for its signature.
struct InvalidIndexError : Error { using Error::Error; };
// A pairing needed a boundary value the curve class never declared.
struct UnknownBoundaryValueError : Error { using Error::Error; };
// Two objects living on different moduli signatures or lattices.
struct SignatureMismatchError : Error { using Error::Error; };
struct LatticeMismatchError : Error { using Error::Error; };
// C^2 + C.K odd, so there is no integer arithmetic genus.
struct ParityError : Error { using Error::Error; };
// Pencil data without the declared transversality/stability package.
struct StarStarRequiredError : Error { using Error::Error; };
// Asked for something the calculus deliberately does not model.
struct UnsupportedError : Error { using Error::Error; };
struct UnsupportedRankError : Error { using Error::Error; };
struct EdgeNotFoundError : Error { using Error::Error; };
struct DisconnectedError : Error { using Error::Error; };
struct TooLargeError : Error { using Error::Error; };
struct InvalidStratumError : Error { using Error::Error; };
struct MalformedScenarioError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace moduli
