#pragma once

#include <stdexcept>

namespace partcrt {

// Base class for every failure this library raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameters rejected up front: out of range, overflowing, or inconsistent.
struct InvalidParamsError : Error {
    using Error::Error;
};

// An inverse was requested modulo m for a value not coprime to m.
struct NotCoprimeError : InvalidParamsError {
    using InvalidParamsError::InvalidParamsError;
};

// Two multiplicity sums collided while assembling a set that must have
// l * prod(m_i) - 1 distinct members.
struct DistinctnessViolationError : Error {
    using Error::Error;
};

// Two difference classes in a union intersect.
struct DisjointnessViolationError : Error {
    using Error::Error;
};

// r_i does not divide r_{i+1}.
struct ChainViolationError : Error {
    using Error::Error;
};

// Residue expansion requested for a class with no finite exclusion.
struct InfiniteExclusionError : Error {
    using Error::Error;
};

// Operation applied to an instance built by a different constructor.
struct WrongShapeError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

// A claim's modulus does not match the instance parameter it must pass through.
struct ModulusMismatchError : Error {
    using Error::Error;
};

// Brute-force enumeration refused to run above its hard bound.
struct OracleScaleExceededError : Error {
    using Error::Error;
};

}  // namespace partcrt
