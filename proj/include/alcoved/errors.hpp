#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace alcoved {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// The inequality system has no real solution (negative cycle in the constraint graph).
class Infeasible : public Error {
public:
    Infeasible() : Error("infeasible constraint system") {}
};

/// Coordinate `coordinate()` (1-based) is unbounded above or below.
class Unbounded : public Error {
public:
    explicit Unbounded(std::size_t coordinate)
        : Error("polyhedron unbounded in coordinate " + std::to_string(coordinate)),
          coordinate_(coordinate) {}
    std::size_t coordinate() const noexcept { return coordinate_; }

private:
    std::size_t coordinate_;
};

class NotFullDimensional : public Error {
public:
    NotFullDimensional() : Error("polytope is not full-dimensional") {}
};

class CyclicRelations : public Error {
public:
    CyclicRelations() : Error("order relations contain a directed cycle") {}
};

class Overflow : public Error {
public:
    using Error::Error;
};

class EnumerationBudgetExceeded : public Error {
public:
    using Error::Error;
};

class CandidateBudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An Ehrhart polynomial whose h*-transform is not a nonnegative integer vector.
class NotLatticeEhrhart : public Error {
public:
    using Error::Error;
};

class DegenerateSimplex : public Error {
public:
    DegenerateSimplex() : Error("simplex vertices are affinely dependent") {}
};

class NoInteriorPoints : public Error {
public:
    NoInteriorPoints() : Error("polytope has no interior lattice points") {}
};

class NotAFacet : public Error {
public:
    using Error::Error;
};

class EmptyList : public Error {
public:
    EmptyList() : Error("empty list") {}
};

class NotUnimodal : public Error {
public:
    NotUnimodal() : Error("sequence is not unimodal") {}
};

/// A computed quantity contradicts a proven theorem. Carries a human-readable
/// dump of the offending instance.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

/// Raised when a non-generic lifting produces a non-simplicial cell.
class NonGenericLifting : public Error {
public:
    using Error::Error;
};

}  // namespace alcoved
