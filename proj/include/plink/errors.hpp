#ifndef PLINK_ERRORS_HPP
#define PLINK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plink {

// Base class for all workbench errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vertex table inconsistency (repeated id or label).
class DuplicateVertexId : public Error {
public:
    using Error::Error;
};

// Requested dimension outside [0, dim K].
class DimensionOutOfRange : public Error {
public:
    using Error::Error;
};

// Simplex not present in the face closure of the complex.
class SimplexNotInComplex : public Error {
public:
    using Error::Error;
};

// Moment parameters must be pairwise distinct.
class DuplicateParameter : public Error {
public:
    using Error::Error;
};

// A crossing predicate met a singular system, a zero barycentric
// coordinate or equal lifted heights.  The caller resamples.
class DegenerateConfiguration : public Error {
public:
    using Error::Error;
};

// Cone apex not generic relative to the sphere pair.  The caller
// resamples the apex.
class DegenerateApex : public Error {
public:
    using Error::Error;
};

// Resampling budget exhausted without reaching a generic configuration.
class GenericityExhausted : public Error {
public:
    using Error::Error;
};

// The simplices handed to apply_delta_y do not form an n-tetrahedron.
class NotATetrahedron : public Error {
public:
    using Error::Error;
};

// A transported sphere failed validation.  This would falsify the
// construction, so it is always surfaced, never swallowed.
class TransportBroken : public Error {
public:
    using Error::Error;
};

// Cycle enumeration exceeded its configured bound.
class ComplexTooLarge : public Error {
public:
    using Error::Error;
};

}  // namespace plink

#endif  // PLINK_ERRORS_HPP
