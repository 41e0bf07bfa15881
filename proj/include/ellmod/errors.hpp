#pragma once

#include <stdexcept>
#include <string>

namespace ellmod {

// Base for all library errors. `name()` is a stable identifier used by the
// CLI to map errors onto exit codes and diagnostic fields.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define ELLMOD_DEFINE_ERROR(Type)                                      \
    class Type : public Error {                                        \
    public:                                                            \
        explicit Type(const std::string& what) : Error(#Type, what) {} \
    }

ELLMOD_DEFINE_ERROR(NotPrime);
ELLMOD_DEFINE_ERROR(BadCharacteristic);
ELLMOD_DEFINE_ERROR(InfiniteField);
ELLMOD_DEFINE_ERROR(DivisionByZero);
ELLMOD_DEFINE_ERROR(FieldMismatch);

ELLMOD_DEFINE_ERROR(ZeroScalar);
ELLMOD_DEFINE_ERROR(CurveNotSmooth);
ELLMOD_DEFINE_ERROR(TooFewPoints);
ELLMOD_DEFINE_ERROR(MarkCollision);
ELLMOD_DEFINE_ERROR(CannotForgetBasePoint);
ELLMOD_DEFINE_ERROR(IndexOutOfRange);
ELLMOD_DEFINE_ERROR(NotAnAutomorphism);

ELLMOD_DEFINE_ERROR(UnsupportedN);
ELLMOD_DEFINE_ERROR(NotCyclic);
ELLMOD_DEFINE_ERROR(ExactnessRequired);
ELLMOD_DEFINE_ERROR(NoCandidateMatches);
ELLMOD_DEFINE_ERROR(AmbiguousConstraint);
ELLMOD_DEFINE_ERROR(UnknownStack);

#undef ELLMOD_DEFINE_ERROR

// Raised when a marked point fails validation; carries the 1-based index.
class PointNotOnCurve : public Error {
public:
    explicit PointNotOnCurve(const std::string& what, int index = -1)
        : Error("PointNotOnCurve", what), index_(index) {}

    int index() const { return index_; }

private:
    int index_;
};

// Raised when two marked points coincide; carries both 1-based indices.
class DuplicatePoints : public Error {
public:
    DuplicatePoints(const std::string& what, int i, int j)
        : Error("DuplicatePoints", what), i_(i), j_(j) {}

    int first_index() const { return i_; }
    int second_index() const { return j_; }

private:
    int i_;
    int j_;
};

}  // namespace ellmod
