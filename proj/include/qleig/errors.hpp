#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qleig {

// Base class for every domain error the library throws. `code()` is the
// stable identifier surfaced in the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Inverting the zero quaternion.
class ZeroDivisionError : public Error {
public:
    explicit ZeroDivisionError(const std::string& detail)
        : Error("ZeroDivision", detail) {}
};

// Malformed quaternion/matrix text; `position()` is the byte offset into
// the input when one is known, npos otherwise.
class ParseError : public Error {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    explicit ParseError(const std::string& detail, std::size_t position = npos)
        : Error("ParseError", detail), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionMismatchError : public Error {
public:
    explicit DimensionMismatchError(const std::string& detail)
        : Error("DimensionMismatch", detail) {}
};

// Matrix inversion requested on a matrix whose Study determinant is at or
// below the scale-aware singularity threshold.
class SingularError : public Error {
public:
    explicit SingularError(const std::string& detail)
        : Error("Singular", detail) {}
};

// Expression evaluation hit an inverse of zero at a specific point.
class SingularAtError : public Error {
public:
    SingularAtError(const std::string& detail)
        : Error("SingularAt", detail) {}
};

// Matrix-argument expression evaluation hit a singular inner matrix.
class SingularMatrixError : public Error {
public:
    explicit SingularMatrixError(const std::string& detail)
        : Error("SingularMatrixAt", detail) {}
};

// A construction needs a particular entry to be nonzero (the top-right
// corner for the 3x3 pole, the bottom-left corner for the Wood form).
class RequiresNonzeroEntryError : public Error {
public:
    explicit RequiresNonzeroEntryError(const std::string& detail)
        : Error("RequiresNonzeroEntry", detail) {}
};

// A quantity that is real in exact arithmetic came back with an imaginary
// part above tolerance.
class NumericalInstabilityError : public Error {
public:
    explicit NumericalInstabilityError(const std::string& detail)
        : Error("NumericalInstability", detail) {}
};

class ConvergenceFailureError : public Error {
public:
    explicit ConvergenceFailureError(const std::string& detail)
        : Error("ConvergenceFailure", detail) {}
};

// The multistart search certified no root at all; an empty spectrum is
// never reported silently.
class SearchIncompleteError : public Error {
public:
    explicit SearchIncompleteError(const std::string& detail)
        : Error("SearchIncomplete", detail) {}
};

class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& detail)
        : Error("Unsupported", detail) {}
};

}  // namespace qleig
