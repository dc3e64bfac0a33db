#pragma once

#include <stdexcept>
#include <string>

namespace ade {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleError : Error {
    explicit PoleError(const std::string& what) : Error("pole: " + what) {}
};
struct NonzeroConstantTerm : Error {
    explicit NonzeroConstantTerm(const std::string& what) : Error("nonzero constant term: " + what) {}
};
struct InvalidParameter : Error {
    explicit InvalidParameter(const std::string& what) : Error("invalid parameter: " + what) {}
};
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error("validation failed: " + what) {}
};
struct NonIntegerMultiplicity : Error {
    explicit NonIntegerMultiplicity(const std::string& what) : Error("non-integer multiplicity: " + what) {}
};
struct InvalidSector : Error {
    explicit InvalidSector(const std::string& what) : Error("invalid sector: " + what) {}
};
struct UnknownClass : Error {
    explicit UnknownClass(const std::string& what) : Error("unknown conjugacy class: " + what) {}
};
struct TrivialClass : Error {
    explicit TrivialClass(const std::string& what) : Error("trivial class not allowed: " + what) {}
};
struct UnknownDivisor : Error {
    explicit UnknownDivisor(const std::string& what) : Error("unknown divisor: " + what) {}
};
struct ZeroWeight : Error {
    explicit ZeroWeight(const std::string& what) : Error("degenerate zero weight: " + what) {}
};
struct UnsupportedGenus : Error {
    explicit UnsupportedGenus(const std::string& what) : Error("unsupported genus: " + what) {}
};
struct UnknownIntegral : Error {
    explicit UnknownIntegral(const std::string& what) : Error("unknown Hodge integral: " + what) {}
};
struct SqrtNotCyclotomic : Error {
    explicit SqrtNotCyclotomic(const std::string& what) : Error("square root not cyclotomic: " + what) {}
};
struct MismatchAt : Error {
    explicit MismatchAt(const std::string& what) : Error("mismatch at " + what) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace ade
