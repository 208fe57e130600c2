#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace helixlab {

/// Base class for all helixlab failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression text could not be parsed. `offset` is a byte index into the
/// source text.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// An expression was evaluated outside the real domain of one of its nodes
/// (log/sqrt of a nonpositive value, division by zero, ...).
class EvalDomainError : public Error {
public:
    EvalDomainError(std::size_t offset, const std::string& what)
        : Error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Curvature under the floor: the Frenet frame is undefined there (straight
/// segment or inflection point).
class DegenerateCurvatureError : public Error {
public:
    DegenerateCurvatureError(double param, double kappa)
        : Error("degenerate curvature " + std::to_string(kappa) + " at parameter " +
                std::to_string(param)),
          param_(param),
          kappa_(kappa) {}

    double param() const { return param_; }
    double kappa() const { return kappa_; }

private:
    double param_;
    double kappa_;
};

/// The curve is not regular: |alpha'| vanishes.
class ZeroSpeedError : public Error {
public:
    explicit ZeroSpeedError(double param)
        : Error("zero speed at parameter " + std::to_string(param)), param_(param) {}

    double param() const { return param_; }

private:
    double param_;
};

/// Numerical failure outside expression evaluation: quadrature that will not
/// converge, kappa <= 0 on an intrinsic grid, a point off the unit sphere, ...
class NumericError : public Error {
public:
    using Error::Error;
};

/// Malformed curve-spec file, schema violation, or invalid configuration.
class SpecError : public Error {
public:
    using Error::Error;
};

}  // namespace helixlab
