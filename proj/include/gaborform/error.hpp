#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gaborform {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Polynomial or band text could not be parsed. `offset` is the byte
/// position in the input where the problem was detected.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& reason)
        : Error("parse error at offset " + std::to_string(offset) + ": " + reason),
          offset_(offset), reason_(reason) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t offset_;
    std::string reason_;
};

/// Matrix dimension above the eigensolver cap.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Iterative method hit its iteration cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_residual)
        : Error(what), best_residual_(best_residual) {}

    double best_residual() const noexcept { return best_residual_; }

private:
    double best_residual_;
};

/// The symbol of a band is negative somewhere, so no polynomial has it as
/// autocorrelation.
class NotFactorableError : public Error {
public:
    NotFactorableError(double min_value, double theta)
        : Error("symbol is negative: min q = " + std::to_string(min_value) +
                " at theta = " + std::to_string(theta)),
          min_value_(min_value), theta_(theta) {}

    double min_value() const noexcept { return min_value_; }
    double theta() const noexcept { return theta_; }

private:
    double min_value_;
    double theta_;
};

/// Two algebraically equal computations disagreed beyond tolerance.
class IdentityViolation : public Error {
public:
    using Error::Error;
};

}  // namespace gaborform
