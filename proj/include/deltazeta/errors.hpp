#pragma once

#include <stdexcept>
#include <string>

namespace deltazeta {

/// Argument outside the domain of a function or model (maps to CLI exit code 2).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parameters put the model in a regime with negative eigenvalues.
class BoundStateError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Resolvent evaluated with Im k <= 0.
class WrongSheetError : public DomainError {
public:
    using DomainError::DomainError;
};

class SingularPointError : public DomainError {
public:
    using DomainError::DomainError;
};

class PoleError : public DomainError {
public:
    PoleError(const std::string& what, double nearest_pole)
        : DomainError(what), nearest_pole_(nearest_pole) {}
    double nearest_pole() const noexcept { return nearest_pole_; }

private:
    double nearest_pole_;
};

/// Zeta requested outside the convergence strip of its integral representation.
class ContinuationRequiredError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Finite-difference stencil leaves the admissible parameter region.
class StepTooLargeError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Numerical failure (maps to CLI exit code 3).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IntegrandError : public NumericalError {
public:
    IntegrandError(const std::string& what, double abscissa)
        : NumericalError(what), abscissa_(abscissa) {}
    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

class NonConvergenceError : public NumericalError {
public:
    NonConvergenceError(const std::string& what, double partial_value, double error_estimate)
        : NumericalError(what), partial_value_(partial_value), error_estimate_(error_estimate) {}
    double partial_value() const noexcept { return partial_value_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double partial_value_;
    double error_estimate_;
};

/// Two extrapolation orders disagree beyond tolerance; carries both estimates.
class ExtrapolationError : public NumericalError {
public:
    ExtrapolationError(const std::string& what, double lower_order, double higher_order)
        : NumericalError(what), lower_order_(lower_order), higher_order_(higher_order) {}
    double lower_order() const noexcept { return lower_order_; }
    double higher_order() const noexcept { return higher_order_; }

private:
    double lower_order_;
    double higher_order_;
};

}  // namespace deltazeta
