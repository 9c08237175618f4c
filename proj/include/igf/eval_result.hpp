#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace igf {

enum class Method { series, continued_fraction, closed_form, quadrature };

std::string_view to_string(Method m) noexcept;

/// A computed value with an absolute error estimate and the route that produced it.
/// `value` and `abs_err` are always finite; failures go through the exceptions below.
struct EvalResult {
    double value = 0.0;
    double abs_err = 0.0;
    Method method = Method::closed_form;
    std::uint64_t evals = 0;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Result is not representable as a finite double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Iteration or evaluation budget exhausted; carries the best estimate reached.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, EvalResult best)
        : std::runtime_error(what), best_(best) {}
    const EvalResult& best() const noexcept { return best_; }

private:
    EvalResult best_;
};

/// Integrand produced a non-finite value at an interior abscissa.
class IntegrandError : public std::runtime_error {
public:
    IntegrandError(const std::string& what, double abscissa)
        : std::runtime_error(what), abscissa_(abscissa) {}
    double abscissa() const noexcept { return abscissa_; }

private:
    double abscissa_;
};

/// Operation requested on an object kind that does not support it.
class UnsupportedError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed text input: pair labels, reports, command arguments.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace igf
