#pragma once

#include <cstdint>
#include <functional>

#include "igf/eval_result.hpp"

namespace igf {

struct QuadConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_level = 10;  // step 2^-max_level in the transformed variable
    std::uint64_t max_evals = 200000;

    /// Throws DomainError unless rel_tol ≥ 1e-15, abs_tol ≥ 1e-300, 1 ≤ max_level ≤ 12, max_evals > 0.
    void validate() const;
};

enum class IntervalKind { finite, half_infinite };

struct IntervalSpec {
    IntervalKind kind = IntervalKind::finite;
    double lower = 0.0;
    double upper = 1.0;  // ignored for half_infinite
    bool singular_lower = false;
    bool singular_upper = false;

    static IntervalSpec finite(double lower, double upper, bool singular_lower = false,
                               bool singular_upper = false);
    static IntervalSpec half_infinite(double lower, bool singular_lower = false);

    void validate() const;
};

/// A quadrature node. The gaps are the distances to each endpoint, computed
/// from the transform directly rather than by subtracting from `x`, so they stay
/// accurate where `x` has already rounded onto the endpoint.
struct Abscissa {
    double x;
    double lower_gap;
    double upper_gap;  // +inf on half-infinite intervals
};

/// An angle on [0, π/2] with sine and cosine taken from the nearer endpoint gap.
struct Angle {
    double theta;
    double sin;
    double cos;

    double tan() const { return sin / cos; }
    double sec2() const { return 1.0 / (cos * cos); }
};

using Integrand = std::function<double(double)>;
using GapIntegrand = std::function<double(const Abscissa&)>;
using AngleIntegrand = std::function<double(const Angle&)>;

/// Tanh-sinh on finite intervals, exp-sinh on [lower, ∞).
///
/// Refines by halving the step until two successive levels agree to within
/// max(abs_tol, rel_tol·|I|); abs_err is that difference, floored by a rounding
/// estimate. Non-finite integrand values are treated as zero only where the node
/// has collapsed onto an endpoint flagged singular; anywhere else they raise
/// IntegrandError.
EvalResult integrate(const Integrand& f, const IntervalSpec& domain, const QuadConfig& cfg = {});
EvalResult integrate_with_gaps(const GapIntegrand& f, const IntervalSpec& domain,
                               const QuadConfig& cfg = {});

/// ∫₀^{π/2} f(θ) dθ with both endpoints treated as possibly singular.
EvalResult integrate_theta(const AngleIntegrand& f, const QuadConfig& cfg = {});

}  // namespace igf
