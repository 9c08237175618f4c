#pragma once

#include "igf/eval_result.hpp"

namespace igf {

/// Iteration cap shared by the series and continued-fraction branches.
inline constexpr int kKernelMaxIterations = 500;

/// ln Γ(s) for s > 0.
double ln_gamma(double s);

/// Γ(s) for 0 < s ≤ 170. Throws OverflowError above that, DomainError for s ≤ 0.
double gamma_fn(double s);

/// Lower incomplete gamma γ(s,x) = ∫₀ˣ t^{s-1} e^{-t} dt.
///
/// Uses the power series when x ≤ s+1 and Γ(s) − Γ(s,x) with a Lentz continued
/// fraction for Γ(s,x) otherwise. `method` records the branch taken.
EvalResult lower_gamma(double s, double x);

/// Regularized P(s,x) = γ(s,x)/Γ(s), clamped to [0,1].
EvalResult regularized_p(double s, double x);

EvalResult erf(double x);
EvalResult erfc(double x);
/// Scaled complement e^{x²} erfc(x) for x ≥ 0.
EvalResult erfcx(double x);

namespace detail {

// Individual branches, exposed so the switchover can be tested directly.
// Both return γ(s,x) (unregularized) and ignore the branch-selection rule.
EvalResult lower_gamma_series(double s, double x);
EvalResult lower_gamma_continued_fraction(double s, double x);

}  // namespace detail

}  // namespace igf
