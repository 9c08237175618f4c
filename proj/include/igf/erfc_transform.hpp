#pragma once

#include <optional>
#include <string_view>

#include "igf/eval_result.hpp"
#include "igf/laplace.hpp"
#include "igf/quadrature.hpp"

namespace igf {

/// Route used to evaluate an erfc-weighted integral.
enum class ReductionForm { theta, s, time };

/// "theta-form", "s-form", "time-domain".
std::string_view to_string(ReductionForm f) noexcept;

/// Accepts the to_string spellings and the short forms "theta", "s", "time".
std::optional<ReductionForm> parse_form(std::string_view text) noexcept;

/// ∫₀^∞ f(t) erfc(a√t) dt.
///
/// theta-form: (2/π)∫₀^{π/2} F(a²sec²θ) dθ.
/// s-form:     (2a/π)∫_a^∞ F(s²) / (s√(s²-a²)) ds.
/// time:       direct quadrature; dirac pairs give erfc(a√b).
///
/// The transform forms need sigma0 < a²; violations throw DomainError naming the pair.
EvalResult erfc_weighted_integral(const TransformPair& p, double a, ReductionForm form,
                                  const QuadConfig& cfg = {});

/// ∫₀^∞ e^{a²t} f(t) erfc(a√t) dt.
///
/// theta-form: (2/π)∫₀^{π/2} F(a²tan²θ) dθ, needs sigma0 < 0.
/// s-form:     (2a/π)∫₀^∞ F(s²) / (s²+a²) ds.
/// time:       quadrature of f(t)·erfcx(a√t); dirac pairs give erfcx(a√b).
///
/// The s-form and time routes need sigma0 < 0 or a power pair with r < -1/2.
EvalResult erfc_weighted_exp_integral(const TransformPair& p, double a, ReductionForm form,
                                      const QuadConfig& cfg = {});

/// Γ(r+3/2) / (a^{2r+2} √π (1+r)) = ∫₀^∞ t^r erfc(a√t) dt; r > -1, a > 0.
double erfc_moment(double r, double a);

/// Γ(1+μ/2) / (√π a^{μ+1} (1+μ)) = ∫₀^∞ t^μ erfc(a t) dt; μ > -1, a > 0.
double erfc_linear_moment(double mu, double a);

/// ∫_a^∞ e^{-b²t²} / (t√(t²-a²)) dt by quadrature.
EvalResult gauss_singular_integral(double a, double b, const QuadConfig& cfg = {});
/// (π/(2a)) erfc(ab).
double gauss_singular_closed(double a, double b);

/// ∫₀^∞ e^{-b²t²} / (t²+a²) dt by quadrature.
EvalResult gauss_lorentz_integral(double a, double b, const QuadConfig& cfg = {});
/// (π/(2a)) e^{a²b²} erfc(ab), formed through erfcx.
double gauss_lorentz_closed(double a, double b);

/// (2aΓ(r+1)/π) ∫₀^∞ s^{-2r-2} / (s²+a²) ds, which equals ∫₀^∞ t^r e^{a²t} erfc(a√t) dt.
/// Both sides converge only for r ∈ (-1, -1/2); anything else is a DomainError.
EvalResult exp_erfc_moment_rhs(double r, double a, const QuadConfig& cfg = {});

/// The same integrand over [a, ∞) instead of [0, ∞); r > -1, a > 0.
/// Does not equal the time-domain integral; kept for the historical value
/// (2/π)(1 - π/4) at r = 0, a = 1.
EvalResult exp_erfc_moment_rhs_from_a(double r, double a, const QuadConfig& cfg = {});

namespace detail {

/// s-form after s = a cosh u: (2/π)∫₀^∞ F(a²cosh²u) / cosh u du.
EvalResult erfc_weighted_cosh_form(const TransformPair& p, double a, const QuadConfig& cfg = {});

}  // namespace detail

}  // namespace igf
