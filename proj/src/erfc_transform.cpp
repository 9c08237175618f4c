#include "igf/erfc_transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "igf/gamma.hpp"

namespace igf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

void require_positive(const char* op, const char* name, double v) {
    if (!(std::isfinite(v) && v > 0.0)) {
        throw DomainError(std::string(op) + ": requires finite " + name + " > 0 (got " + shortest_repr(v) + ")");
    }
}

EvalResult scaled(EvalResult r, double k) {
    r.value *= k;
    r.abs_err *= std::abs(k);
    return r;
}

// Runs a quadrature and applies a constant prefactor, also to the estimate
// carried by a ConvergenceError.
template <class Run>
EvalResult scaled_quadrature(double k, Run run) {
    try {
        return scaled(run(), k);
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(e.what(), scaled(e.best(), k));
    }
}

EvalResult closed(EvalResult kernel) {
    kernel.method = Method::closed_form;
    return kernel;
}

bool exp_weight_admissible(const TransformPair& p) {
    if (p.sigma0() < 0.0) return true;
    const auto& r = p.power_exponent();
    return r && *r < -0.5;
}

}  // namespace

std::string_view to_string(ReductionForm f) noexcept {
    switch (f) {
        case ReductionForm::theta: return "theta-form";
        case ReductionForm::s: return "s-form";
        case ReductionForm::time: return "time-domain";
    }
    return "?";
}

std::optional<ReductionForm> parse_form(std::string_view text) noexcept {
    if (text == "theta" || text == "theta-form") return ReductionForm::theta;
    if (text == "s" || text == "s-form") return ReductionForm::s;
    if (text == "time" || text == "time-domain") return ReductionForm::time;
    return std::nullopt;
}

EvalResult erfc_weighted_integral(const TransformPair& p, double a, ReductionForm form, const QuadConfig& cfg) {
    require_positive("erfc_weighted_integral", "a", a);
    const double a2 = a * a;

    if (form == ReductionForm::time) {
        if (p.time_kind() == TimeKind::dirac) return closed(erfc(a * std::sqrt(p.impulse_location())));
        if (!(p.sigma0() < a2)) {
            throw DomainError(p.label() + ": sigma0 = " + shortest_repr(p.sigma0()) + " >= a^2 = " +
                              shortest_repr(a2) + ", the time-domain integral diverges");
        }
        return integrate([&p, a, a2](double t) { return p.damped(t, a2) * erfcx(a * std::sqrt(t)).value; },
                         IntervalSpec::half_infinite(0.0, p.singular_at_zero()), cfg);
    }

    if (!(p.sigma0() < a2)) {
        throw DomainError(p.label() + ": " + std::string(to_string(form)) + " needs sigma0 < a^2 (sigma0 = " +
                          shortest_repr(p.sigma0()) + ", a^2 = " + shortest_repr(a2) + ")");
    }
    if (form == ReductionForm::theta) {
        return scaled_quadrature(2.0 / kPi, [&] {
            return integrate_theta([&p, a2](const Angle& th) { return p.laplace(a2 * th.sec2()); }, cfg);
        });
    }
    return scaled_quadrature(2.0 * a / kPi, [&] {
        return integrate_with_gaps(
            [&p, a](const Abscissa& s) {
                const double g = s.lower_gap;
                return p.laplace_of_square(s.x) / (s.x * std::sqrt(g * (2.0 * a + g)));
            },
            IntervalSpec::half_infinite(a, true), cfg);
    });
}

EvalResult erfc_weighted_exp_integral(const TransformPair& p, double a, ReductionForm form, const QuadConfig& cfg) {
    require_positive("erfc_weighted_exp_integral", "a", a);

    if (form == ReductionForm::theta) {
        if (!(p.sigma0() < 0.0)) {
            throw DomainError(p.label() + ": sigma0 = " + shortest_repr(p.sigma0()) +
                              " >= 0 forbids theta-form under exp weighting");
        }
        return scaled_quadrature(2.0 / kPi, [&] {
            return integrate_theta([&p, a](const Angle& th) { return p.laplace_of_square(a * th.tan()); }, cfg);
        });
    }

    if (form == ReductionForm::time && p.time_kind() == TimeKind::dirac) {
        return closed(erfcx(a * std::sqrt(p.impulse_location())));
    }
    if (!exp_weight_admissible(p)) {
        throw DomainError(p.label() + ": " + std::string(to_string(form)) +
                          " under exp weighting needs sigma0 < 0 or a power pair with r < -1/2");
    }
    if (form == ReductionForm::time) {
        return integrate([&p, a](double t) { return p.damped(t, 0.0) * erfcx(a * std::sqrt(t)).value; },
                         IntervalSpec::half_infinite(0.0, p.singular_at_zero()), cfg);
    }
    const bool singular = p.power_exponent().has_value();
    return scaled_quadrature(2.0 * a / kPi, [&] {
        return integrate([&p, a](double s) { return p.laplace_of_square(s) / (s * s + a * a); },
                         IntervalSpec::half_infinite(0.0, singular), cfg);
    });
}

double erfc_moment(double r, double a) {
    if (!(std::isfinite(r) && r > -1.0)) throw DomainError("erfc_moment: requires r > -1 (got " + shortest_repr(r) + ")");
    require_positive("erfc_moment", "a", a);
    return gamma_fn(r + 1.5) / (kSqrtPi * (1.0 + r)) / std::pow(a, 2.0 * r + 2.0);
}

double erfc_linear_moment(double mu, double a) {
    if (!(std::isfinite(mu) && mu > -1.0)) {
        throw DomainError("erfc_linear_moment: requires mu > -1 (got " + shortest_repr(mu) + ")");
    }
    require_positive("erfc_linear_moment", "a", a);
    return gamma_fn(1.0 + 0.5 * mu) / (kSqrtPi * (1.0 + mu)) / std::pow(a, mu + 1.0);
}

EvalResult gauss_singular_integral(double a, double b, const QuadConfig& cfg) {
    require_positive("gauss_singular_integral", "a", a);
    require_positive("gauss_singular_integral", "b", b);
    const double b2 = b * b;
    return integrate_with_gaps(
        [a, b2](const Abscissa& t) {
            const double g = t.lower_gap;
            return std::exp(-b2 * t.x * t.x) / (t.x * std::sqrt(g * (2.0 * a + g)));
        },
        IntervalSpec::half_infinite(a, true), cfg);
}

double gauss_singular_closed(double a, double b) {
    require_positive("gauss_singular_closed", "a", a);
    require_positive("gauss_singular_closed", "b", b);
    return kPi / (2.0 * a) * erfc(a * b).value;
}

EvalResult gauss_lorentz_integral(double a, double b, const QuadConfig& cfg) {
    require_positive("gauss_lorentz_integral", "a", a);
    require_positive("gauss_lorentz_integral", "b", b);
    const double b2 = b * b;
    const double a2 = a * a;
    return integrate([a2, b2](double t) { return std::exp(-b2 * t * t) / (t * t + a2); },
                     IntervalSpec::half_infinite(0.0), cfg);
}

double gauss_lorentz_closed(double a, double b) {
    require_positive("gauss_lorentz_closed", "a", a);
    require_positive("gauss_lorentz_closed", "b", b);
    return kPi / (2.0 * a) * erfcx(a * b).value;
}

EvalResult exp_erfc_moment_rhs(double r, double a, const QuadConfig& cfg) {
    if (!(r > -1.0 && r < -0.5)) {
        throw DomainError("exp_erfc_moment_rhs: requires -1 < r < -1/2 (got r = " + shortest_repr(r) + ")");
    }
    require_positive("exp_erfc_moment_rhs", "a", a);
    const double k = -2.0 * r - 2.0;
    const double a2 = a * a;
    return scaled_quadrature(2.0 * a * gamma_fn(r + 1.0) / kPi, [&] {
        return integrate([k, a2](double s) { return std::exp(k * std::log(s)) / (s * s + a2); },
                         IntervalSpec::half_infinite(0.0, true), cfg);
    });
}

EvalResult exp_erfc_moment_rhs_from_a(double r, double a, const QuadConfig& cfg) {
    if (!(std::isfinite(r) && r > -1.0)) {
        throw DomainError("exp_erfc_moment_rhs_from_a: requires r > -1 (got r = " + shortest_repr(r) + ")");
    }
    require_positive("exp_erfc_moment_rhs_from_a", "a", a);
    const double k = -2.0 * r - 2.0;
    const double a2 = a * a;
    return scaled_quadrature(2.0 * a * gamma_fn(r + 1.0) / kPi, [&] {
        return integrate([k, a2](double s) { return std::exp(k * std::log(s)) / (s * s + a2); },
                         IntervalSpec::half_infinite(a), cfg);
    });
}

namespace detail {

EvalResult erfc_weighted_cosh_form(const TransformPair& p, double a, const QuadConfig& cfg) {
    require_positive("erfc_weighted_cosh_form", "a", a);
    const double a2 = a * a;
    if (!(p.sigma0() < a2)) {
        throw DomainError(p.label() + ": s-form needs sigma0 < a^2 (sigma0 = " + shortest_repr(p.sigma0()) +
                          ", a^2 = " + shortest_repr(a2) + ")");
    }
    return scaled_quadrature(2.0 / kPi, [&] {
        return integrate(
            [&p, a](double u) {
                const double c = std::cosh(u);
                return p.laplace_of_square(a * c) / c;
            },
            IntervalSpec::half_infinite(0.0), cfg);
    });
}

}  // namespace detail

}  // namespace igf
