#include "igf/identities.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "igf/erfc_transform.hpp"
#include "igf/gamma.hpp"
#include "igf/laplace.hpp"
#include "igf/quadrature.hpp"

namespace igf {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrtPi = 1.7724538509055160273;

using Reason = std::optional<std::string>;

QuadConfig quad_cfg() {
    QuadConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-300;
    return cfg;
}

EvalResult exact(double v) { return {v, 0.0, Method::closed_form, 1}; }

EvalResult times(EvalResult r, double k) {
    r.value *= k;
    r.abs_err *= std::abs(k);
    return r;
}

EvalResult plus(EvalResult r, double c) {
    r.value += c;
    return r;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    out.front() = lo;
    out.back() = hi;
    return out;
}

const std::vector<double> kShapes = {0.25, 0.5, 1.0, 2.5, 5.0};
const std::vector<double> kTimes = log_spaced(0.01, 50.0, 15);
const std::vector<double> kUnitA = {0.1, 0.25, 0.5, 0.75, 0.9};
const std::vector<double> kScales = {0.5, 1.0, 2.0};

// γ(s, x) that returns Γ(s) once P(s, x) = 1 in double precision, including x = ∞.
double lower_gamma_saturating(double s, double x) {
    if (x == 0.0) return 0.0;
    if (!(x < 2.0 * s + 800.0)) return gamma_fn(s);
    return lower_gamma(s, x).value;
}

// t·sec²θ, with 0·∞ at θ = π/2 read as 0 when t = 0.
double sec2_arg(double t, const Angle& th) { return t == 0.0 ? 0.0 : t * th.sec2(); }

// cot^p θ from the node's sine and cosine, finite away from an exact zero.
double cot_pow(const Angle& th, double p) { return std::exp(p * (std::log(th.cos) - std::log(th.sin))); }

Reason require(bool ok, const char* constraint) {
    if (ok) return std::nullopt;
    return std::string(constraint);
}

const TransformPair& pair_at(const ParamList& p) {
    return PairRegistry::standard().pairs().at(static_cast<std::size_t>(param(p, "pair")));
}

Reason pair_index_violation(const ParamList& p) {
    const double k = param(p, "pair");
    const double n = static_cast<double>(PairRegistry::standard().pairs().size());
    if (!(k >= 0.0 && k < n && k == std::floor(k))) return std::string("pair must index the standard registry");
    return std::nullopt;
}

std::vector<double> pair_indices() {
    std::vector<double> out;
    for (std::size_t i = 0; i < PairRegistry::standard().pairs().size(); ++i) out.push_back(static_cast<double>(i));
    return out;
}

Comparison single(Evaluator lhs, Evaluator rhs, std::string label = "lhs~rhs") {
    return {std::move(label), std::move(lhs), std::move(rhs), {}, std::nullopt};
}

// I13: plain weighting; every form is admissible when sigma0 < a².
Comparison form_pair(ReductionForm x, ReductionForm y, bool exp_weight) {
    Comparison c;
    c.label = std::string(to_string(x)) + "~" + std::string(to_string(y));
    auto eval = [exp_weight](ReductionForm f) -> Evaluator {
        return [f, exp_weight](const ParamList& p) {
            return exp_weight ? erfc_weighted_exp_integral(pair_at(p), param(p, "a"), f, quad_cfg())
                              : erfc_weighted_integral(pair_at(p), param(p, "a"), f, quad_cfg());
        };
    };
    c.lhs = eval(x);
    c.rhs = eval(y);
    return c;
}

bool exp_form_admissible(const TransformPair& p, ReductionForm f) {
    if (f == ReductionForm::theta) return p.sigma0() < 0.0;
    if (f == ReductionForm::time && p.time_kind() == TimeKind::dirac) return true;
    if (p.sigma0() < 0.0) return true;
    const auto& r = p.power_exponent();
    return r && *r < -0.5;
}

std::vector<IdentitySpec> build_catalog() {
    std::vector<IdentitySpec> c;

    {
        IdentitySpec s;
        s.id = "I1";
        s.description = "recurrence: γ(s+1,x) = s·γ(s,x) - x^s e^{-x}";
        s.param_names = {"s", "x"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "s") > 0.0, "s > 0")) return r;
            return require(param(p, "x") >= 0.0, "x >= 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) { return lower_gamma(param(p, "s") + 1.0, param(p, "x")); },
            [](const ParamList& p) {
                const double sv = param(p, "s");
                const double x = param(p, "x");
                const auto g = lower_gamma(sv, x);
                const double tail = std::exp(sv * std::log(x) - x);
                return EvalResult{sv * g.value - tail, sv * g.abs_err, g.method, g.evals};
            },
            "kernel(s+1)~recurrence(s)")};
        s.tol_rel = 1e-10;
        s.default_axes = {{"s", kShapes}, {"x", kTimes}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I2";
        s.description = "γ(1,x) = 1 - e^{-x}";
        s.param_names = {"x"};
        s.domain_violation = [](const ParamList& p) { return require(param(p, "x") >= 0.0, "x >= 0"); };
        s.comparisons = {single([](const ParamList& p) { return lower_gamma(1.0, param(p, "x")); },
                                [](const ParamList& p) { return exact(-std::expm1(-param(p, "x"))); },
                                "kernel~elementary")};
        s.tol_rel = 1e-12;
        s.default_axes = {{"x", kTimes}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I3";
        s.description = "γ(1/2,x) = √π·erf(√x), right side as 2∫₀^{√x} e^{-u²} du";
        s.param_names = {"x"};
        s.domain_violation = [](const ParamList& p) { return require(param(p, "x") > 0.0, "x > 0"); };
        s.comparisons = {single([](const ParamList& p) { return lower_gamma(0.5, param(p, "x")); },
                                [](const ParamList& p) {
                                    const auto q = integrate([](double u) { return std::exp(-u * u); },
                                                             IntervalSpec::finite(0.0, std::sqrt(param(p, "x"))),
                                                             quad_cfg());
                                    return times(q, 2.0);
                                },
                                "kernel~gaussian-quadrature")};
        s.tol_rel = 1e-11;
        s.default_axes = {{"x", kTimes}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I4";
        s.description = "∫₀^∞ x^{a-1} γ(b,x) dx = -Γ(a+b)/a for a < 0, a+b > 0";
        s.param_names = {"a", "b"};
        s.domain_violation = [](const ParamList& p) {
            const double a = param(p, "a");
            const double b = param(p, "b");
            if (auto r = require(a < 0.0, "a < 0")) return r;
            if (auto r = require(b > 0.0, "b > 0")) return r;
            return require(a + b > 0.0, "a + b > 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                const double a = param(p, "a");
                const double b = param(p, "b");
                return integrate(
                    [a, b](double x) {
                        const double g = lower_gamma_saturating(b, x);
                        return g > 0.0 ? std::exp((a - 1.0) * std::log(x) + std::log(g)) : 0.0;
                    },
                    IntervalSpec::half_infinite(0.0, a + b < 1.0), quad_cfg());
            },
            [](const ParamList& p) {
                const double a = param(p, "a");
                return exact(-gamma_fn(a + param(p, "b")) / a);
            },
            "quadrature~closed")};
        s.tol_rel = 1e-6;
        s.default_axes = {{"a", {-0.75, -0.5, -0.25}}, {"b", {0.5, 1.0, 2.0}}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I5";
        s.description = "∫₀^{√t} r^s e^{-(ar)²} dr = γ((s+1)/2, a²t) / (2a^{s+1})";
        s.param_names = {"s", "a", "t"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "s") > -1.0, "s > -1")) return r;
            if (auto r = require(param(p, "a") > 0.0, "a > 0 (a^{s+1} is not real for a < 0)")) return r;
            return require(param(p, "t") > 0.0, "t > 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                const double sv = param(p, "s");
                const double a2 = param(p, "a") * param(p, "a");
                return integrate([sv, a2](double r) { return std::exp(sv * std::log(r) - a2 * r * r); },
                                 IntervalSpec::finite(0.0, std::sqrt(param(p, "t")), sv < 0.0), quad_cfg());
            },
            [](const ParamList& p) {
                const double sv = param(p, "s");
                const double a = param(p, "a");
                return times(lower_gamma(0.5 * (sv + 1.0), a * a * param(p, "t")), 0.5 / std::pow(a, sv + 1.0));
            },
            "quadrature~kernel")};
        s.tol_rel = 1e-9;
        s.default_axes = {{"s", kShapes}, {"a", kShapes}, {"t", kTimes}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I6";
        s.description = "η^x ∫₀^ξ t^{x-1} e^{-ηt} dt = γ(x, ηξ)";
        s.param_names = {"x", "eta", "xi"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "x") > 0.0, "x > 0")) return r;
            if (auto r = require(param(p, "eta") > 0.0, "eta > 0")) return r;
            return require(param(p, "xi") > 0.0, "xi > 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                const double x = param(p, "x");
                const double eta = param(p, "eta");
                const auto q = integrate([x, eta](double t) { return std::exp((x - 1.0) * std::log(t) - eta * t); },
                                         IntervalSpec::finite(0.0, param(p, "xi"), x < 1.0), quad_cfg());
                return times(q, std::pow(eta, x));
            },
            [](const ParamList& p) { return lower_gamma(param(p, "x"), param(p, "eta") * param(p, "xi")); },
            "quadrature~kernel")};
        s.tol_rel = 1e-9;
        s.default_axes = {{"x", kShapes}, {"eta", {0.5, 1.0, 3.0}}, {"xi", {0.5, 1.0, 3.0}}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I7";
        s.description = "γ(a,t)Γ(b) = 2∫₀^{π/2} γ(a+b, t sec²θ) cos^{2a-1}θ sin^{2b-1}θ dθ";
        s.param_names = {"a", "b", "t"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            if (auto r = require(param(p, "b") > 0.0, "b > 0")) return r;
            return require(param(p, "t") >= 0.0, "t >= 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                return times(lower_gamma(param(p, "a"), param(p, "t")), gamma_fn(param(p, "b")));
            },
            [](const ParamList& p) {
                const double a = param(p, "a");
                const double b = param(p, "b");
                const double t = param(p, "t");
                const auto q = integrate_theta(
                    [a, b, t](const Angle& th) {
                        const double g = lower_gamma_saturating(a + b, sec2_arg(t, th));
                        if (g == 0.0) return 0.0;
                        return g * std::pow(th.cos, 2.0 * a - 1.0) * std::pow(th.sin, 2.0 * b - 1.0);
                    },
                    quad_cfg());
                return times(q, 2.0);
            },
            "kernel~theta-quadrature")};
        s.tol_rel = 1e-8;
        s.tol_abs = 1e-300;
        s.default_axes = {{"a", kShapes}, {"b", kShapes}, {"t", kTimes}};
        s.extra_points = {{{"a", 0.5}, {"b", 1.0}, {"t", 0.0}}, {{"a", 2.5}, {"b", 0.25}, {"t", 0.0}}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I8";
        s.description = "Γ(a)Γ(b)/Γ(a+b) = 2∫₀^{π/2} cos^{2a-1}θ sin^{2b-1}θ dθ";
        s.param_names = {"a", "b"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            return require(param(p, "b") > 0.0, "b > 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                const double a = param(p, "a");
                const double b = param(p, "b");
                return exact(std::exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)));
            },
            [](const ParamList& p) {
                const double a = param(p, "a");
                const double b = param(p, "b");
                const auto q = integrate_theta(
                    [a, b](const Angle& th) { return std::pow(th.cos, 2.0 * a - 1.0) * std::pow(th.sin, 2.0 * b - 1.0); },
                    quad_cfg());
                return times(q, 2.0);
            },
            "gamma-ratio~theta-quadrature")};
        s.tol_rel = 1e-9;
        s.default_axes = {{"a", kShapes}, {"b", kShapes}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I9";
        s.description =
            "γ(a,t)Γ(1-a) = 2∫₀^{π/2}(1-e^{-t sec²θ}) cot^{2a-1}θ dθ = π csc(πa) - 2∫₀^{π/2} e^{-t sec²θ} cot^{2a-1}θ dθ";
        s.param_names = {"a", "t"};
        s.domain_violation = [](const ParamList& p) {
            const double a = param(p, "a");
            if (auto r = require(a > 0.0 && a < 1.0, "0 < a < 1")) return r;
            return require(param(p, "t") >= 0.0, "t >= 0");
        };
        Evaluator lhs = [](const ParamList& p) {
            const double a = param(p, "a");
            return times(lower_gamma(a, param(p, "t")), gamma_fn(1.0 - a));
        };
        Evaluator first = [](const ParamList& p) {
            const double a = param(p, "a");
            const double t = param(p, "t");
            return times(integrate_theta(
                             [a, t](const Angle& th) { return -std::expm1(-sec2_arg(t, th)) * cot_pow(th, 2.0 * a - 1.0); },
                             quad_cfg()),
                         2.0);
        };
        Evaluator second = [](const ParamList& p) {
            const double a = param(p, "a");
            const double t = param(p, "t");
            const auto q = integrate_theta(
                [a, t](const Angle& th) { return std::exp(-sec2_arg(t, th)) * cot_pow(th, 2.0 * a - 1.0); }, quad_cfg());
            return plus(times(q, -2.0), kPi / std::sin(kPi * a));
        };
        Comparison half;
        half.label = "second-form~pi-erf";
        half.lhs = second;
        half.rhs = [](const ParamList& p) { return times(erf(std::sqrt(param(p, "t"))), kPi); };
        half.applies = [](const ParamList& p) { return param(p, "a") == 0.5; };
        half.tol_rel = 1e-8;
        s.comparisons = {single(lhs, first, "kernel~first-form"), single(lhs, second, "kernel~second-form"), half};
        s.tol_rel = 1e-7;
        s.tol_abs = 1e-12;
        s.default_axes = {{"a", kUnitA}, {"t", {0.0, 0.01, 0.1, 1.0, 10.0}}};
        s.domain_notes = {"the second form cancels to O(1e-16) at t = 0, so I9 also accepts abs_diff <= 1e-12"};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I10";
        s.description = "∫₀^∞ (1-e^{-t}) t^{a-1} dt = -Γ(a+1)/a for -1 < a < 0";
        s.param_names = {"a"};
        s.domain_violation = [](const ParamList& p) {
            const double a = param(p, "a");
            return require(a > -1.0 && a < 0.0, "-1 < a < 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                const double a = param(p, "a");
                return integrate([a](double t) { return std::exp(std::log(-std::expm1(-t)) + (a - 1.0) * std::log(t)); },
                                 IntervalSpec::half_infinite(0.0, true), quad_cfg());
            },
            [](const ParamList& p) {
                const double a = param(p, "a");
                return exact(-gamma_fn(a + 1.0) / a);
            },
            "quadrature~closed")};
        s.tol_rel = 1e-7;
        s.default_axes = {{"a", {-0.9, -0.5, -0.1}}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I11";
        s.description =
            "erf(√(at)) = 2/(√πΓ(b)) ∫₀^{π/2} γ(1/2+b, at sec²θ) sin^{2b-1}θ dθ; at b = 1: 1 - (2/π)∫₀^{π/2} e^{-at sec²θ} dθ";
        s.param_names = {"a", "t", "b"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            if (auto r = require(param(p, "t") >= 0.0, "t >= 0")) return r;
            return require(param(p, "b") > 0.0, "b > 0");
        };
        Evaluator lhs = [](const ParamList& p) { return erf(std::sqrt(param(p, "a") * param(p, "t"))); };
        Comparison general = single(
            lhs,
            [](const ParamList& p) {
                const double at = param(p, "a") * param(p, "t");
                const double b = param(p, "b");
                const auto q = integrate_theta(
                    [at, b](const Angle& th) {
                        const double g = lower_gamma_saturating(0.5 + b, sec2_arg(at, th));
                        return g == 0.0 ? 0.0 : g * std::pow(th.sin, 2.0 * b - 1.0);
                    },
                    quad_cfg());
                return times(q, 2.0 / (kSqrtPi * gamma_fn(b)));
            },
            "erf~general-b");
        Comparison special = single(
            lhs,
            [](const ParamList& p) {
                const double at = param(p, "a") * param(p, "t");
                const auto q = integrate_theta([at](const Angle& th) { return std::exp(-sec2_arg(at, th)); }, quad_cfg());
                return plus(times(q, -2.0 / kPi), 1.0);
            },
            "erf~sec-form");
        special.applies = [](const ParamList& p) { return param(p, "b") == 1.0; };
        s.comparisons = {general, special};
        s.tol_rel = 1e-8;
        s.tol_abs = 1e-15;
        std::vector<double> t = {0.0};
        t.insert(t.end(), kTimes.begin(), kTimes.end());
        s.default_axes = {{"a", kScales}, {"t", t}, {"b", {0.5, 1.0, 2.0}}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I12";
        s.description = "e^{at}erfc(√(at)) = (2/π)∫₀^{π/2} e^{-at tan²θ} dθ";
        s.param_names = {"a", "t"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            return require(param(p, "t") >= 0.0, "t >= 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) { return erfcx(std::sqrt(param(p, "a") * param(p, "t"))); },
            [](const ParamList& p) {
                const double at = param(p, "a") * param(p, "t");
                const auto q = integrate_theta(
                    [at](const Angle& th) {
                        const double tn = th.tan();
                        return std::exp(-at * tn * tn);
                    },
                    quad_cfg());
                return times(q, 2.0 / kPi);
            },
            "erfcx~tan-form")};
        s.tol_rel = 1e-8;
        std::vector<double> t = {0.0};
        t.insert(t.end(), kTimes.begin(), kTimes.end());
        s.default_axes = {{"a", kScales}, {"t", t}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I13";
        s.description = "∫₀^∞ f(t)erfc(a√t) dt: theta-form, s-form and time-domain agree for registered pairs";
        s.param_names = {"pair", "a"};
        s.domain_violation = [](const ParamList& p) -> Reason {
            if (auto r = pair_index_violation(p)) return r;
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            const double a = param(p, "a");
            if (!(pair_at(p).sigma0() < a * a)) return "sigma0 < a^2 for " + pair_at(p).label();
            return std::nullopt;
        };
        s.comparisons = {form_pair(ReductionForm::theta, ReductionForm::s, false),
                         form_pair(ReductionForm::theta, ReductionForm::time, false),
                         form_pair(ReductionForm::s, ReductionForm::time, false)};
        s.tol_rel = 1e-7;
        s.default_axes = {{"pair", pair_indices()}, {"a", kScales}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I14";
        s.description =
            "∫₀^∞ t^r erfc(a√t) dt = Γ(r+3/2)/(a^{2r+2}√π(1+r)); ∫₀^∞ t^r erfc(at) dt = Γ(1+r/2)/(√π a^{r+1}(1+r))";
        s.param_names = {"r", "a"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "r") > -1.0, "r > -1")) return r;
            return require(param(p, "a") > 0.0, "a > 0");
        };
        Evaluator closed = [](const ParamList& p) { return exact(erfc_moment(param(p, "r"), param(p, "a"))); };
        Comparison time = single(
            closed,
            [](const ParamList& p) {
                return erfc_weighted_integral(make_power(param(p, "r")), param(p, "a"), ReductionForm::time, quad_cfg());
            },
            "closed~time-quadrature");
        Comparison sform = single(
            closed,
            [](const ParamList& p) {
                return erfc_weighted_integral(make_power(param(p, "r")), param(p, "a"), ReductionForm::s, quad_cfg());
            },
            "closed~s-form");
        Comparison linear = single(
            [](const ParamList& p) { return exact(erfc_linear_moment(param(p, "r"), param(p, "a"))); },
            [](const ParamList& p) {
                const double mu = param(p, "r");
                const double a = param(p, "a");
                return integrate(
                    [mu, a](double t) { return std::exp(mu * std::log(t) - a * a * t * t) * erfcx(a * t).value; },
                    IntervalSpec::half_infinite(0.0, mu < 0.0), quad_cfg());
            },
            "linear-closed~time-quadrature");
        s.comparisons = {time, sform, linear};
        s.tol_rel = 1e-8;
        s.default_axes = {{"r", {-0.5, 0.0, 0.5, 1.0, 2.0}}, {"a", {0.5, 1.0, 3.0}}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I15";
        s.description = "∫₀^∞ e^{a²t}f(t)erfc(a√t) dt: theta-form, s-form and time-domain agree where admissible";
        s.param_names = {"pair", "a"};
        s.domain_violation = [](const ParamList& p) -> Reason {
            if (auto r = pair_index_violation(p)) return r;
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            const auto& pr = pair_at(p);
            int admissible = 0;
            for (auto f : {ReductionForm::theta, ReductionForm::s, ReductionForm::time}) {
                admissible += exp_form_admissible(pr, f) ? 1 : 0;
            }
            if (admissible < 2) {
                return pr.label() + ": fewer than two convergent forms (needs sigma0 < 0, or power with r < -1/2)";
            }
            return std::nullopt;
        };
        for (auto [x, y] : {std::pair{ReductionForm::theta, ReductionForm::s},
                            std::pair{ReductionForm::theta, ReductionForm::time},
                            std::pair{ReductionForm::s, ReductionForm::time}}) {
            Comparison cmp = form_pair(x, y, true);
            cmp.applies = [x = x, y = y](const ParamList& p) {
                return exp_form_admissible(pair_at(p), x) && exp_form_admissible(pair_at(p), y);
            };
            s.comparisons.push_back(std::move(cmp));
        }
        s.tol_rel = 1e-7;
        s.default_axes = {{"pair", pair_indices()}, {"a", kScales}};
        s.domain_notes = {"theta-form under exp weighting evaluates F at 0, so it needs sigma0 < 0",
                          "s-form and time-domain under exp weighting diverge unless sigma0 < 0 or f = t^r with r < -1/2"};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I16";
        s.description = "∫₀^∞ t^r e^{a²t} erfc(a√t) dt = (2aΓ(r+1)/π) ∫₀^∞ ds / (s^{2r+2}(s²+a²))";
        s.param_names = {"r", "a"};
        s.domain_violation = [](const ParamList& p) -> Reason {
            const double r = param(p, "r");
            if (r >= -0.5) return std::string("r < -1/2: the left side diverges, its integrand behaves like t^{r-1/2}/(a√π)");
            if (auto rr = require(r > -1.0, "r > -1")) return rr;
            return require(param(p, "a") > 0.0, "a > 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                return erfc_weighted_exp_integral(make_power(param(p, "r")), param(p, "a"), ReductionForm::time,
                                                  quad_cfg());
            },
            [](const ParamList& p) { return exp_erfc_moment_rhs(param(p, "r"), param(p, "a"), quad_cfg()); },
            "time-quadrature~s-integral")};
        s.tol_rel = 1e-6;
        s.default_axes = {{"r", {-0.9, -0.75, -0.6}}, {"a", kScales}};
        s.domain_notes = {
            "r >= -1/2 excluded: the left side diverges (integrand ~ t^{r-1/2}/(a√π) as t grows), although the "
            "s-integral over [a, inf) stays finite for r > -3/2",
            "the s-integral runs over [0, inf); over [a, inf) it does not match the left side"};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I17";
        s.description = "∫_a^∞ e^{-b²t²} / (t√(t²-a²)) dt = (π/(2a)) erfc(ab)";
        s.param_names = {"a", "b"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            return require(param(p, "b") > 0.0, "b > 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) { return gauss_singular_integral(param(p, "a"), param(p, "b"), quad_cfg()); },
            [](const ParamList& p) { return exact(gauss_singular_closed(param(p, "a"), param(p, "b"))); },
            "quadrature~closed")};
        s.tol_rel = 1e-9;
        s.default_axes = {{"a", kScales}, {"b", kScales}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I18";
        s.description = "∫₀^∞ e^{-b²t²} / (t²+a²) dt = (π/(2a)) e^{a²b²} erfc(ab)";
        s.param_names = {"a", "b"};
        s.domain_violation = [](const ParamList& p) {
            if (auto r = require(param(p, "a") > 0.0, "a > 0")) return r;
            return require(param(p, "b") > 0.0, "b > 0");
        };
        s.comparisons = {single(
            [](const ParamList& p) { return gauss_lorentz_integral(param(p, "a"), param(p, "b"), quad_cfg()); },
            [](const ParamList& p) { return exact(gauss_lorentz_closed(param(p, "a"), param(p, "b"))); },
            "quadrature~closed")};
        s.tol_rel = 1e-9;
        s.default_axes = {{"a", kScales}, {"b", kScales}};
        s.extra_points = {{{"a", 10.0}, {"b", 10.0}}};
        c.push_back(std::move(s));
    }
    {
        IdentitySpec s;
        s.id = "I19";
        s.description = "Γ(a)Γ(1-a) = π csc(πa)";
        s.param_names = {"a"};
        s.domain_violation = [](const ParamList& p) {
            const double a = param(p, "a");
            return require(a > 0.0 && a < 1.0, "0 < a < 1");
        };
        s.comparisons = {single(
            [](const ParamList& p) {
                const double a = param(p, "a");
                return exact(gamma_fn(a) * gamma_fn(1.0 - a));
            },
            [](const ParamList& p) { return exact(kPi / std::sin(kPi * param(p, "a"))); }, "gamma~csc")};
        s.tol_rel = 1e-12;
        s.default_axes = {{"a", kUnitA}};
        c.push_back(std::move(s));
    }
    return c;
}

CheckRecord evaluate(const IdentitySpec& spec, const Comparison& cmp, const ParamList& params, Tolerances tol) {
    const auto start = std::chrono::steady_clock::now();
    CheckRecord rec;
    rec.identity = spec.id;
    rec.comparison = cmp.label;
    rec.params = params;
    rec.tol_rel = tol.rel;
    rec.tol_abs = tol.abs;
    auto side = [&](const Evaluator& f, double& value, double& err, const char* which) {
        try {
            const auto r = f(params);
            value = r.value;
            err = r.abs_err;
        } catch (const ConvergenceError& e) {
            value = e.best().value;
            err = e.best().abs_err;
            if (rec.error.empty()) rec.error = std::string(which) + ": " + e.what();
        } catch (const std::exception& e) {
            if (rec.error.empty()) rec.error = std::string(which) + ": " + e.what();
        }
    };
    side(cmp.lhs, rec.lhs_value, rec.lhs_err, "lhs");
    side(cmp.rhs, rec.rhs_value, rec.rhs_err, "rhs");
    rec.score();
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

}  // namespace

double param(const ParamList& p, std::string_view name) {
    for (const auto& [k, v] : p) {
        if (k == name) return v;
    }
    throw std::out_of_range("missing parameter '" + std::string(name) + "'");
}

const std::vector<IdentitySpec>& catalog() {
    static const std::vector<IdentitySpec> specs = build_catalog();
    return specs;
}

const IdentitySpec* find_identity(std::string_view id) {
    for (const auto& s : catalog()) {
        if (s.id == id) return &s;
    }
    return nullptr;
}

std::vector<CheckRecord> run_identity(const IdentitySpec& spec, const ParamList& params,
                                      std::optional<Tolerances> override_tol) {
    for (const auto& name : spec.param_names) {
        bool found = false;
        for (const auto& kv : params) found = found || kv.first == name;
        if (!found) throw DomainError(spec.id + ": missing parameter '" + name + "'");
    }
    if (auto reason = spec.domain_violation(params)) {
        throw DomainError(spec.id + ": requires " + *reason + " (at " + format_params(params) + ")");
    }
    std::vector<CheckRecord> out;
    for (const auto& cmp : spec.comparisons) {
        if (cmp.applies && !cmp.applies(params)) continue;
        Tolerances tol = override_tol.value_or(Tolerances{cmp.tol_rel.value_or(spec.tol_rel), spec.tol_abs});
        out.push_back(evaluate(spec, cmp, params, tol));
    }
    return out;
}

std::vector<ParamList> expand_grid(const IdentitySpec& spec, const GridAxes& overrides) {
    GridAxes axes;
    for (const auto& name : spec.param_names) {
        const std::vector<double>* values = nullptr;
        for (const auto& [k, v] : overrides) {
            if (k == name) values = &v;
        }
        for (const auto& [k, v] : spec.default_axes) {
            if (!values && k == name) values = &v;
        }
        if (!values) throw DomainError(spec.id + ": no grid values for parameter '" + name + "'");
        axes.emplace_back(name, *values);
    }
    for (const auto& [k, v] : overrides) {
        bool known = false;
        for (const auto& name : spec.param_names) known = known || name == k;
        if (!known) throw DomainError(spec.id + ": unknown grid parameter '" + k + "'");
    }

    std::vector<ParamList> points = {ParamList{}};
    for (const auto& [name, values] : axes) {
        std::vector<ParamList> next;
        for (const auto& prefix : points) {
            for (double v : values) {
                auto p = prefix;
                p.emplace_back(name, v);
                next.push_back(std::move(p));
            }
        }
        points = std::move(next);
    }
    if (overrides.empty()) points.insert(points.end(), spec.extra_points.begin(), spec.extra_points.end());
    return points;
}

GridResult run_grid(const IdentitySpec& spec, const GridAxes& overrides) {
    GridResult out;
    out.notes = spec.domain_notes;
    for (const auto& point : expand_grid(spec, overrides)) {
        if (auto reason = spec.domain_violation(point)) {
            out.skipped.push_back({spec.id, point, "outside domain: requires " + *reason});
            continue;
        }
        auto recs = run_identity(spec, point);
        out.records.insert(out.records.end(), std::make_move_iterator(recs.begin()),
                           std::make_move_iterator(recs.end()));
    }
    if (out.records.empty()) out.notes.push_back(spec.id + ": no admissible grid point");
    return out;
}

}  // namespace igf
