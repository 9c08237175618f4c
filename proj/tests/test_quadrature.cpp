#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "igf/gamma.hpp"
#include "igf/quadrature.hpp"

using namespace igf;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("integrate examples") {
    const auto one = integrate([](double) { return 1.0; }, IntervalSpec::finite(0.0, kPi / 2));
    CHECK(rel_diff(one.value, kPi / 2) <= 1e-14);
    CHECK(one.method == Method::quadrature);
    CHECK(one.evals > 0);

    const auto root = integrate([](double t) { return 1.0 / std::sqrt(t); }, IntervalSpec::finite(0.0, 1.0, true));
    CHECK(rel_diff(root.value, 2.0) <= 1e-10);

    const auto decay = integrate([](double t) { return std::exp(-t); }, IntervalSpec::half_infinite(0.0));
    CHECK(rel_diff(decay.value, 1.0) <= 1e-10);
}

TEST_CASE("integrate_theta examples") {
    const auto beta11 = integrate_theta([](const Angle& a) { return a.cos * a.sin; });
    CHECK(rel_diff(2.0 * beta11.value, 1.0) <= 1e-12);
    const auto beta_half = integrate_theta([](const Angle&) { return 1.0; });
    CHECK(rel_diff(2.0 * beta_half.value, kPi) <= 1e-14);

    // cot^0 θ (1 - e^{-sec²θ}) at t = 1 reproduces γ(1/2, 1) Γ(1/2) = π erf(1).
    const auto incomplete = integrate_theta([](const Angle& a) { return -std::expm1(-a.sec2()); });
    CHECK(rel_diff(2.0 * incomplete.value, lower_gamma(0.5, 1.0).value * gamma_fn(0.5)) <= 1e-10);
    CHECK(rel_diff(2.0 * incomplete.value, std::numbers::pi * 0.84270079294971486934) <= 1e-10);
}

TEST_CASE("angle nodes keep sine and cosine accurate at both ends") {
    // ∫ cot^{-0.8}θ dθ = ∫ tan^{0.8}θ dθ = (π/2) sec(0.4π): singular at π/2.
    const auto r = integrate_theta([](const Angle& a) { return std::pow(a.sin / a.cos, 0.8); });
    CHECK(rel_diff(r.value, kPi / 2 / std::cos(0.4 * kPi)) <= 1e-9);
    const auto l = integrate_theta([](const Angle& a) { return std::pow(a.cos / a.sin, 0.8); });
    CHECK(rel_diff(l.value, kPi / 2 / std::cos(0.4 * kPi)) <= 1e-9);
}

TEST_CASE("error estimate is honest on t^p e^{-t}") {
    for (double p : {-0.5, 0.0, 0.5, 2.0}) {
        const auto r = integrate([p](double t) { return std::pow(t, p) * std::exp(-t); },
                                 IntervalSpec::finite(0.0, 10.0, p < 0.0));
        const double exact = lower_gamma(p + 1.0, 10.0).value;
        INFO("p = " << p << " err = " << r.abs_err);
        CHECK(std::abs(r.value - exact) <= 10.0 * r.abs_err);
        CHECK(r.abs_err <= 1e-10 * std::abs(exact));
    }
}

TEST_CASE("linearity and additivity") {
    const auto f = [](double t) { return std::sin(t) + t * t; };
    const auto g = [](double t) { return std::exp(-t) * std::cos(3.0 * t); };
    const double alpha = 2.5;
    const double beta = -0.75;
    const auto dom = IntervalSpec::finite(0.0, 2.0);
    const auto rf = integrate(f, dom);
    const auto rg = integrate(g, dom);
    const auto rc = integrate([&](double t) { return alpha * f(t) + beta * g(t); }, dom);
    const double combined = std::abs(alpha) * rf.abs_err + std::abs(beta) * rg.abs_err + rc.abs_err;
    CHECK(std::abs(rc.value - (alpha * rf.value + beta * rg.value)) <= combined + 1e-15);

    const auto left = integrate(f, IntervalSpec::finite(0.0, 1.0));
    const auto right = integrate(f, IntervalSpec::finite(1.0, 2.0));
    CHECK(std::abs(left.value + right.value - rf.value) <= left.abs_err + right.abs_err + rf.abs_err + 1e-15);
}

TEST_CASE("endpoint singularity power law") {
    for (double q : {-0.9, -0.5, -0.1}) {
        const auto r = integrate([q](double t) { return std::pow(t, q); }, IntervalSpec::finite(0.0, 1.0, true));
        INFO("q = " << q);
        CHECK(rel_diff(r.value, 1.0 / (q + 1.0)) <= QuadConfig{}.rel_tol);
    }
}

TEST_CASE("gaps stay exact near a shifted singular endpoint") {
    // ∫_a^∞ dt / (t √(t² - a²)) = π / (2a)
    const double a = 3.0;
    const auto r = integrate_with_gaps(
        [a](const Abscissa& p) { return 1.0 / (p.x * std::sqrt(p.lower_gap * (2.0 * a + p.lower_gap))); },
        IntervalSpec::half_infinite(a, true));
    CHECK(rel_diff(r.value, kPi / (2.0 * a)) <= 1e-10);
}

TEST_CASE("algebraic decay on a half-infinite interval") {
    const auto r = integrate([](double t) { return 1.0 / (1.0 + t * t); }, IntervalSpec::half_infinite(0.0));
    CHECK(rel_diff(r.value, kPi / 2) <= 1e-10);
    // t^{-1.1} overflows below t ~ 1e-280 although the product stays bounded.
    const auto slow = integrate([](double t) { return std::pow(t, -1.1) * -std::expm1(-t); },
                                IntervalSpec::half_infinite(0.0, true));
    CHECK(rel_diff(slow.value, -gamma_fn(0.9) / -0.1) <= 1e-9);
}

TEST_CASE("non-finite interior value is an integrand error with the abscissa") {
    try {
        (void)integrate([](double t) { return 1.0 / (t - 0.5); }, IntervalSpec::finite(0.0, 1.0));
        FAIL("expected IntegrandError");
    } catch (const IntegrandError& e) {
        CHECK(e.abscissa() == 0.5);
    }
}

TEST_CASE("non-finite value on a collapsed singular endpoint is dropped") {
    // x rounds onto 1.0 long before the gap does; 1/(1-x) computed naively is inf there.
    const auto r = integrate([](double t) { return std::pow(1.0 - t, -0.5); }, IntervalSpec::finite(0.0, 1.0, false, true));
    CHECK(std::isfinite(r.value));
    CHECK_THROWS_AS(
        integrate([](double t) { return std::pow(1.0 - t, -0.5); }, IntervalSpec::finite(0.0, 1.0, false, false)),
        IntegrandError);
}

TEST_CASE("budget exhaustion carries the best estimate") {
    QuadConfig cfg;
    cfg.max_evals = 60;
    try {
        (void)integrate([](double t) { return std::exp(-t); }, IntervalSpec::half_infinite(0.0), cfg);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.best().evals <= cfg.max_evals);
        CHECK(std::abs(e.best().value - 1.0) < 0.1);
    }

    QuadConfig shallow;
    shallow.max_level = 2;
    CHECK_THROWS_AS(integrate([](double t) { return std::exp(-t); }, IntervalSpec::half_infinite(0.0), shallow),
                    ConvergenceError);
}

TEST_CASE("configuration and interval validation") {
    QuadConfig bad;
    bad.rel_tol = 1e-16;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = {};
    bad.max_level = 13;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad = {};
    bad.abs_tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(IntervalSpec::finite(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(IntervalSpec::finite(0.0, std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(IntervalSpec::half_infinite(std::numeric_limits<double>::quiet_NaN()), DomainError);
}
