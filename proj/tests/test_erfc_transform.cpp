#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "igf/erfc_transform.hpp"
#include "igf/gamma.hpp"

using namespace igf;

namespace {

constexpr double kPi = std::numbers::pi;

// Frozen reference values (50-digit arithmetic).
constexpr double kErfc1 = 0.15729920705028513066;
constexpr double kErfcx1 = 0.42758357615580700441;
constexpr double kErfcx2 = 0.25539567631050574387;
constexpr double kHalfPiErfc1 = 0.24708501664233779;
constexpr double kQuarterPiErfc1 = 0.12354250832116889;
constexpr double kHalfPiErfcx1 = 0.67164671082336759;
// Γ(r+1) a^{-2r-2} / cos(π(r+1)) for (r, a) = (-0.75, 1) and (-0.6, 2).
constexpr double kExpMoment075 = 5.12738670408169514590;
constexpr double kExpMoment06a2 = 4.12274448560554832452;

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

QuadConfig tight() {
    QuadConfig cfg;
    cfg.rel_tol = 1e-12;
    cfg.abs_tol = 1e-300;
    return cfg;
}

constexpr ReductionForm kForms[] = {ReductionForm::theta, ReductionForm::s, ReductionForm::time};

}  // namespace

TEST_CASE("form names") {
    for (auto f : kForms) CHECK(parse_form(to_string(f)) == f);
    CHECK(parse_form("theta") == ReductionForm::theta);
    CHECK(parse_form("s") == ReductionForm::s);
    CHECK(parse_form("time") == ReductionForm::time);
    CHECK_FALSE(parse_form("laplace").has_value());
}

TEST_CASE("erfc_weighted_integral examples") {
    for (auto f : kForms) {
        INFO(to_string(f));
        CHECK(rel_diff(erfc_weighted_integral(make_power(0.0), 1.0, f).value, 0.5) <= 1e-9);
    }
    const auto d = erfc_weighted_integral(make_dirac(1.0), 1.0, ReductionForm::theta);
    CHECK(rel_diff(d.value, kErfc1) <= 1e-10);
    CHECK(d.method == Method::quadrature);
    CHECK(erfc_weighted_integral(make_dirac(1.0), 1.0, ReductionForm::time).method == Method::closed_form);

    // Γ(5/2) / (2⁴ √π 2) = 3/128.
    CHECK(rel_diff(erfc_weighted_integral(make_power(1.0), 2.0, ReductionForm::s).value, 3.0 / 128.0) <= 1e-9);
    CHECK(rel_diff(erfc_weighted_integral(make_power(1.0), 2.0, ReductionForm::time).value, 3.0 / 128.0) <= 1e-9);
}

TEST_CASE("transform forms refuse pairs whose abscissa of convergence is too large") {
    const auto e = make_exponential(2.0);
    for (auto f : kForms) CHECK_THROWS_AS(erfc_weighted_integral(e, 1.0, f), DomainError);
    CHECK_NOTHROW(erfc_weighted_integral(e, 1.5, ReductionForm::theta));
    try {
        (void)erfc_weighted_integral(e, 1.0, ReductionForm::theta);
        FAIL("expected DomainError");
    } catch (const DomainError& err) {
        CHECK(std::string(err.what()).find("exp(c=2)") != std::string::npos);
    }
    CHECK_THROWS_AS(erfc_weighted_integral(make_power(0.0), 0.0, ReductionForm::theta), DomainError);
    CHECK_THROWS_AS(erfc_weighted_integral(make_power(0.0), -1.0, ReductionForm::s), DomainError);
}

TEST_CASE("forms agree for pairs with negative abscissa of convergence") {
    for (const auto& p : PairRegistry::standard().pairs()) {
        if (!(p.sigma0() < 0.0)) continue;
        for (double a : {0.5, 1.0, 2.0}) {
            const double th = erfc_weighted_integral(p, a, ReductionForm::theta).value;
            const double s = erfc_weighted_integral(p, a, ReductionForm::s).value;
            const double t = erfc_weighted_integral(p, a, ReductionForm::time).value;
            INFO(p.label() << " a = " << a);
            CHECK(rel_diff(th, s) <= 1e-7);
            CHECK(rel_diff(th, t) <= 1e-7);
            CHECK(rel_diff(s, t) <= 1e-7);
        }
    }
}

TEST_CASE("moment formula matches the theta-form") {
    for (double r : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
        for (double a : {0.5, 1.0, 3.0}) {
            INFO("r = " << r << " a = " << a);
            const double th = erfc_weighted_integral(make_power(r), a, ReductionForm::theta).value;
            CHECK(rel_diff(erfc_moment(r, a), th) <= 1e-8);
        }
    }
}

TEST_CASE("cosh substitution and the singular s-form are the same integral") {
    for (const auto& p : PairRegistry::standard().pairs()) {
        for (double a : {0.5, 1.0, 2.0}) {
            if (!(p.sigma0() < a * a)) continue;
            const auto direct = erfc_weighted_integral(p, a, ReductionForm::s, tight());
            const auto cosh = detail::erfc_weighted_cosh_form(p, a, tight());
            const auto theta = erfc_weighted_integral(p, a, ReductionForm::theta, tight());
            INFO(p.label() << " a = " << a);
            CHECK(std::abs(cosh.value - theta.value) <= 10.0 * (cosh.abs_err + theta.abs_err) + 1e-15);
            CHECK(rel_diff(direct.value, cosh.value) <= 1e-10);
        }
    }
}

TEST_CASE("exp-weighted examples") {
    CHECK(rel_diff(erfc_weighted_exp_integral(make_dirac(1.0), 1.0, ReductionForm::theta).value, kErfcx1) <= 1e-10);
    CHECK(rel_diff(erfc_weighted_exp_integral(make_dirac(4.0), 1.0, ReductionForm::theta).value, kErfcx2) <= 1e-10);
    CHECK(rel_diff(erfc_weighted_exp_integral(make_dirac(4.0), 1.0, ReductionForm::time).value, kErfcx2) <= 1e-15);

    const auto p = make_power(-0.75);
    const auto s = erfc_weighted_exp_integral(p, 1.0, ReductionForm::s);
    const auto t = erfc_weighted_exp_integral(p, 1.0, ReductionForm::time);
    CHECK(rel_diff(s.value, t.value) <= 1e-6);
    CHECK(rel_diff(s.value, kExpMoment075) <= 1e-8);
}

TEST_CASE("exp-weighted forms agree where all three apply") {
    for (const auto& p : PairRegistry::standard().pairs()) {
        if (!(p.sigma0() < 0.0)) continue;
        for (double a : {0.5, 1.0, 2.0}) {
            const double th = erfc_weighted_exp_integral(p, a, ReductionForm::theta).value;
            const double s = erfc_weighted_exp_integral(p, a, ReductionForm::s).value;
            const double t = erfc_weighted_exp_integral(p, a, ReductionForm::time).value;
            INFO(p.label() << " a = " << a);
            CHECK(rel_diff(th, s) <= 1e-7);
            CHECK(rel_diff(th, t) <= 1e-7);
        }
    }
}

TEST_CASE("exp-weighted guards name the failing condition") {
    try {
        (void)erfc_weighted_exp_integral(make_power(-0.75), 1.0, ReductionForm::theta);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("forbids theta-form under exp weighting") != std::string::npos);
    }
    CHECK_THROWS_AS(erfc_weighted_exp_integral(make_power(0.0), 1.0, ReductionForm::s), DomainError);
    CHECK_THROWS_AS(erfc_weighted_exp_integral(make_power(-0.5), 1.0, ReductionForm::time), DomainError);
    CHECK_THROWS_AS(erfc_weighted_exp_integral(make_exponential(0.0), 1.0, ReductionForm::s), DomainError);
}

TEST_CASE("moment examples") {
    CHECK(rel_diff(erfc_moment(0.0, 1.0), 0.5) <= 1e-15);
    CHECK(rel_diff(erfc_moment(0.0, 2.0), 0.125) <= 1e-15);
    CHECK(rel_diff(erfc_moment(-0.5, 1.0), 2.0 / std::sqrt(kPi)) <= 1e-15);
    CHECK(rel_diff(erfc_linear_moment(1.0, 1.0), 0.25) <= 1e-15);
    CHECK(rel_diff(erfc_linear_moment(0.0, 1.0), 1.0 / std::sqrt(kPi)) <= 1e-15);
    CHECK(rel_diff(erfc_linear_moment(0.0, 3.0), 1.0 / (3.0 * std::sqrt(kPi))) <= 1e-15);
    CHECK_THROWS_AS(erfc_moment(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(erfc_moment(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(erfc_linear_moment(-2.0, 1.0), DomainError);
}

TEST_CASE("moments against direct quadrature") {
    for (double r : {-0.5, 0.0, 1.5}) {
        const auto q = integrate([r](double t) { return std::exp(r * std::log(t) - t) * igf::erfcx(std::sqrt(t)).value; },
                                 IntervalSpec::half_infinite(0.0, r < 0.0), tight());
        CHECK(rel_diff(erfc_moment(r, 1.0), q.value) <= 1e-10);
    }
    const auto q = integrate([](double t) { return t * igf::erfc(2.0 * t).value; }, IntervalSpec::half_infinite(0.0), tight());
    CHECK(rel_diff(erfc_linear_moment(1.0, 2.0), q.value) <= 1e-10);
}

TEST_CASE("moment scaling in a") {
    for (double r : {-0.9, -0.5, 0.0, 0.5, 3.0}) {
        const double base = erfc_moment(r, 1.0);
        for (double a : {0.1, 0.7, 2.0, 13.0}) {
            CHECK(rel_diff(erfc_moment(r, a) * std::pow(a, 2.0 * r + 2.0), base) <= 4e-16);
            CHECK(rel_diff(erfc_linear_moment(r, a) * std::pow(a, r + 1.0), erfc_linear_moment(r, 1.0)) <= 4e-16);
        }
    }
}

TEST_CASE("Gaussian integrals") {
    CHECK(rel_diff(gauss_singular_closed(1.0, 1.0), kHalfPiErfc1) <= 1e-15);
    CHECK(rel_diff(gauss_singular_closed(2.0, 0.5), kQuarterPiErfc1) <= 1e-15);
    CHECK(std::abs(gauss_singular_integral(1.0, 1.0).value - gauss_singular_closed(1.0, 1.0)) <= 1e-9);
    CHECK(std::abs(gauss_singular_integral(2.0, 0.5).value - gauss_singular_closed(2.0, 0.5)) <= 1e-9);

    CHECK(rel_diff(gauss_lorentz_closed(1.0, 1.0), kHalfPiErfcx1) <= 1e-15);
    CHECK(std::abs(gauss_lorentz_integral(1.0, 1.0).value - gauss_lorentz_closed(1.0, 1.0)) <= 1e-9);
    const double big = gauss_lorentz_closed(10.0, 10.0);
    CHECK(std::isfinite(big));
    CHECK(big > 0.0);
    CHECK(rel_diff(gauss_lorentz_integral(10.0, 10.0, tight()).value, big) <= 1e-8);
    CHECK_THROWS_AS(gauss_singular_closed(0.0, 1.0), DomainError);
}

TEST_CASE("exp moment right side") {
    const auto a = exp_erfc_moment_rhs(-0.75, 1.0);
    CHECK(rel_diff(a.value, kExpMoment075) <= 1e-8);
    const auto t = erfc_weighted_exp_integral(make_power(-0.75), 1.0, ReductionForm::time);
    CHECK(rel_diff(a.value, t.value) <= 1e-6);

    const auto b = exp_erfc_moment_rhs(-0.6, 2.0);
    CHECK(rel_diff(b.value, kExpMoment06a2) <= 1e-8);
    const auto tb = erfc_weighted_exp_integral(make_power(-0.6), 2.0, ReductionForm::time);
    CHECK(rel_diff(b.value, tb.value) <= 1e-6);

    CHECK_THROWS_AS(exp_erfc_moment_rhs(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(exp_erfc_moment_rhs(-1.0, 1.0), DomainError);

    // Starting the s-integral at a instead of 0 gives a different number.
    CHECK(rel_diff(exp_erfc_moment_rhs_from_a(0.0, 1.0).value, 2.0 / kPi * (1.0 - kPi / 4.0)) <= 1e-10);
    CHECK(rel_diff(exp_erfc_moment_rhs_from_a(-0.75, 1.0).value, kExpMoment075) > 0.1);
}
