#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "igf/laplace.hpp"

using namespace igf;

namespace {

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("power pairs") {
    CHECK(make_power(0.0).laplace(2.0) == 0.5);
    CHECK(make_power(1.0).laplace(1.0) == 1.0);

    // Oracle: direct quadrature of t^{-1/2} e^{-4t}.
    QuadConfig tight;
    tight.rel_tol = 1e-14;
    tight.abs_tol = 1e-300;
    const auto q = integrate([](double t) { return std::exp(-0.5 * std::log(t) - 4.0 * t); },
                             IntervalSpec::half_infinite(0.0, true), tight);
    CHECK(rel_diff(q.value, std::sqrt(std::numbers::pi) / 2.0) <= 1e-12);
    CHECK(rel_diff(make_power(-0.5).laplace(4.0), q.value) <= 1e-13);

    const auto p = make_power(-0.5);
    CHECK(p.sigma0() == 0.0);
    CHECK(p.time_kind() == TimeKind::ordinary);
    CHECK(p.singular_at_zero());
    CHECK(p.power_exponent() == -0.5);
    CHECK(p.time(4.0) == 0.5);
    CHECK_THROWS_AS(make_power(-1.0), DomainError);
    CHECK_THROWS_AS(make_power(-3.0), DomainError);
}

TEST_CASE("dirac pairs") {
    const auto d1 = make_dirac(1.0);
    CHECK(d1.laplace(0.0) == 1.0);
    CHECK(rel_diff(d1.laplace(1.0), std::exp(-1.0)) <= 1e-16);
    CHECK(rel_diff(make_dirac(2.0).laplace(0.5), std::exp(-1.0)) <= 1e-16);
    CHECK(d1.laplace(-3.0) == std::exp(3.0));
    CHECK(d1.sigma0() == -std::numeric_limits<double>::infinity());
    CHECK(d1.impulse_location() == 1.0);
    CHECK_THROWS_AS(d1.time(1.0), UnsupportedError);
    CHECK_THROWS_AS(make_dirac(0.0), DomainError);
    CHECK_THROWS_AS(make_dirac(-2.0), DomainError);
}

TEST_CASE("exponential pairs") {
    CHECK(make_exponential(0.0).laplace(3.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-16));
    CHECK(make_exponential(-1.0).laplace(1.0) == 0.5);
    CHECK(make_exponential(2.0).laplace(2.5) == 2.0);
    CHECK(make_exponential(2.0).sigma0() == 2.0);
    CHECK_THROWS_AS(make_exponential(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("F at or below sigma0 is a domain error") {
    CHECK_THROWS_AS(make_power(0.0).laplace(0.0), DomainError);
    CHECK_THROWS_AS(make_power(2.0).laplace(-1.0), DomainError);
    CHECK_THROWS_AS(make_exponential(2.0).laplace(2.0), DomainError);
    CHECK_THROWS_AS(make_exponential(2.0).laplace(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK(make_power(0.5).laplace(std::numeric_limits<double>::infinity()) == 0.0);
}

TEST_CASE("labels parse back to the same pair") {
    for (const auto& p : PairRegistry::standard().pairs()) {
        const auto q = parse_pair(p.label());
        CHECK(q.label() == p.label());
        CHECK(q.sigma0() == p.sigma0());
        CHECK(q.laplace(3.0) == p.laplace(3.0));
    }
    CHECK(parse_pair(" power( r = -0.5 ) ").label() == "power(r=-0.5)");
    CHECK(parse_pair("exp(c=+2)").label() == "exp(c=2)");
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(parse_pair("power"), ParseError);
    CHECK_THROWS_AS(parse_pair("power(r)"), ParseError);
    CHECK_THROWS_AS(parse_pair("power(r=)"), ParseError);
    CHECK_THROWS_AS(parse_pair("power(r=1x)"), ParseError);
    CHECK_THROWS_AS(parse_pair("power(q=1)"), ParseError);
    CHECK_THROWS_AS(parse_pair("power(r=1,r=2)"), ParseError);
    CHECK_THROWS_AS(parse_pair("gauss(r=1)"), ParseError);
    CHECK_THROWS_AS(parse_pair("dirac(b=1"), ParseError);
    CHECK_THROWS_AS(parse_pair("dirac(b=-1)"), DomainError);
}

TEST_CASE("verify_pair examples") {
    const auto power0 = verify_pair(make_power(0.0));
    REQUIRE(power0.size() == 5);
    for (const auto& rec : power0) CHECK(rec.pass);
    CHECK(power0.front().params.at(0).second == doctest::Approx(1.0));
    CHECK(power0.back().params.at(0).second == doctest::Approx(100.0));

    for (const auto& rec : verify_pair(make_power(-0.5))) {
        INFO(format_params(rec.params) << " rel " << rec.rel_diff);
        CHECK(rec.pass);
    }

    const auto exp1 = make_exponential(1.0);
    const auto q = integrate([&](double t) { return exp1.damped(t, 1.5); }, IntervalSpec::half_infinite(0.0));
    CHECK(std::abs(q.value - 2.0) <= 2e-8);

    CHECK_THROWS_AS(verify_pair(make_dirac(1.0)), UnsupportedError);
}

TEST_CASE("every registered ordinary pair verifies") {
    for (const auto& p : PairRegistry::standard().pairs()) {
        if (p.time_kind() != TimeKind::ordinary) continue;
        for (const auto& rec : verify_pair(p)) {
            INFO(rec.identity << " " << format_params(rec.params) << " rel " << rec.rel_diff << " " << rec.error);
            CHECK(rec.pass);
            CHECK(rec.rel_diff <= kPairTolerance);
        }
    }
}

TEST_CASE("damped forms stay finite where the factors would overflow") {
    const auto e = make_exponential(100.0);
    CHECK(std::isfinite(e.damped(7.2, 101.0)));
    CHECK(e.damped(7.2, 101.0) == doctest::Approx(std::exp(-7.2)));
    CHECK(make_power(2.0).damped(1e300, 1.0) == 0.0);
}

TEST_CASE("registry lookup") {
    const auto& reg = PairRegistry::standard();
    CHECK(reg.find("dirac(b=0.25)") != nullptr);
    CHECK(reg.find("power(r=-0.5)")->power_exponent() == -0.5);
    CHECK(reg.find("power(r=7)") == nullptr);
}
