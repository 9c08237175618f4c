#include "igf/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace igf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kMinLevel = 3;

// Transformed-variable ranges. Tanh-sinh stops where e^{-2|v|} reaches the
// bottom of the normal range; exp-sinh where e^{v} (and its weight) stays finite.
constexpr double kTanhSinhTMax = 6.1;
constexpr double kExpSinhTMin = -6.8;
constexpr double kExpSinhTMax = 6.79;
constexpr double kCollapsedGap = 1e-280;

struct Node {
    Abscissa at;
    double weight;
};

struct TanhSinh {
    double a, b, half;

    double t_min() const { return -kTanhSinhTMax; }
    double t_max() const { return kTanhSinhTMax; }

    Node operator()(double t) const {
        const double v = kHalfPi * std::sinh(std::abs(t));
        const double e = std::exp(-2.0 * v);
        const double near = half * 2.0 * e / (1.0 + e);  // gap to the endpoint on t's side
        const double far = (b - a) - near;
        const double weight = half * kHalfPi * std::cosh(t) * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if (t < 0.0) return {{a + near, near, far}, weight};
        return {{b - near, far, near}, weight};
    }
};

struct ExpSinh {
    double a;

    double t_min() const { return kExpSinhTMin; }
    double t_max() const { return kExpSinhTMax; }

    Node operator()(double t) const {
        const double gap = std::exp(kHalfPi * std::sinh(t));
        return {{a + gap, gap, std::numeric_limits<double>::infinity()}, kHalfPi * std::cosh(t) * gap};
    }
};

std::string abscissa_message(double x) {
    std::ostringstream os;
    os.precision(17);
    os << "integrate: integrand is not finite at interior abscissa x = " << x;
    return os.str();
}

template <class Rule>
EvalResult run_de(const Rule& rule, const GapIntegrand& f, const IntervalSpec& domain, const QuadConfig& cfg) {
    cfg.validate();
    std::uint64_t evals = 0;
    double sum = 0.0;
    double l1 = 0.0;

    auto accumulate = [&](double t) {
        const Node node = rule(t);
        if (node.weight == 0.0) return;
        double y = f(node.at);
        ++evals;
        if (!std::isfinite(y)) {
            const bool at_lower = domain.singular_lower &&
                                  (node.at.x == domain.lower || node.at.lower_gap <= kCollapsedGap);
            const bool at_upper = domain.kind == IntervalKind::finite && domain.singular_upper &&
                                  (node.at.x == domain.upper || node.at.upper_gap <= kCollapsedGap);
            if (!(at_lower || at_upper)) throw IntegrandError(abscissa_message(node.at.x), node.at.x);
            y = 0.0;
        }
        sum += node.weight * y;
        l1 += std::abs(node.weight * y);
    };

    const double t_lo = rule.t_min();
    const double t_hi = rule.t_max();
    for (double t = std::ceil(t_lo); t <= t_hi; t += 1.0) accumulate(t);

    double h = 1.0;
    double estimate = sum;
    EvalResult best{estimate, std::abs(estimate), Method::quadrature, evals};

    for (int level = 1; level <= cfg.max_level; ++level) {
        const double step = h;
        h *= 0.5;
        const auto new_nodes = static_cast<std::uint64_t>((t_hi - t_lo) / step) + 2;
        if (evals + new_nodes > cfg.max_evals) {
            throw ConvergenceError("integrate: evaluation budget exhausted before reaching tolerance", best);
        }
        for (double t = h; t <= t_hi; t += step) accumulate(t);
        for (double t = -h; t >= t_lo; t -= step) accumulate(t);

        const double next = h * sum;
        const double diff = std::abs(next - estimate);
        const double rounding = 8.0 * kEps * h * l1;
        estimate = next;
        best = {estimate, std::max(diff, rounding), Method::quadrature, evals};
        if (!std::isfinite(estimate)) {
            throw ConvergenceError("integrate: estimate is not finite", {0.0, 0.0, Method::quadrature, evals});
        }
        if (level >= kMinLevel && diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(estimate))) return best;
    }
    throw ConvergenceError("integrate: refinement depth exhausted before reaching tolerance", best);
}

}  // namespace

void QuadConfig::validate() const {
    if (!(rel_tol >= 1e-15) || !std::isfinite(rel_tol)) throw DomainError("QuadConfig: rel_tol must be >= 1e-15");
    if (!(abs_tol >= 1e-300) || !std::isfinite(abs_tol)) throw DomainError("QuadConfig: abs_tol must be >= 1e-300");
    if (max_level < 1 || max_level > 12) throw DomainError("QuadConfig: max_level must lie in [1, 12]");
    if (max_evals == 0) throw DomainError("QuadConfig: max_evals must be positive");
}

IntervalSpec IntervalSpec::finite(double lower, double upper, bool singular_lower, bool singular_upper) {
    IntervalSpec d{IntervalKind::finite, lower, upper, singular_lower, singular_upper};
    d.validate();
    return d;
}

IntervalSpec IntervalSpec::half_infinite(double lower, bool singular_lower) {
    IntervalSpec d{IntervalKind::half_infinite, lower, std::numeric_limits<double>::infinity(), singular_lower, false};
    d.validate();
    return d;
}

void IntervalSpec::validate() const {
    if (!std::isfinite(lower)) throw DomainError("IntervalSpec: lower bound must be finite");
    if (kind == IntervalKind::finite && (!std::isfinite(upper) || !(lower < upper))) {
        throw DomainError("IntervalSpec: finite interval requires lower < upper, both finite");
    }
}

EvalResult integrate_with_gaps(const GapIntegrand& f, const IntervalSpec& domain, const QuadConfig& cfg) {
    domain.validate();
    if (domain.kind == IntervalKind::finite) {
        return run_de(TanhSinh{domain.lower, domain.upper, 0.5 * (domain.upper - domain.lower)}, f, domain, cfg);
    }
    return run_de(ExpSinh{domain.lower}, f, domain, cfg);
}

EvalResult integrate(const Integrand& f, const IntervalSpec& domain, const QuadConfig& cfg) {
    return integrate_with_gaps([&f](const Abscissa& p) { return f(p.x); }, domain, cfg);
}

EvalResult integrate_theta(const AngleIntegrand& f, const QuadConfig& cfg) {
    // Integrate over u ∈ [0,1] with θ = (π/2)u so both endpoints are exact.
    auto g = [&f](const Abscissa& p) {
        Angle a;
        a.theta = kHalfPi * p.x;
        if (p.lower_gap <= p.upper_gap) {
            const double g = kHalfPi * p.lower_gap;
            a.sin = std::sin(g);
            a.cos = std::cos(g);
        } else {
            const double g = kHalfPi * p.upper_gap;
            a.sin = std::cos(g);
            a.cos = std::sin(g);
        }
        return f(a);
    };
    auto r = integrate_with_gaps(g, IntervalSpec::finite(0.0, 1.0, true, true), cfg);
    r.value *= kHalfPi;
    r.abs_err *= kHalfPi;
    return r;
}

}  // namespace igf
