#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "igf/check_record.hpp"
#include "igf/quadrature.hpp"

namespace igf {

enum class TimeKind { ordinary, dirac };

/// A Laplace pair f(t) ↔ F(s) = ∫₀^∞ f(t) e^{-st} dt, valid for s > sigma0.
///
/// Built through make_power / make_dirac / make_exponential; immutable afterwards.
class TransformPair {
public:
    const std::string& name() const { return name_; }
    const ParamList& params() const { return params_; }
    TimeKind time_kind() const { return kind_; }
    double sigma0() const { return sigma0_; }

    /// "name(k=v,...)", the same text parse_pair accepts.
    std::string label() const;

    /// F(s). Throws DomainError for s ≤ sigma0. F(+∞) is the limit 0.
    double laplace(double s) const;

    /// F(s²), exact for power pairs even where s² underflows.
    double laplace_of_square(double s) const;

    /// f(t) for t > 0. Throws UnsupportedError for dirac pairs.
    double time(double t) const;

    /// f(t)·e^{-st}, formed without overflowing the factors separately.
    double damped(double t, double s) const;

    /// Location b of δ(t - b); only meaningful for dirac pairs.
    double impulse_location() const;

    /// Exponent r when f(t) = t^r; empty for other pairs.
    const std::optional<double>& power_exponent() const { return power_; }

    /// f is unbounded (but integrable) at t = 0.
    bool singular_at_zero() const { return power_ && *power_ < 0.0; }

    friend TransformPair make_power(double r);
    friend TransformPair make_dirac(double b);
    friend TransformPair make_exponential(double c);

private:
    TransformPair() = default;

    std::string name_;
    ParamList params_;
    TimeKind kind_ = TimeKind::ordinary;
    double sigma0_ = 0.0;
    double impulse_ = 0.0;
    std::optional<double> power_;
    std::function<double(double)> f_;
    std::function<double(double)> F_;
    std::function<double(double)> F_of_square_;
    std::function<double(double, double)> damped_;
};

/// t^r ↔ Γ(r+1)/s^{r+1}, r > -1.
TransformPair make_power(double r);
/// δ(t - b) ↔ e^{-bs}, b > 0; sigma0 = -∞.
TransformPair make_dirac(double b);
/// e^{ct} ↔ 1/(s - c).
TransformPair make_exponential(double c);

/// Parses "power(r=-0.5)", "dirac(b=1)", "exp(c=-1)". Throws ParseError on
/// malformed text and DomainError when the parameters are out of range.
TransformPair parse_pair(std::string_view text);

/// Checks the defining integral against F on five geometric points in
/// [max(sigma0,0)+1, max(sigma0,0)+100]; one record per point at relative 1e-8.
std::vector<CheckRecord> verify_pair(const TransformPair& p, const QuadConfig& cfg = {});

inline constexpr double kPairTolerance = 1e-8;

/// The fixed set of pairs used by the identity harness.
class PairRegistry {
public:
    static const PairRegistry& standard();

    const std::vector<TransformPair>& pairs() const { return pairs_; }
    const TransformPair* find(std::string_view label) const;

private:
    explicit PairRegistry(std::vector<TransformPair> pairs) : pairs_(std::move(pairs)) {}
    std::vector<TransformPair> pairs_;
};

}  // namespace igf
