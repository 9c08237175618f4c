#include "igf/laplace.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "igf/gamma.hpp"

namespace igf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_finite(const char* what, double v) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": parameter must be finite");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

double parse_real(std::string_view text, std::string_view context) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ParseError("cannot parse number '" + std::string(text) + "' in " + std::string(context));
    }
    return v;
}

}  // namespace

std::string TransformPair::label() const {
    std::string out = name_ + "(";
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) out += ",";
        out += params_[i].first + "=" + shortest_repr(params_[i].second);
    }
    return out + ")";
}

double TransformPair::laplace(double s) const {
    if (std::isnan(s) || !(s > sigma0_)) {
        throw DomainError(label() + ": Laplace transform requires s > sigma0 = " + shortest_repr(sigma0_) +
                          " (got s = " + shortest_repr(s) + ")");
    }
    if (std::isinf(s)) return 0.0;
    return F_(s);
}

double TransformPair::laplace_of_square(double s) const {
    if (F_of_square_ && std::isfinite(s) && s >= 0.0) return F_of_square_(s);
    return laplace(s * s);
}

double TransformPair::time(double t) const {
    if (kind_ == TimeKind::dirac) throw UnsupportedError(label() + ": dirac pair has no time-domain function");
    return f_(t);
}

double TransformPair::damped(double t, double s) const {
    if (kind_ == TimeKind::dirac) throw UnsupportedError(label() + ": dirac pair has no time-domain function");
    return damped_(t, s);
}

double TransformPair::impulse_location() const {
    if (kind_ != TimeKind::dirac) throw UnsupportedError(label() + ": not a dirac pair");
    return impulse_;
}

TransformPair make_power(double r) {
    require_finite("power", r);
    if (!(r > -1.0)) throw DomainError("power: requires r > -1 (got r = " + shortest_repr(r) + ")");
    TransformPair p;
    p.name_ = "power";
    p.params_ = {{"r", r}};
    p.sigma0_ = 0.0;
    p.power_ = r;
    const double scale = gamma_fn(r + 1.0);
    p.f_ = [r](double t) { return std::pow(t, r); };
    p.F_ = [r, scale](double s) { return scale * std::pow(s, -(r + 1.0)); };
    p.F_of_square_ = [r, scale](double s) { return scale * std::pow(s, -2.0 * (r + 1.0)); };
    p.damped_ = [r](double t, double s) { return t > 0.0 ? std::exp(r * std::log(t) - s * t) : 0.0; };
    return p;
}

TransformPair make_dirac(double b) {
    require_finite("dirac", b);
    if (!(b > 0.0)) throw DomainError("dirac: requires b > 0 (got b = " + shortest_repr(b) + ")");
    TransformPair p;
    p.name_ = "dirac";
    p.params_ = {{"b", b}};
    p.kind_ = TimeKind::dirac;
    p.sigma0_ = -kInf;
    p.impulse_ = b;
    p.F_ = [b](double s) { return std::exp(-b * s); };
    return p;
}

TransformPair make_exponential(double c) {
    require_finite("exp", c);
    TransformPair p;
    p.name_ = "exp";
    p.params_ = {{"c", c}};
    p.sigma0_ = c;
    p.f_ = [c](double t) { return std::exp(c * t); };
    p.F_ = [c](double s) { return 1.0 / (s - c); };
    p.damped_ = [c](double t, double s) { return std::exp((c - s) * t); };
    return p;
}

TransformPair parse_pair(std::string_view text) {
    const std::string_view whole = trim(text);
    const auto open = whole.find('(');
    if (open == std::string_view::npos || whole.back() != ')') {
        throw ParseError("pair must look like name(key=value,...): '" + std::string(text) + "'");
    }
    const std::string name(trim(whole.substr(0, open)));
    std::string_view body = whole.substr(open + 1, whole.size() - open - 2);

    std::map<std::string, double> kv;
    while (!trim(body).empty()) {
        const auto comma = body.find(',');
        const std::string_view item = body.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(text) + "'");
        const std::string key(trim(item.substr(0, eq)));
        if (!kv.emplace(key, parse_real(item.substr(eq + 1), text)).second) {
            throw ParseError("duplicate key '" + key + "' in '" + std::string(text) + "'");
        }
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }

    auto single = [&](const char* key) {
        if (kv.size() != 1 || !kv.count(key)) {
            throw ParseError(name + " takes exactly one parameter '" + key + "': '" + std::string(text) + "'");
        }
        return kv.at(key);
    };
    if (name == "power") return make_power(single("r"));
    if (name == "dirac") return make_dirac(single("b"));
    if (name == "exp") return make_exponential(single("c"));
    throw ParseError("unknown pair '" + name + "' (expected power, dirac or exp)");
}

std::vector<CheckRecord> verify_pair(const TransformPair& p, const QuadConfig& cfg) {
    if (p.time_kind() != TimeKind::ordinary) {
        throw UnsupportedError(p.label() + ": verify_pair needs a time-domain function");
    }
    const double base = std::max(p.sigma0(), 0.0);
    const double lo = base + 1.0;
    const double hi = base + 100.0;
    std::vector<CheckRecord> out;
    for (int k = 0; k < 5; ++k) {
        const double s = lo * std::pow(hi / lo, k / 4.0);
        const auto start = std::chrono::steady_clock::now();
        CheckRecord rec;
        rec.identity = "pair:" + p.label();
        rec.comparison = "quadrature~laplace";
        rec.params = {{"s", s}};
        rec.tol_rel = kPairTolerance;
        rec.tol_abs = 0.0;
        rec.rhs_value = p.laplace(s);
        try {
            const auto q = integrate([&p, s](double t) { return p.damped(t, s); },
                                     IntervalSpec::half_infinite(0.0, p.singular_at_zero()), cfg);
            rec.lhs_value = q.value;
            rec.lhs_err = q.abs_err;
        } catch (const ConvergenceError& e) {
            rec.lhs_value = e.best().value;
            rec.lhs_err = e.best().abs_err;
            rec.error = e.what();
        } catch (const IntegrandError& e) {
            rec.error = e.what();
        }
        rec.score();
        rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(rec));
    }
    return out;
}

const PairRegistry& PairRegistry::standard() {
    static const PairRegistry registry({
        make_power(0.0),
        make_power(1.0),
        make_power(-0.5),
        make_power(-0.75),
        make_exponential(-1.0),
        make_exponential(0.5),
        make_dirac(1.0),
        make_dirac(0.25),
    });
    return registry;
}

const TransformPair* PairRegistry::find(std::string_view label) const {
    for (const auto& p : pairs_) {
        if (p.label() == label) return &p;
    }
    return nullptr;
}

}  // namespace igf
