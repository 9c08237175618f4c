#include "igf/check_record.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>

namespace igf {

void CheckRecord::score() {
    abs_diff = std::abs(lhs_value - rhs_value);
    rel_diff = abs_diff / std::max({std::abs(lhs_value), std::abs(rhs_value), 1e-300});
    pass = error.empty() && std::isfinite(abs_diff) && (abs_diff <= tol_abs || rel_diff <= tol_rel);
}

bool same_outcome(const CheckRecord& a, const CheckRecord& b) {
    CheckRecord x = a;
    x.wall_time = b.wall_time;
    return x == b;
}

std::string shortest_repr(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_params(const ParamList& params) {
    std::string out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ", ";
        out += params[i].first + "=" + shortest_repr(params[i].second);
    }
    return out;
}

}  // namespace igf
