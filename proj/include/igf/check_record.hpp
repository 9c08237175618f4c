#pragma once

#include <string>
#include <utility>
#include <vector>

namespace igf {

using NamedValue = std::pair<std::string, double>;
using ParamList = std::vector<NamedValue>;

/// Outcome of comparing two independently evaluated sides at one parameter point.
///
/// pass ⇔ abs_diff ≤ tol_abs or rel_diff ≤ tol_rel, with
/// rel_diff = abs_diff / max(|lhs|, |rhs|, 1e-300). A side that failed to evaluate
/// leaves `error` non-empty and the record failed.
struct CheckRecord {
    std::string identity;
    std::string comparison;  // "lhs~rhs" labels of the two routes
    ParamList params;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0;
    bool pass = false;
    double lhs_err = 0.0;
    double rhs_err = 0.0;
    double tol_rel = 0.0;
    double tol_abs = 0.0;
    double wall_time = 0.0;
    std::string error;

    /// Fills the difference fields and `pass` from the current values and tolerances.
    void score();

    bool operator==(const CheckRecord&) const = default;
};

/// Equality ignoring wall_time.
bool same_outcome(const CheckRecord& a, const CheckRecord& b);

/// Shortest decimal text that reads back to the same double.
std::string shortest_repr(double v);

/// "name=value, name=value" using shortest_repr.
std::string format_params(const ParamList& params);

}  // namespace igf
