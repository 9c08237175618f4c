#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "igf/check_record.hpp"
#include "igf/eval_result.hpp"

namespace igf {

/// Value of a named parameter; throws std::out_of_range if absent.
double param(const ParamList& p, std::string_view name);

using Evaluator = std::function<EvalResult(const ParamList&)>;

/// One equality to check at a parameter point. Identities with several
/// displayed equalities carry several comparisons.
struct Comparison {
    std::string label;
    Evaluator lhs;
    Evaluator rhs;
    /// Restricts the comparison to some points; empty means every point.
    std::function<bool(const ParamList&)> applies;
    /// Replaces the identity's relative tolerance when set.
    std::optional<double> tol_rel;
};

/// Values taken by each parameter; the grid is their cartesian product.
using GridAxes = std::vector<std::pair<std::string, std::vector<double>>>;

struct IdentitySpec {
    std::string id;
    std::string description;
    std::vector<std::string> param_names;
    /// Empty when the point is admissible, otherwise the violated constraint.
    std::function<std::optional<std::string>(const ParamList&)> domain_violation;
    std::vector<Comparison> comparisons;
    double tol_rel = 1e-10;
    double tol_abs = 0.0;
    GridAxes default_axes;
    /// Points appended to the default grid (degenerate or stress cases).
    std::vector<ParamList> extra_points;
    /// Remarks on excluded parameter ranges, copied into reports.
    std::vector<std::string> domain_notes;
};

struct Tolerances {
    double rel;
    double abs;
};

/// All identities I1..I19 in order.
const std::vector<IdentitySpec>& catalog();

/// Looks an identity up by id; nullptr if unknown.
const IdentitySpec* find_identity(std::string_view id);

/// One record per applicable comparison. Throws DomainError naming the
/// violated constraint when `params` is outside the domain. Evaluation
/// failures are recorded as failed checks, never thrown.
std::vector<CheckRecord> run_identity(const IdentitySpec& spec, const ParamList& params,
                                      std::optional<Tolerances> override_tol = std::nullopt);

struct SkippedPoint {
    std::string identity;
    ParamList params;
    std::string reason;

    bool operator==(const SkippedPoint&) const = default;
};

struct GridResult {
    std::vector<CheckRecord> records;
    std::vector<SkippedPoint> skipped;
    std::vector<std::string> notes;
};

/// Expands the grid (default axes, each replaced by `overrides` when given;
/// extra points only when nothing is overridden) and runs every admissible
/// point. Out-of-domain points are skipped with their reason.
GridResult run_grid(const IdentitySpec& spec, const GridAxes& overrides = {});

/// Cartesian product of the axes, ordered with the last axis varying fastest.
std::vector<ParamList> expand_grid(const IdentitySpec& spec, const GridAxes& overrides = {});

}  // namespace igf
