#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "igf/check_record.hpp"
#include "igf/identities.hpp"

namespace igf {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct Summary {
    std::size_t total = 0;
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;

    bool operator==(const Summary&) const = default;
};

struct Report {
    std::string tool_version;
    std::string timestamp;
    std::vector<CheckRecord> records;
    std::vector<SkippedPoint> skipped;
    std::vector<std::string> notes;
    Summary summary;

    bool operator==(const Report&) const = default;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

/// Merges grid runs in order and tallies the summary.
Report make_report(const std::vector<std::pair<std::string, GridResult>>& runs);

/// Tally of the record and skip lists.
Summary tally(const std::vector<CheckRecord>& records, std::size_t skipped);

/// One JSON object; numbers in shortest round-trip form, non-finite values as strings.
std::string to_json(const Report& r);

/// Inverse of to_json. Throws ParseError on malformed input.
Report report_from_json(std::string_view text);

/// Header identity,param_1..param_k,lhs,rhs,abs_diff,rel_diff,pass then one row per record.
std::string to_csv(const Report& r);

}  // namespace igf
