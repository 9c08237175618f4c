#include "igf/report.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <limits>

#include <json.hpp>

namespace igf {

namespace {

using json = nlohmann::ordered_json;

json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "NaN";
    return v > 0 ? "Infinity" : "-Infinity";
}

double read_number(const json& j) {
    if (j.is_number()) return j.get<double>();
    const auto s = j.get<std::string>();
    if (s == "NaN") return std::numeric_limits<double>::quiet_NaN();
    if (s == "Infinity") return std::numeric_limits<double>::infinity();
    if (s == "-Infinity") return -std::numeric_limits<double>::infinity();
    throw ParseError("report: expected a number, got '" + s + "'");
}

json params_json(const ParamList& p) {
    json out = json::object();
    for (const auto& [k, v] : p) out[k] = number(v);
    return out;
}

ParamList read_params(const json& j) {
    ParamList out;
    for (const auto& [k, v] : j.items()) out.emplace_back(k, read_number(v));
    return out;
}

}  // namespace

std::string utc_timestamp() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Summary tally(const std::vector<CheckRecord>& records, std::size_t skipped) {
    Summary s;
    s.total = records.size();
    s.pass = static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [](const auto& r) { return r.pass; }));
    s.fail = s.total - s.pass;
    s.skipped = skipped;
    return s;
}

Report make_report(const std::vector<std::pair<std::string, GridResult>>& runs) {
    Report r;
    r.tool_version = std::string(kToolVersion);
    r.timestamp = utc_timestamp();
    for (const auto& [id, run] : runs) {
        r.records.insert(r.records.end(), run.records.begin(), run.records.end());
        r.skipped.insert(r.skipped.end(), run.skipped.begin(), run.skipped.end());
        for (const auto& n : run.notes) r.notes.push_back(id + ": " + n);
    }
    r.summary = tally(r.records, r.skipped.size());
    return r;
}

std::string to_json(const Report& r) {
    json j;
    j["tool_version"] = r.tool_version;
    j["timestamp"] = r.timestamp;
    j["summary"] = {{"total", r.summary.total},
                    {"pass", r.summary.pass},
                    {"fail", r.summary.fail},
                    {"skipped", r.summary.skipped}};
    json records = json::array();
    for (const auto& c : r.records) {
        records.push_back({{"identity", c.identity},
                           {"comparison", c.comparison},
                           {"params", params_json(c.params)},
                           {"lhs_value", number(c.lhs_value)},
                           {"rhs_value", number(c.rhs_value)},
                           {"abs_diff", number(c.abs_diff)},
                           {"rel_diff", number(c.rel_diff)},
                           {"pass", c.pass},
                           {"lhs_err", number(c.lhs_err)},
                           {"rhs_err", number(c.rhs_err)},
                           {"tol_rel", number(c.tol_rel)},
                           {"tol_abs", number(c.tol_abs)},
                           {"wall_time", number(c.wall_time)},
                           {"error", c.error}});
    }
    j["records"] = std::move(records);
    json skipped = json::array();
    for (const auto& s : r.skipped) {
        skipped.push_back({{"identity", s.identity}, {"params", params_json(s.params)}, {"reason", s.reason}});
    }
    j["skipped"] = std::move(skipped);
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

Report report_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        Report r;
        r.tool_version = j.at("tool_version").get<std::string>();
        r.timestamp = j.at("timestamp").get<std::string>();
        const auto& s = j.at("summary");
        r.summary.total = s.at("total").get<std::size_t>();
        r.summary.pass = s.at("pass").get<std::size_t>();
        r.summary.fail = s.at("fail").get<std::size_t>();
        r.summary.skipped = s.at("skipped").get<std::size_t>();
        for (const auto& c : j.at("records")) {
            CheckRecord rec;
            rec.identity = c.at("identity").get<std::string>();
            rec.comparison = c.at("comparison").get<std::string>();
            rec.params = read_params(c.at("params"));
            rec.lhs_value = read_number(c.at("lhs_value"));
            rec.rhs_value = read_number(c.at("rhs_value"));
            rec.abs_diff = read_number(c.at("abs_diff"));
            rec.rel_diff = read_number(c.at("rel_diff"));
            rec.pass = c.at("pass").get<bool>();
            rec.lhs_err = read_number(c.at("lhs_err"));
            rec.rhs_err = read_number(c.at("rhs_err"));
            rec.tol_rel = read_number(c.at("tol_rel"));
            rec.tol_abs = read_number(c.at("tol_abs"));
            rec.wall_time = read_number(c.at("wall_time"));
            rec.error = c.at("error").get<std::string>();
            r.records.push_back(std::move(rec));
        }
        for (const auto& s2 : j.at("skipped")) {
            r.skipped.push_back({s2.at("identity").get<std::string>(), read_params(s2.at("params")),
                                 s2.at("reason").get<std::string>()});
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report: ") + e.what());
    }
}

std::string to_csv(const Report& r) {
    std::size_t k = 0;
    for (const auto& c : r.records) k = std::max(k, c.params.size());
    std::string out = "identity";
    for (std::size_t i = 1; i <= k; ++i) out += ",param_" + std::to_string(i);
    out += ",lhs,rhs,abs_diff,rel_diff,pass\n";
    for (const auto& c : r.records) {
        const auto* spec = find_identity(c.identity);
        out += (spec && spec->comparisons.size() == 1) ? c.identity : c.identity + ":" + c.comparison;
        for (std::size_t i = 0; i < k; ++i) {
            out += ",";
            if (i < c.params.size()) out += c.params[i].first + "=" + shortest_repr(c.params[i].second);
        }
        out += "," + shortest_repr(c.lhs_value) + "," + shortest_repr(c.rhs_value) + "," + shortest_repr(c.abs_diff) +
               "," + shortest_repr(c.rel_diff) + "," + (c.pass ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace igf
