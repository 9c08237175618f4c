#include "igf/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "igf/erfc_transform.hpp"
#include "igf/gamma.hpp"
#include "igf/identities.hpp"
#include "igf/laplace.hpp"
#include "igf/report.hpp"

namespace igf {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Function {
    std::vector<std::string> params;
    std::function<EvalResult(const std::vector<double>&)> eval;
};

EvalResult closed(double v) { return {v, 4.0 * kEps * std::abs(v), Method::closed_form, 1}; }

const std::map<std::string, Function>& functions() {
    using V = const std::vector<double>&;
    static const std::map<std::string, Function> table = {
        {"gamma", {{"s"}, [](V v) { return closed(gamma_fn(v[0])); }}},
        {"lower_gamma", {{"s", "x"}, [](V v) { return lower_gamma(v[0], v[1]); }}},
        {"regularized_p", {{"s", "x"}, [](V v) { return regularized_p(v[0], v[1]); }}},
        {"erf", {{"x"}, [](V v) { return erf(v[0]); }}},
        {"erfc", {{"x"}, [](V v) { return erfc(v[0]); }}},
        {"erfcx", {{"x"}, [](V v) { return erfcx(v[0]); }}},
        {"erfc_moment", {{"r", "a"}, [](V v) { return closed(erfc_moment(v[0], v[1])); }}},
        {"erfc_linear_moment", {{"mu", "a"}, [](V v) { return closed(erfc_linear_moment(v[0], v[1])); }}},
        {"gauss_singular_closed", {{"a", "b"}, [](V v) { return closed(gauss_singular_closed(v[0], v[1])); }}},
        {"gauss_lorentz_closed", {{"a", "b"}, [](V v) { return closed(gauss_lorentz_closed(v[0], v[1])); }}},
    };
    return table;
}

double parse_number(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
        throw ParseError("cannot parse number '" + std::string(text) + "'");
    }
    return v;
}

std::pair<std::string, std::string> split_assignment(const std::string& item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected name=value, got '" + item + "'");
    return {item.substr(0, eq), item.substr(eq + 1)};
}

std::string fixed17(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void print_result(std::ostream& out, const EvalResult& r) {
    out << fixed17(r.value) << "\n"
        << "abs_err " << shortest_repr(r.abs_err) << "\n"
        << "method " << to_string(r.method) << "\n";
}

int cmd_eval(const std::string& name, const std::vector<std::string>& items, std::ostream& out) {
    const auto it = functions().find(name);
    if (it == functions().end()) {
        std::string known;
        for (const auto& [k, f] : functions()) known += (known.empty() ? "" : ", ") + k;
        throw ParseError("unknown function '" + name + "' (known: " + known + ")");
    }
    const auto& fn = it->second;
    std::map<std::string, double> given;
    for (const auto& item : items) {
        auto [k, v] = split_assignment(item);
        if (std::find(fn.params.begin(), fn.params.end(), k) == fn.params.end()) {
            throw ParseError(name + " has no parameter '" + k + "'");
        }
        if (!given.emplace(k, parse_number(v)).second) throw ParseError("parameter '" + k + "' given twice");
    }
    std::vector<double> values;
    for (const auto& p : fn.params) {
        if (!given.count(p)) throw ParseError(name + " needs parameter '" + p + "'");
        values.push_back(given.at(p));
    }
    print_result(out, fn.eval(values));
    return kExitOk;
}

GridAxes parse_grid(const std::vector<std::string>& specs) {
    GridAxes axes;
    for (const auto& spec : specs) {
        auto [name, list] = split_assignment(spec);
        std::vector<double> values;
        std::string_view rest = list;
        while (true) {
            const auto comma = rest.find(',');
            values.push_back(parse_number(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        for (const auto& [k, v] : axes) {
            if (k == name) throw ParseError("grid parameter '" + name + "' given twice");
        }
        axes.emplace_back(name, std::move(values));
    }
    return axes;
}

int cmd_verify(const std::vector<std::string>& ids, const std::vector<std::string>& grid_specs,
               const std::string& format, const std::string& out_path, std::ostream& out, std::ostream& err) {
    std::vector<const IdentitySpec*> selected;
    for (const auto& id : ids) {
        if (id == "all") {
            for (const auto& s : catalog()) selected.push_back(&s);
            continue;
        }
        const auto* s = find_identity(id);
        if (!s) throw ParseError("unknown identity '" + id + "'");
        selected.push_back(s);
    }
    const GridAxes grid = parse_grid(grid_specs);
    for (const auto& [name, values] : grid) {
        bool used = false;
        for (const auto* s : selected) {
            used = used || std::find(s->param_names.begin(), s->param_names.end(), name) != s->param_names.end();
        }
        if (!used) throw ParseError("grid parameter '" + name + "' matches no selected identity");
    }

    std::vector<std::pair<std::string, GridResult>> runs;
    for (const auto* s : selected) {
        GridAxes own;
        for (const auto& axis : grid) {
            if (std::find(s->param_names.begin(), s->param_names.end(), axis.first) != s->param_names.end()) {
                own.push_back(axis);
            }
        }
        runs.emplace_back(s->id, run_grid(*s, own));
    }
    const Report report = make_report(runs);
    const std::string text = format == "csv" ? to_csv(report) : to_json(report);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << text)) throw ParseError("cannot write '" + out_path + "'");
    }
    err << "verify: " << report.summary.total << " records, " << report.summary.pass << " pass, "
        << report.summary.fail << " fail, " << report.summary.skipped << " skipped\n";
    for (const auto& rec : report.records) {
        if (!rec.pass) {
            err << "FAIL " << rec.identity << " " << rec.comparison << " [" << format_params(rec.params)
                << "] rel_diff " << shortest_repr(rec.rel_diff) << (rec.error.empty() ? "" : " " + rec.error) << "\n";
        }
    }
    return report.summary.fail == 0 ? kExitOk : kExitFailure;
}

int cmd_transform(const std::string& pair_text, double a, const std::string& form_text, const std::string& weighted,
                  std::ostream& out) {
    const auto pair = parse_pair(pair_text);
    const auto form = parse_form(form_text);
    if (!form) throw ParseError("unknown form '" + form_text + "' (expected theta, s or time)");
    const auto r = weighted == "exp" ? erfc_weighted_exp_integral(pair, a, *form)
                                     : erfc_weighted_integral(pair, a, *form);
    print_result(out, r);
    return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Incomplete gamma and erfc-transform toolkit", "igf"};
    app.require_subcommand(1);

    auto* eval = app.add_subcommand("eval", "Evaluate a function: eval NAME k=v ...");
    std::string fn_name;
    std::vector<std::string> fn_args;
    eval->add_option("function", fn_name, "gamma, lower_gamma, regularized_p, erf, erfc, erfcx, erfc_moment, "
                                          "erfc_linear_moment, gauss_singular_closed, gauss_lorentz_closed")
        ->required();
    eval->add_option("args", fn_args, "Arguments as name=value");

    auto* verify = app.add_subcommand("verify", "Run identity grids: verify (all | ID...)");
    std::vector<std::string> ids;
    std::vector<std::string> grid;
    std::string format = "json";
    std::string out_path;
    verify->add_option("ids", ids, "Identity ids (I1..I19) or 'all'")->required();
    verify->add_option("--grid", grid, "Override one axis: name=v1,v2,... (repeatable)")->allow_extra_args(false);
    verify->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* transform = app.add_subcommand("transform", "Evaluate an erfc-weighted Laplace reduction");
    std::string pair_text;
    double a = 0.0;
    std::string form = "theta";
    std::string weighted = "plain";
    transform->add_option("--pair", pair_text, "Pair such as power(r=-0.5), exp(c=-1), dirac(b=1)")->required();
    transform->add_option("--a", a, "Scale a > 0")->required();
    transform->add_option("--form", form, "theta, s or time")->check(CLI::IsMember({"theta", "s", "time"}));
    transform->add_option("--weighted", weighted, "plain or exp")->check(CLI::IsMember({"plain", "exp"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(fn_name, fn_args, out);
        if (verify->parsed()) return cmd_verify(ids, grid, format, out_path, out, err);
        return cmd_transform(pair_text, a, form, weighted, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const OverflowError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const UnsupportedError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ConvergenceError& e) {
        err << "did not converge: " << e.what() << " (best " << fixed17(e.best().value) << ")\n";
        return kExitFailure;
    } catch (const IntegrandError& e) {
        err << "integrand failure: " << e.what() << "\n";
        return kExitFailure;
    }
}

}  // namespace igf
