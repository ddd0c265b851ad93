#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algebra_spec.hpp"
#include "degree_codec.hpp"
#include "error.hpp"
#include "manifold_planner.hpp"
#include "series.hpp"
#include "spectral_model.hpp"
#include "verify.hpp"

// Command-line surface. Every command builds one JSON envelope
//   {command, parameters, status, result | error}
// and renders it either as JSON (sorted keys) or as a plain-text table.

namespace cobfilt::cli {

using json = nlohmann::json;

enum exit_code : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_domain_error = 2,
    exit_usage = 64,
};

inline constexpr degree_t default_cap = 64;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::uint64_t parse_uint(std::string_view text, std::string_view what)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw usage_error(std::string(what) + " must be a non-negative integer, got '" + std::string(text) + "'");
    return v;
}

/// "n,j,i" -> validated triple.
inline StageTriple parse_triple(std::string_view text)
{
    std::vector<std::uint64_t> parts;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        parts.push_back(parse_uint(text.substr(start, comma - start), "stage component"));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    if (parts.size() != 3)
        throw usage_error("stage must be written n,j,i, got '" + std::string(text) + "'");
    StageTriple t{parts[0], parts[1], parts[2]};
    if (!t.is_valid())
        throw usage_error("invalid stage triple " + t.str() + ": need n >= 1, and j >= 1 when n = 1 (except 1,0,0)");
    return t;
}

inline json triple_json(const StageTriple& t) { return {{"n", t.n}, {"j", t.j}, {"i", t.i}}; }

inline json recipe_json(const CupRecipe& r, bool with_term)
{
    json chain = json::array();
    for (const auto& link : indecomposable(r))
        chain.push_back(link.str());
    json out{
        {"base", "RP^" + std::to_string(r.base_dim)},
        {"base_dim", r.base_dim},
        {"cup2_count", r.cup2_count()},
        {"cup1_count", r.cup1_count()},
        {"intermediate_dims", r.intermediate_dims()},
        {"indecomposability", chain},
    };
    if (with_term)
        out["term"] = expand(r);
    return out;
}

inline json report_json(const CheckReport& r)
{
    json out{{"check", r.check_name}, {"bound", r.bound}, {"status", r.passed ? "pass" : "fail"}};
    if (r.first_discrepancy) {
        const auto& d = *r.first_discrepancy;
        out["first_discrepancy"] = {
            {"degree", d.degree}, {"expected", d.expected}, {"actual", d.actual}, {"detail", d.detail}};
    }
    if (r.series)
        out["series"] = r.series->vec();
    return out;
}

namespace detail {

struct Envelope {
    json doc;
    int exit = exit_ok;
};

inline Envelope ok(std::string command, json parameters, json result, int exit = exit_ok)
{
    return {{{"command", std::move(command)},
             {"parameters", std::move(parameters)},
             {"status", "ok"},
             {"result", std::move(result)}},
            exit};
}

inline Envelope failure(std::string command, json parameters, std::string_view code, const std::string& message,
                        int exit)
{
    return {{{"command", std::move(command)},
             {"parameters", std::move(parameters)},
             {"status", "error"},
             {"error", {{"code", code}, {"message", message}}}},
            exit};
}

inline std::string pad(std::string s, std::size_t width)
{
    if (s.size() < width)
        s.append(width - s.size(), ' ');
    return s;
}

inline std::string join_dims(const json& dims)
{
    std::string s;
    for (const auto& d : dims) {
        if (!s.empty())
            s += " -> ";
        s += std::to_string(d.get<std::uint64_t>());
    }
    return s;
}

inline std::string series_text(const json& coeffs)
{
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (k)
            s += ',';
        s += std::to_string(coeffs[k].get<std::uint64_t>());
    }
    return s + "]";
}

inline void render_text(const json& doc, std::ostream& out, std::ostream& err)
{
    if (doc["status"] == "error") {
        err << "error: " << doc["error"]["code"].get<std::string>() << ": "
            << doc["error"]["message"].get<std::string>() << '\n';
        return;
    }
    const auto& cmd = doc["command"];
    const auto& r = doc["result"];
    if (cmd == "decompose") {
        out << r["degree"].get<std::uint64_t>() << " -> n=" << r["n"].get<std::uint64_t>()
            << " j=" << r["j"].get<std::uint64_t>() << " i=" << r["i"].get<std::uint64_t>() << '\n';
    } else if (cmd == "recipe") {
        out << pad("degree", 18) << r["degree"].get<std::uint64_t>() << '\n';
        const auto& t = r["triple"];
        out << pad("triple", 18) << '(' << t["n"].get<std::uint64_t>() << ',' << t["j"].get<std::uint64_t>() << ','
            << t["i"].get<std::uint64_t>() << ")\n";
        out << pad("base", 18) << r["base"].get<std::string>() << '\n';
        out << pad("cup2 steps", 18) << r["cup2_count"].get<std::uint64_t>() << '\n';
        out << pad("cup1 steps", 18) << r["cup1_count"].get<std::uint64_t>() << '\n';
        out << pad("dimensions", 18) << join_dims(r["intermediate_dims"]) << '\n';
        if (r.contains("term"))
            out << pad("term", 18) << r["term"].get<std::string>() << '\n';
        std::string chain;
        for (const auto& link : r["indecomposability"])
            chain += (chain.empty() ? "" : ", ") + link.get<std::string>();
        out << pad("indecomposable", 18) << chain << '\n';
    } else if (cmd == "table") {
        out << pad("degree", 8) << pad("(n,j,i)", 12) << "recipe\n";
        for (const auto& row : r["rows"]) {
            const std::string triple = "(" + std::to_string(row["n"].get<std::uint64_t>()) + ","
                                       + std::to_string(row["j"].get<std::uint64_t>()) + ","
                                       + std::to_string(row["i"].get<std::uint64_t>()) + ")";
            out << pad(std::to_string(row["degree"].get<std::uint64_t>()), 8) << pad(triple, 12)
                << row["recipe"].get<std::string>() << '\n';
        }
        out << r["rows"].size() << " generators\n";
    } else if (cmd == "series") {
        out << series_text(r["series"]) << '\n';
    } else if (cmd == "verify") {
        for (const auto& c : r["checks"]) {
            out << pad(c["check"].get<std::string>(), 15) << pad("cap=" + std::to_string(c["bound"].get<std::uint64_t>()), 9)
                << c["status"].get<std::string>();
            if (c.contains("series"))
                out << "  series=" << series_text(c["series"]);
            out << '\n';
            if (c.contains("first_discrepancy")) {
                const auto& d = c["first_discrepancy"];
                out << "  first discrepancy at degree " << d["degree"].get<std::uint64_t>() << ": expected "
                    << d["expected"].get<std::string>() << ", actual " << d["actual"].get<std::string>() << " ("
                    << d["detail"].get<std::string>() << ")\n";
            }
        }
        out << (r["passed"].get<bool>() ? "all checks passed" : "verification FAILED") << '\n';
    }
}

} // namespace detail

inline detail::Envelope cmd_decompose(const std::string& degree_text)
{
    const auto d = parse_uint(degree_text, "degree");
    json params{{"degree", d}};
    try {
        const auto t = decompose(d);
        json result = triple_json(t);
        result["degree"] = compose(t);
        return detail::ok("decompose", params, result);
    } catch (const error& e) {
        return detail::failure("decompose", params, code_name(e.code()), e.what(), exit_domain_error);
    }
}

inline detail::Envelope cmd_recipe(const std::string& degree_text, bool with_term)
{
    const auto d = parse_uint(degree_text, "degree");
    json params{{"degree", d}, {"expand", with_term}};
    try {
        const auto t = decompose(d);
        json result = recipe_json(plan(d), with_term);
        result["degree"] = d;
        result["triple"] = triple_json(t);
        return detail::ok("recipe", params, result);
    } catch (const error& e) {
        return detail::failure("recipe", params, code_name(e.code()), e.what(), exit_domain_error);
    }
}

inline detail::Envelope cmd_table(const std::string& max_text)
{
    const auto bound = parse_uint(max_text, "max_degree");
    json rows = json::array();
    for (const auto& e : stages_up_to_degree(bound).entries) {
        json row = triple_json(e.triple);
        row["degree"] = e.degree;
        row["recipe"] = expand(plan(e.degree));
        rows.push_back(std::move(row));
    }
    return detail::ok("table", {{"max_degree", bound}}, {{"max_degree", bound}, {"rows", rows}});
}

inline detail::Envelope cmd_series(const std::string& what, const std::string& stage_text, const std::string& cap_text)
{
    const auto cap = parse_uint(cap_text, "cap");
    json params{{"what", what}, {"cap", cap}};
    std::optional<TruncatedSeries> s;
    try {
        if (what == "steenrod") {
            s = dual_steenrod_series(cap);
        } else {
            const auto t = parse_triple(stage_text);
            params["stage"] = triple_json(t);
            s = what == "homotopy" ? adams_homotopy_series(t, cap) : thom_homology_series(t, cap);
        }
    } catch (const error& e) {
        return detail::failure("series", params, code_name(e.code()), e.what(), exit_domain_error);
    }
    return detail::ok("series", params, {{"series", s->vec()}});
}

inline detail::Envelope cmd_verify(const std::string& check, const std::string& cap_text)
{
    const auto cap = parse_uint(cap_text, "cap");
    if (cap < 2)
        throw usage_error("verify needs --cap >= 2");
    json params{{"check", check}, {"cap", cap}};
    std::vector<CheckReport> reports;
    try {
        if (check == "all")
            reports = verify_all(cap);
        else if (check == "bijection")
            reports.push_back(verify_bijection(cap));
        else if (check == "product")
            reports.push_back(verify_main_theorem(cap));
        else if (check == "quotients")
            reports.push_back(verify_quotient_steps(cap));
        else
            reports.push_back(verify_simple_systems(cap));
    } catch (const error& e) {
        return detail::failure("verify", params, code_name(e.code()), e.what(), exit_domain_error);
    }
    bool passed = true;
    json checks = json::array();
    for (const auto& r : reports) {
        passed = passed && r.passed;
        checks.push_back(report_json(r));
    }
    return detail::ok("verify", params, {{"checks", checks}, {"passed", passed}},
                      passed ? exit_ok : exit_check_failed);
}

/// Runs one command line (args excludes the program name); returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Filtration of unoriented cobordism: degree codec, cup recipes, series and checks", "cobfilt"};
    app.require_subcommand(1);

    std::string format = "table";
    bool as_json = false;
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_flag("--json", as_json, "Shorthand for --format json");
    };

    std::string degree_text, max_text, what, stage_text = "1,0,0", check = "all";
    std::string cap_text = std::to_string(default_cap);
    bool with_term = false;

    auto* dec = app.add_subcommand("decompose", "Write a degree as ((4n-2)2^j-1)2^i-1");
    dec->add_option("degree", degree_text, "Generator degree")->required();
    add_format(dec);

    auto* rec = app.add_subcommand("recipe", "Cup-construction recipe for a generator degree");
    rec->add_option("degree", degree_text, "Generator degree")->required();
    rec->add_flag("--expand", with_term, "Include the symbolic term");
    add_format(rec);

    auto* tab = app.add_subcommand("table", "All generators up to a degree, in filtration order");
    tab->add_option("max_degree", max_text, "Largest degree")->required();
    add_format(tab);

    auto* ser = app.add_subcommand("series", "Poincare series of a stage");
    ser->add_option("what", what, "homotopy, homology or steenrod")
        ->required()
        ->check(CLI::IsMember({"homotopy", "homology", "steenrod"}));
    ser->add_option("--stage", stage_text, "Stage triple n,j,i");
    ser->add_option("--cap", cap_text, "Degree cap");
    add_format(ser);

    auto* ver = app.add_subcommand("verify", "Run oracle cross-checks");
    ver->add_option("--check", check, "Which check")
        ->check(CLI::IsMember({"all", "bijection", "product", "quotients", "simple-system"}));
    ver->add_option("--cap", cap_text, "Degree cap");
    add_format(ver);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }
    if (as_json)
        format = "json";

    detail::Envelope env;
    try {
        if (dec->parsed())
            env = cmd_decompose(degree_text);
        else if (rec->parsed())
            env = cmd_recipe(degree_text, with_term);
        else if (tab->parsed())
            env = cmd_table(max_text);
        else if (ser->parsed())
            env = cmd_series(what, stage_text, cap_text);
        else
            env = cmd_verify(check, cap_text);
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    }

    if (format == "json")
        out << env.doc.dump(2) << '\n';
    else
        detail::render_text(env.doc, out, err);
    return env.exit;
}

} // namespace cobfilt::cli
