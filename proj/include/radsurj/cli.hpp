#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "radsurj/missing.hpp"
#include "radsurj/parser.hpp"
#include "radsurj/report_json.hpp"
#include "radsurj/sampler.hpp"
#include "radsurj/surjcheck.hpp"

namespace radsurj {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int internal = 1;
inline constexpr int input = 2;
inline constexpr int inconclusive = 3;
inline constexpr int resource = 4;
} // namespace exit_code

namespace detail {

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Write to a sibling temporary and rename, so readers never see a partial file.
inline void write_file_atomically(const std::string& path, const std::string& content)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(path + ".tmp", std::ios::binary | std::ios::trunc);
        if (!out)
            throw InputError("cannot write '" + path + "'");
        out << content;
        if (!out)
            throw InputError("cannot write '" + path + "'");
    }
    std::filesystem::rename(tmp, path);
}

struct CliOptions {
    std::string file;
    std::string mode;
    std::string ideal;
    std::optional<std::size_t> points;
    std::optional<double> tol;
    std::optional<std::uint64_t> budget;
    std::string csv;
    std::string expr;
    bool confirm = false;
    bool text = false;
    bool no_timing = false;
};

inline SurjectivityConfig surjectivity_config(const CliOptions& o, const SourceSettings& s)
{
    SurjectivityConfig c;
    const std::string mode = !o.mode.empty() ? o.mode : s.mode.value_or("guilty");
    const std::string ideal = !o.ideal.empty() ? o.ideal : s.ideal.value_or("auto");
    c.mode = mode == "suspicious" ? HypothesisMode::suspicious : HypothesisMode::guilty;
    c.strategy = ideal == "exact" ? IdealStrategy::exact
                 : ideal == "gcd" ? IdealStrategy::gcd
                                  : IdealStrategy::exact_then_gcd;
    c.step_budget = o.budget ? *o.budget : s.budget.value_or(default_step_budget);
    return c;
}

inline std::uint64_t budget_of(const CliOptions& o, const SourceSettings& s)
{
    return o.budget ? *o.budget : s.budget.value_or(default_step_budget);
}

inline SamplerConfig sampler_config(const CliOptions& o, const SourceSettings& s)
{
    SamplerConfig c;
    if (o.tol)
        c.denominator_tol = *o.tol;
    else if (s.tol)
        c.denominator_tol = *s.tol;
    return c;
}

inline std::vector<std::vector<Complex>> candidate_points(const MissingPointReport& r)
{
    std::vector<std::vector<Complex>> out;
    for (const auto& c : r.candidates)
        out.push_back(c.coords);
    return out;
}

} // namespace detail

/// Run one command. JSON goes to `out`, diagnostics to `err`.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Surjectivity certificates for radical parametrizations of curves", "radsurj"};
    app.require_subcommand(1);
    detail::CliOptions o;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("FILE", o.file, "input file with tower and param blocks")->required();
        sub->add_flag("--no-timing", o.no_timing, "omit wall-clock timing from the output");
        sub->add_option("--budget", o.budget, "Groebner basis step budget");
    };
    auto* check = app.add_subcommand("check", "certify surjectivity");
    add_file(check);
    check->add_option("--mode", o.mode, "hypothesis 1 test")->check(CLI::IsMember({"guilty", "suspicious"}));
    check->add_option("--ideal", o.ideal, "hypothesis 2 route")->check(CLI::IsMember({"exact", "gcd", "auto"}));

    auto* missing = app.add_subcommand("missing", "candidate missing points");
    add_file(missing);
    missing->add_flag("--confirm", o.confirm, "probe candidates with the sampler");
    missing->add_option("--points", o.points, "number of parameter samples for --confirm");

    auto* sample = app.add_subcommand("sample", "numeric image cloud and candidate probing");
    add_file(sample);
    sample->add_option("--points", o.points, "number of parameter samples");
    sample->add_option("--tol", o.tol, "denominator rejection tolerance");
    sample->add_option("--csv", o.csv, "write accepted images as CSV");

    auto* implicit = app.add_subcommand("implicitize", "implicit equations of the image closure");
    add_file(implicit);
    implicit->add_flag("--text", o.text, "print one generator per line instead of JSON");

    std::vector<CLI::App*> single;
    for (const auto& [name, help] : {std::pair{"nf", "normal form"}, std::pair{"rrem", "normalized remainder"},
                                     std::pair{"degree", "weighted degree"}}) {
        auto* sub = app.add_subcommand(name, help);
        add_file(sub);
        sub->add_option("--expr", o.expr, "polynomial in t and the radicals")->required();
        single.push_back(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, err_out;
        const int code = app.exit(e, help_out, err_out);
        out << help_out.str();
        err << err_out.str();
        return code == 0 ? exit_code::ok : exit_code::input;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const SourceFile src = parse_source(detail::read_file(o.file));
        const RadicalParametrization param = normalize_param(src.raw);
        for (const auto& w : param.warnings)
            err << "warning: " << w << '\n';
        const std::uint64_t budget = detail::budget_of(o, src.settings);

        json::Json report;
        std::string command;
        int code = exit_code::ok;

        if (check->parsed()) {
            command = "check";
            const auto r = check_surjective(param, detail::surjectivity_config(o, src.settings));
            report = json::surjectivity_value(r, param);
            code = r.verdict == Verdict::certified_surjective ? exit_code::ok : exit_code::inconclusive;
        } else if (missing->parsed()) {
            command = "missing";
            MissingConfig mc;
            mc.step_budget = budget;
            const auto r = missing_candidates(param, std::nullopt, mc);
            report = json::missing_value(r, param);
            if (o.confirm) {
                const auto sc = detail::sampler_config(o, src.settings);
                const auto samples = default_samples(o.points.value_or(src.settings.points.value_or(600)));
                const auto cloud = sample_images(param, samples, sc, r.implicit);
                report["confirmation"] = json::verdicts_value(confirm_candidates(cloud, detail::candidate_points(r), param, sc));
            }
        } else if (sample->parsed()) {
            command = "sample";
            const auto sc = detail::sampler_config(o, src.settings);
            MissingConfig mc;
            mc.step_budget = budget;
            const auto mr = missing_candidates(param, std::nullopt, mc);
            const auto samples = default_samples(o.points.value_or(src.settings.points.value_or(600)));
            const auto cloud = sample_images(param, samples, sc, mr.implicit);
            report = json::sample_value(cloud, confirm_candidates(cloud, detail::candidate_points(mr), param, sc));
            if (!o.csv.empty()) {
                std::ostringstream csv;
                write_csv(csv, cloud, param);
                detail::write_file_atomically(o.csv, csv.str());
            }
        } else if (implicit->parsed()) {
            command = "implicitize";
            const auto gens = implicitize(param, budget);
            if (o.text) {
                for (const auto& g : gens)
                    out << g.to_string() << '\n';
                return exit_code::ok;
            }
            report = {{"generators", json::poly_list(gens)}};
        } else {
            command = single[0]->parsed() ? "nf" : single[1]->parsed() ? "rrem" : "degree";
            const MultiPoly f = parse_polynomial(o.expr, param.vars());
            const auto tower_vars = param.tower.tower_vars();
            if (!f.only_uses(tower_vars))
                throw InputError("--expr may only use t and the radicals");
            std::string value;
            if (command == "nf")
                value = normal_form(f, param.tower).to_string();
            else if (command == "rrem")
                value = normalized_remainder(f, param.tower).to_string();
            else
                value = to_string(weighted_degree(normal_form(f, param.tower), param.tower.weights()));
            report = {{"expr", f.to_string()}, {"value", value}};
        }

        json::Json doc = json::envelope(command, param, std::move(report));
        if (!o.no_timing) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            doc["timing"] = {{"seconds", elapsed.count()}};
        }
        out << doc.dump(2) << '\n';
        return code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_code::resource;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_code::internal;
    }
}

} // namespace radsurj
