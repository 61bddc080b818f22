#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "radsurj/missing.hpp"
#include "radsurj/parser.hpp"
#include "radsurj/sampler.hpp"
#include "radsurj/surjcheck.hpp"

namespace radsurj::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "1.0";

inline Json complex_value(Complex z) { return Json::array({z.real(), z.imag()}); }

inline Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json degree_value(const Degree& d) { return to_string(d); }

inline Json poly_list(const std::vector<MultiPoly>& polys)
{
    Json out = Json::array();
    for (const auto& p : polys)
        out.push_back(p.to_string());
    return out;
}

inline Json input_echo(const RadicalParametrization& param)
{
    Json tower = Json::array();
    for (std::size_t i = 0; i < param.tower.size(); ++i)
        tower.push_back(level_text(param.tower, i));
    Json comps = Json::array();
    for (const auto& c : param.components)
        comps.push_back({{"name", c.name},
                         {"numerator", c.numerator.to_string()},
                         {"denominator", c.denominator.to_string()}});
    return {{"tower", tower}, {"param", comps}};
}

inline Json guilt_value(const GuiltReport& g)
{
    return {{"expected_degree", degree_value(g.expected_degree)},
            {"actual_degree", degree_value(g.actual_degree)},
            {"guilty", g.guilty},
            {"remainder", g.trace.result().to_string()}};
}

inline Json suspicion_value(const SuspicionWitness& s, const RadicalParametrization& param)
{
    Json chain = Json::array();
    for (const auto& step : s.chain) {
        chain.push_back({{"level", step.level ? Json(*step.level + 1) : Json(nullptr)},
                         {"clause", to_string(step.clause)},
                         {"via_radical", step.via_radical
                                             ? Json((*param.vars())[param.tower.radical_var(*step.via_radical)].name)
                                             : Json(nullptr)}});
    }
    return {{"suspicious", s.suspicious}, {"chain", chain}};
}

inline Json surjectivity_value(const SurjectivityReport& r, const RadicalParametrization& param)
{
    Json comps = Json::array();
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        const auto& c = r.components[i];
        comps.push_back({
            {"index", i + 1},
            {"name", param.components[i].name},
            {"deg_numerator", degree_value(c.deg_numerator)},
            {"deg_denominator", degree_value(c.deg_denominator)},
            {"degree_condition", c.degree_condition},
            {"rational", c.rational},
            {"guilt", c.guilt ? guilt_value(*c.guilt) : Json(nullptr)},
            {"suspicion", c.suspicion ? suspicion_value(*c.suspicion, param) : Json(nullptr)},
            {"hypothesis2",
             {{"established", c.hyp2.established},
              {"route", c.hyp2.route},
              {"exact", c.hyp2.exact ? Json(*c.hyp2.exact) : Json(nullptr)},
              {"gcd", c.hyp2.gcd},
              {"budget_exhausted", c.hyp2.budget_exhausted}}},
        });
    }
    return {{"verdict", to_string(r.verdict)},
            {"certificate_path", to_string(r.path)},
            {"witness_component", r.witness_index ? Json(*r.witness_index + 1) : Json(nullptr)},
            {"mode", to_string(r.mode)},
            {"ideal_strategy", to_string(r.strategy)},
            {"components", comps},
            {"notes", r.notes}};
}

inline Json verdicts_value(const std::vector<CandidateVerdict>& verdicts)
{
    Json out = Json::array();
    for (const auto& v : verdicts) {
        Json point = Json::array();
        for (const auto& z : v.point)
            point.push_back(complex_value(z));
        out.push_back({{"point", point},
                       {"verdict", v.covered ? "covered" : "likely-missing"},
                       {"parameter", v.parameter ? complex_value(*v.parameter) : Json(nullptr)},
                       {"min_distance", finite_or_null(v.min_distance)}});
    }
    return out;
}

inline Json missing_value(const MissingPointReport& r, const RadicalParametrization& param)
{
    Json coords = Json::array();
    for (std::size_t i = 0; i < r.polys.coordinates.size(); ++i) {
        const auto& cc = r.polys.coordinates[i];
        Json rational = Json::array();
        for (const auto& q : cc.rational_roots)
            rational.push_back(to_string(q));
        Json roots = Json::array();
        for (const auto& z : cc.numeric_roots)
            roots.push_back(complex_value(z));
        coords.push_back({{"name", param.components[i].name},
                          {"G", cc.g.to_string()},
                          {"cleaned", cc.cleaned.to_string()},
                          {"leading", cc.leading.to_string()},
                          {"degree", cc.degree},
                          {"rational_roots", rational},
                          {"exact_roots_complete", cc.exact_roots_complete},
                          {"roots", roots}});
    }
    Json candidates = Json::array();
    for (const auto& c : r.candidates) {
        Json point = Json::array();
        for (const auto& z : c.coords)
            point.push_back(complex_value(z));
        candidates.push_back({{"point", point}, {"implicit_residual", c.implicit_residual}});
    }
    Json cond2 = Json::array();
    for (std::size_t i = 0; i < r.condition2.size(); ++i)
        cond2.push_back({{"component", i + 1},
                         {"classification", to_string(r.condition2[i].kind)},
                         {"basis", r.condition2[i].basis ? poly_list(r.condition2[i].basis->generators)
                                                         : Json(nullptr)}});
    return {{"coordinates", coords},
            {"candidates", candidates},
            {"unfiltered_count", r.unfiltered_count},
            {"hyp1_bound", r.hyp1_bound},
            {"infinity_bound", r.infinity_bound},
            {"condition2", cond2},
            {"implicit", r.implicit ? poly_list(*r.implicit) : Json(nullptr)},
            {"notes", r.notes}};
}

inline Json sample_value(const SampleReport& r, const std::vector<CandidateVerdict>& verdicts)
{
    return {{"sample_count", r.sample_count},
            {"evaluations", r.evaluations},
            {"accepted", r.accepted.size()},
            {"rejected", r.rejected},
            {"max_implicit_residual", r.max_implicit_residual ? Json(*r.max_implicit_residual) : Json(nullptr)},
            {"tolerances",
             {{"branch", r.config.branch_tol},
              {"denominator", r.config.denominator_tol},
              {"residual", r.config.residual_tol},
              {"match", r.config.match_tol}}},
            {"candidates", verdicts_value(verdicts)},
            {"notes", Json::array({"verdicts are heuristic: likely-missing is not a proof"})}};
}

/// Top-level document: schema_version, command, input, report.
inline Json envelope(const std::string& command, const RadicalParametrization& param, Json report)
{
    return {{"schema_version", schema_version},
            {"command", command},
            {"input", input_echo(param)},
            {"report", std::move(report)}};
}

} // namespace radsurj::json
