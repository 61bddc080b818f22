#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "radsurj/error.hpp"
#include "radsurj/poly.hpp"
#include "radsurj/tower.hpp"

namespace radsurj {

/// x_i = numerator / denominator, both in normal form over the tower.
struct ParamComponent {
    std::string name;
    std::size_t coordinate = 0;  // table index of x_i
    MultiPoly numerator;
    MultiPoly denominator;

    bool polynomial() const { return denominator.is_constant(); }
};

struct RadicalParametrization {
    RadicalTower tower;
    std::vector<ParamComponent> components;
    std::size_t inverse_marker = 0;  // table index of z
    bool normalization_changed = false;
    std::vector<std::string> warnings;

    const VarTablePtr& vars() const { return tower.vars(); }

    /// Component lies in ℚ(t): no radical in numerator or denominator.
    bool rational(std::size_t i) const
    {
        const std::size_t t[] = {tower.parameter()};
        return components.at(i).numerator.only_uses(t) && components.at(i).denominator.only_uses(t);
    }
};

struct RawComponent {
    std::string name;
    MultiPoly numerator;
    MultiPoly denominator;
};

/// Unvalidated input: a table holding t, the radicals, one coordinate per
/// component and the inverse marker.
struct RawParametrization {
    VarTablePtr vars;
    std::vector<RadicalLevel> levels;
    std::vector<RawComponent> components;
};

/// Table t, radicals, coordinates, z (renamed if a coordinate is called z).
inline VarTablePtr make_param_table(const std::vector<std::string>& radicals,
                                    const std::vector<std::string>& coordinates)
{
    std::vector<VarEntry> entries{{"t", VarRole::parameter}};
    for (const auto& r : radicals)
        entries.push_back({r, VarRole::radical});
    for (const auto& c : coordinates)
        entries.push_back({c, VarRole::coordinate});
    std::string marker = "z";
    for (int k = 1;; ++k) {
        bool clash = false;
        for (const auto& e : entries)
            clash = clash || e.name == marker;
        if (!clash)
            break;
        marker = "z" + std::to_string(k);
    }
    entries.push_back({marker, VarRole::inverse_marker});
    return make_table(std::move(entries));
}

/// Validate the tower and bring every component to normal form.
inline RadicalParametrization normalize_param(const RawParametrization& raw)
{
    RadicalParametrization param;
    param.tower = validate_tower(raw.vars, raw.levels);
    if (raw.components.empty())
        throw InputError("a parametrization needs at least one component");
    const auto markers = raw.vars->with_role(VarRole::inverse_marker);
    if (markers.size() != 1)
        throw InputError("the variable table needs exactly one inverse marker");
    param.inverse_marker = markers.front();
    const auto tower_vars = param.tower.tower_vars();

    for (const auto& rc : raw.components) {
        const auto coord = raw.vars->find(rc.name);
        if (!coord || (*raw.vars)[*coord].role != VarRole::coordinate)
            throw InputError("component '" + rc.name + "' has no coordinate variable");
        ParamComponent pc;
        pc.name = rc.name;
        pc.coordinate = *coord;
        const MultiPoly num = rc.numerator.vars() ? rc.numerator : MultiPoly(raw.vars);
        const MultiPoly den = rc.denominator.vars() ? rc.denominator : MultiPoly::constant(raw.vars, 1);
        if (!num.only_uses(tower_vars) || !den.only_uses(tower_vars))
            throw InputError("component '" + rc.name + "' uses variables outside t and the radicals");
        pc.numerator = normal_form(num, param.tower);
        pc.denominator = normal_form(den, param.tower);
        if (pc.denominator.is_zero())
            throw InputError("component '" + rc.name + "' has a zero denominator");
        if (!(pc.numerator == num) || !(pc.denominator == den)) {
            param.normalization_changed = true;
            param.warnings.push_back("component '" + rc.name + "' was rewritten into normal form");
        }
        param.components.push_back(std::move(pc));
    }
    return param;
}

} // namespace radsurj
