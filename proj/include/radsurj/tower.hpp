#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "radsurj/degree.hpp"
#include "radsurj/error.hpp"
#include "radsurj/poly.hpp"

namespace radsurj {

/// Δ_i^exponent = radicand, the radicand living in {t, Δ_1..Δ_{i-1}}.
struct RadicalLevel {
    std::uint32_t exponent = 2;
    MultiPoly radicand;
};

/// A validated radical tower over a variable table: the table's radicals,
/// in order, are Δ_1..Δ_m.
class RadicalTower {
public:
    RadicalTower() = default;

    const VarTablePtr& vars() const noexcept { return vars_; }
    std::size_t size() const noexcept { return levels_.size(); }
    std::size_t parameter() const noexcept { return parameter_; }
    const std::vector<std::size_t>& radical_vars() const noexcept { return radical_vars_; }
    std::size_t radical_var(std::size_t level) const { return radical_vars_.at(level); }
    const RadicalLevel& level(std::size_t i) const { return levels_.at(i); }
    const std::vector<RadicalLevel>& levels() const noexcept { return levels_; }
    std::uint32_t exponent(std::size_t i) const { return levels_.at(i).exponent; }
    const MultiPoly& radicand(std::size_t i) const { return levels_.at(i).radicand; }
    const WeightVector& weights() const noexcept { return weights_; }
    bool nested() const noexcept { return nested_; }

    /// e_1·…·e_m.
    std::uint64_t degree_product() const
    {
        std::uint64_t p = 1;
        for (const auto& l : levels_)
            p *= l.exponent;
        return p;
    }

    /// E_i = Δ_i^{e_i} − g_i.
    MultiPoly tower_polynomial(std::size_t i) const
    {
        return MultiPoly::variable(vars_, radical_vars_.at(i), levels_.at(i).exponent) - levels_.at(i).radicand;
    }

    /// Variables t, Δ_1..Δ_m.
    std::vector<std::size_t> tower_vars() const
    {
        std::vector<std::size_t> out{parameter_};
        out.insert(out.end(), radical_vars_.begin(), radical_vars_.end());
        return out;
    }

    friend RadicalTower validate_tower(VarTablePtr vars, std::vector<RadicalLevel> levels);

private:
    VarTablePtr vars_;
    std::size_t parameter_ = 0;
    std::vector<std::size_t> radical_vars_;
    std::vector<RadicalLevel> levels_;
    WeightVector weights_;
    bool nested_ = false;
};

/// Check the tower invariants and compute the weights bottom-up:
/// w(t) = 1 and w(Δ_i) = deg_w(g_i) / e_i.
inline RadicalTower validate_tower(VarTablePtr vars, std::vector<RadicalLevel> levels)
{
    if (!vars)
        throw StructuralError("tower without a variable table");
    const auto params = vars->with_role(VarRole::parameter);
    if (params.size() != 1 || params.front() != 0)
        throw InputError("the variable table needs the parameter t in first position");
    const auto radicals = vars->with_role(VarRole::radical);
    if (radicals.size() != levels.size())
        throw InputError("tower has " + std::to_string(levels.size()) + " levels but the table declares " +
                         std::to_string(radicals.size()) + " radicals");

    RadicalTower tower;
    tower.vars_ = vars;
    tower.parameter_ = 0;
    tower.radical_vars_ = radicals;
    tower.weights_ = WeightVector(std::vector<BigRat>(vars->size(), BigRat(0)));
    tower.weights_[0] = 1;

    for (std::size_t i = 0; i < levels.size(); ++i) {
        auto& level = levels[i];
        const auto& name = (*vars)[radicals[i]].name;
        if (level.exponent < 2)
            throw TowerError(TowerError::Kind::exponent,
                             "radical '" + name + "' has exponent " + std::to_string(level.exponent) + " < 2");
        if (!level.radicand.vars())
            level.radicand = MultiPoly(vars);
        require_same_table(level.radicand, MultiPoly(vars));
        if (level.radicand.is_zero())
            throw TowerError(TowerError::Kind::constant_radicand, "radicand of '" + name + "' is zero");
        for (std::size_t v : level.radicand.support()) {
            if (v == 0)
                continue;
            std::size_t j = 0;
            while (j < i && radicals[j] != v)
                ++j;
            if (j == i)
                throw TowerError(TowerError::Kind::order, "radicand of '" + name + "' uses '" + (*vars)[v].name +
                                                              "', which is not an earlier radical");
            if (level.radicand.degree_in(v) >= levels[j].exponent)
                throw TowerError(TowerError::Kind::non_reduced_radicand,
                                 "radicand of '" + name + "' has degree >= " + std::to_string(levels[j].exponent) +
                                     " in '" + (*vars)[v].name + "'");
            tower.nested_ = true;
        }
        const BigRat w = *weighted_degree(level.radicand, tower.weights_) / level.exponent;
        if (w == 0)
            throw TowerError(TowerError::Kind::constant_radicand,
                             "radicand of '" + name + "' is constant; constants are not radicals");
        tower.weights_[radicals[i]] = w;
    }
    tower.levels_ = std::move(levels);
    return tower;
}

/// N(f): substitute Δ_i^{e_i} → g_i until every deg_{Δ_i} < e_i. Variables
/// outside the tower are carried along untouched.
inline MultiPoly normal_form(const MultiPoly& f, const RadicalTower& tower)
{
    require_same_table(f, MultiPoly(tower.vars()));
    MultiPoly current = f;
    for (std::size_t i = tower.size(); i-- > 0;) {
        const std::size_t var = tower.radical_var(i);
        const std::uint32_t e = tower.exponent(i);
        if (current.degree_in(var) < e)
            continue;
        std::vector<MultiPoly> radicand_powers{MultiPoly::constant(tower.vars(), 1)};
        MultiPoly next(tower.vars());
        for (const auto& [exps, c] : current.terms()) {
            const std::uint32_t q = exps[var] / e;
            if (q == 0) {
                next.accumulate(exps, c);
                continue;
            }
            while (radicand_powers.size() <= q)
                radicand_powers.push_back(radicand_powers.back() * tower.radicand(i));
            Exponents rest = exps;
            rest[var] %= e;
            for (const auto& [pe, pc] : radicand_powers[q].terms()) {
                Exponents m = rest;
                for (std::size_t k = 0; k < m.size(); ++k)
                    m[k] += pe[k];
                next.accumulate(std::move(m), c * pc);
            }
        }
        current = std::move(next);
    }
    return current;
}

inline bool is_normal(const MultiPoly& f, const RadicalTower& tower)
{
    for (std::size_t i = 0; i < tower.size(); ++i)
        if (f.degree_in(tower.radical_var(i)) >= tower.exponent(i))
            return false;
    return true;
}

} // namespace radsurj
