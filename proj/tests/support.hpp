#pragma once

#include <complex>
#include <ostream>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radsurj/radsurj.hpp"

namespace radsurj {

// Readable GoogleTest failure output.
inline void PrintTo(const MultiPoly& f, std::ostream* os) { *os << f.to_string(); }

} // namespace radsurj

namespace radsurj::test {

/// Tower from level declarations such as "d1^2 = t; d2^2 = d1 + 1;".
/// The table also carries a coordinate x and the marker z.
inline RadicalTower tower_of(const std::string& levels)
{
    return parse("tower { " + levels + " } param { x = t; }").tower;
}

inline MultiPoly P(const RadicalTower& tower, std::string_view text) { return parse_polynomial(text, tower.vars()); }

inline MultiPoly P(const RadicalParametrization& param, std::string_view text)
{
    return parse_polynomial(text, param.vars());
}

inline std::size_t var(const RadicalTower& tower, std::string_view name) { return tower.vars()->index_of(name); }

inline std::string str(const MultiPoly& f) { return f.to_string(); }

/// Random towers and normalized polynomials over the table t, d1..dm, x, z.
class Corpus {
public:
    explicit Corpus(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    BigRat coefficient()
    {
        int c = 0;
        while (c == 0)
            c = uniform(-3, 3);
        return c;
    }

    /// m ≤ max_m levels, e_i ≤ max_e, classical total degree of g_i ≤ max_deg.
    RadicalTower tower(int max_m = 3, int max_e = 3, int max_deg = 4, int min_m = 1)
    {
        const int m = uniform(min_m, max_m);
        std::vector<std::string> radicals;
        for (int i = 1; i <= m; ++i)
            radicals.push_back("d" + std::to_string(i));
        const auto vars = make_param_table(radicals, {"x"});
        std::vector<RadicalLevel> levels;
        std::vector<std::uint32_t> exps;
        for (int i = 0; i < m; ++i) {
            RadicalLevel lv;
            lv.exponent = static_cast<std::uint32_t>(uniform(2, max_e));
            lv.radicand = MultiPoly(vars);
            while (lv.radicand.is_zero() || lv.radicand.total_degree() == 0) {
                lv.radicand = MultiPoly(vars);
                const int terms = uniform(1, 3);
                for (int k = 0; k < terms; ++k) {
                    Exponents e(vars->size(), 0);
                    int budget = uniform(0, max_deg);
                    for (int j = i - 1; j >= 0 && budget > 0; --j) {
                        const int a = std::min(budget, uniform(0, static_cast<int>(exps[j]) - 1));
                        e[1 + j] = static_cast<std::uint32_t>(a);
                        budget -= a;
                    }
                    e[0] = static_cast<std::uint32_t>(uniform(0, budget));
                    lv.radicand.accumulate(e, coefficient());
                }
            }
            exps.push_back(lv.exponent);
            levels.push_back(std::move(lv));
        }
        return validate_tower(vars, std::move(levels));
    }

    /// Nonzero polynomial in normal form: 1-4 terms, t-degree ≤ max_t.
    MultiPoly normalized(const RadicalTower& tower, int max_terms = 4, int max_t = 3)
    {
        MultiPoly f(tower.vars());
        while (f.is_zero()) {
            const int terms = uniform(1, max_terms);
            for (int k = 0; k < terms; ++k) {
                Exponents e(tower.vars()->size(), 0);
                e[tower.parameter()] = static_cast<std::uint32_t>(uniform(0, max_t));
                for (std::size_t i = 0; i < tower.size(); ++i)
                    e[tower.radical_var(i)] = static_cast<std::uint32_t>(uniform(0, tower.exponent(i) - 1));
                f.accumulate(e, coefficient());
            }
        }
        return f;
    }

    /// Univariate polynomial in `v` with the given rational roots and leading coefficient.
    MultiPoly from_roots(const VarTablePtr& vars, std::size_t v, const std::vector<BigRat>& roots, const BigRat& lead)
    {
        MultiPoly f = MultiPoly::constant(vars, lead);
        for (const auto& r : roots)
            f = f * (MultiPoly::variable(vars, v) - MultiPoly::constant(vars, r));
        return f;
    }

    /// Towers where d1^e = t^(e·k) + lower, paired with f = t^k - d1 + lower.
    /// The top weighted forms cancel, which is how guilt arises.
    std::pair<RadicalTower, MultiPoly> cancelling_instance(int max_m)
    {
        const int e = uniform(2, 3);
        const int k = uniform(1, 2);
        std::string levels =
            "d1^" + std::to_string(e) + " = t^" + std::to_string(e * k) + " + " + poly_text(e * k - 1) + ";";
        const int m = uniform(1, max_m);
        for (int i = 2; i <= m; ++i)
            levels += " d" + std::to_string(i) + "^" + std::to_string(uniform(2, 3)) + " = t^3 + " +
                      poly_text(2, "d" + std::to_string(i - 1)) + ";";
        const auto T = tower_of(levels);
        return {T, P(T, "t^" + std::to_string(k) + " - d1 + " + poly_text(k - 1))};
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::string poly_text(int max_t_degree, const std::string& extra = "")
    {
        std::string out = "0";
        for (int k = 0; k <= max_t_degree; ++k)
            if (uniform(0, 1))
                out += " + (" + coefficient().get_str() + ")*t^" + std::to_string(k);
        if (!extra.empty() && uniform(0, 1))
            out += " + (" + coefficient().get_str() + ")*" + extra;
        return out;
    }

    std::mt19937_64 rng_;
};

/// One-component parametrization x = p/q over the tower's table.
inline RadicalParametrization single_component(const RadicalTower& T, const MultiPoly& p, const MultiPoly& q)
{
    RawParametrization raw;
    raw.vars = T.vars();
    raw.levels = T.levels();
    raw.components.push_back({"x", p, q});
    return normalize_param(raw);
}

/// The x^0 coefficient strictly dominates the other x-coefficients in
/// weighted degree at every step of the trace.
inline bool constant_coefficient_dominates(const RemainderTrace& trace, const RadicalTower& T, std::size_t x)
{
    for (const auto& step : trace.steps) {
        const auto coeffs = step.coefficients_in(x);
        if (coeffs.empty() || coeffs[0].is_zero())
            return false;
        const BigRat top = *weighted_degree(coeffs[0], T.weights());
        for (std::size_t j = 1; j < coeffs.size(); ++j) {
            const auto d = weighted_degree(coeffs[j], T.weights());
            if (d && *d >= top)
                return false;
        }
    }
    return true;
}

/// Trace condition on the witness component of a certified parametrization:
/// dominance at every step and a constant leading t-coefficient of G.
inline bool witness_trace_ok(const RadicalParametrization& param, std::size_t i)
{
    const auto& c = param.components.at(i);
    const auto x = MultiPoly::variable(param.vars(), c.coordinate);
    const auto trace = normalized_remainder_trace(x * c.denominator - c.numerator, param.tower);
    return constant_coefficient_dominates(trace, param.tower, c.coordinate) &&
           trace.result().leading_coefficient_in(param.tower.parameter()).is_constant();
}

} // namespace radsurj::test
