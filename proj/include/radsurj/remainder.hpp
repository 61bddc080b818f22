#pragma once

#include <cstddef>
#include <vector>

#include "radsurj/resultant.hpp"
#include "radsurj/tower.hpp"

namespace radsurj {

/// The sequence f_m, f_{m-1}, …, f_0 = R(f).
struct RemainderTrace {
    std::vector<MultiPoly> steps;

    const MultiPoly& result() const { return steps.back(); }
};

/// Normalized remainder by nested resultants: f_m = N(f) and
/// f_{k-1} = N(Res_{Δ_k}(E_k, f_k)). Taking the normal form between levels
/// does not change f_0. Variables outside the tower stay inert, so the result
/// lies in ℚ[t, auxiliaries].
inline RemainderTrace normalized_remainder_trace(const MultiPoly& f, const RadicalTower& tower)
{
    RemainderTrace trace;
    trace.steps.reserve(tower.size() + 1);
    trace.steps.push_back(normal_form(f, tower));
    for (std::size_t k = tower.size(); k-- > 0;) {
        const MultiPoly res = resultant(tower.tower_polynomial(k), trace.steps.back(), tower.radical_var(k));
        trace.steps.push_back(normal_form(res, tower));
    }
    return trace;
}

inline MultiPoly normalized_remainder(const MultiPoly& f, const RadicalTower& tower)
{
    return normalized_remainder_trace(f, tower).result();
}

/// N(∏ f(t, ±Δ_1, …, ±Δ_m)) over all 2^m sign choices. Only meaningful as a
/// stand-in for R(f) when every exponent is 2; on nested towers it differs
/// from R(f) in general.
inline MultiPoly conjugate_sign_product(const MultiPoly& f, const RadicalTower& tower)
{
    for (std::size_t i = 0; i < tower.size(); ++i)
        if (tower.exponent(i) != 2)
            throw UnsupportedError("sign-product oracle needs every exponent equal to 2");
    MultiPoly product = MultiPoly::constant(tower.vars(), 1);
    const std::size_t m = tower.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        MultiPoly conj = f;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (std::size_t{1} << i))
                conj = conj.substitute(tower.radical_var(i), -MultiPoly::variable(tower.vars(), tower.radical_var(i)));
        product = normal_form(product * conj, tower);
    }
    return product;
}

/// Full-product formula for R(f), valid for unnested towers with all
/// exponents 2. Used to cross-check normalized_remainder.
inline MultiPoly full_product_R(const MultiPoly& f, const RadicalTower& tower)
{
    if (tower.nested())
        throw UnsupportedError("full-product formula requires an unnested tower");
    return conjugate_sign_product(f, tower);
}

} // namespace radsurj
