#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "radsurj/poly.hpp"

namespace radsurj {

namespace detail {

inline std::optional<std::size_t> main_variable(const MultiPoly& a, const MultiPoly& b)
{
    for (std::size_t v = a.arity(); v-- > 0;)
        if (a.involves(v) || b.involves(v))
            return v;
    return std::nullopt;
}

} // namespace detail

inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

/// gcd of the coefficients of f seen as a polynomial in var.
inline MultiPoly content_in(const MultiPoly& f, std::size_t var)
{
    MultiPoly g(f.vars());
    for (const auto& c : f.coefficients_in(var)) {
        if (c.is_zero())
            continue;
        g = poly_gcd(g, c);
        if (g.is_constant())
            break;
    }
    return g;
}

inline MultiPoly primitive_part_in(const MultiPoly& f, std::size_t var)
{
    if (f.is_zero())
        return f;
    return divide_exact(f, content_in(f, var));
}

/// Multivariate gcd over ℚ by recursive primitive remainder sequences.
/// Normalised so that the grlex leading coefficient is 1; gcd(0, 0) = 0.
inline MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b)
{
    require_same_table(a, b);
    if (a.is_zero())
        return b.monic();
    if (b.is_zero())
        return a.monic();
    const auto var = detail::main_variable(a, b);
    if (!var)
        return MultiPoly::constant(a.vars(), 1);
    const std::size_t v = *var;
    if (!a.involves(v))
        return poly_gcd(a, content_in(b, v));
    if (!b.involves(v))
        return poly_gcd(content_in(a, v), b);

    const MultiPoly ca = content_in(a, v);
    const MultiPoly cb = content_in(b, v);
    const MultiPoly content = poly_gcd(ca, cb);
    MultiPoly p = divide_exact(a, ca);
    MultiPoly q = divide_exact(b, cb);
    if (p.degree_in(v) < q.degree_in(v))
        std::swap(p, q);
    while (!q.is_zero() && q.degree_in(v) > 0) {
        MultiPoly r = pseudo_remainder(p, q, v);
        p = std::move(q);
        q = r.is_zero() ? r : primitive_part_in(r, v).monic();
    }
    if (!q.is_zero())
        return content.monic(); // q is a nonzero constant in v: primitive parts are coprime
    return (content * primitive_part_in(p, v)).monic();
}

/// Monic gcd of two univariate polynomials in `var`.
inline MultiPoly univ_gcd(const MultiPoly& a, const MultiPoly& b, std::size_t var)
{
    const std::size_t allowed[] = {var};
    if (!a.only_uses(allowed) || !b.only_uses(allowed))
        throw DomainError("univ_gcd expects polynomials in a single variable");
    return poly_gcd(a, b);
}

/// f / gcd(f, ∂f/∂var); every repeated factor involving var collapses.
inline MultiPoly squarefree_part(const MultiPoly& f, std::size_t var)
{
    if (f.is_zero())
        throw DomainError("squarefree part of the zero polynomial");
    const MultiPoly g = poly_gcd(f, f.derivative(var));
    return divide_exact(f, g);
}

} // namespace radsurj
