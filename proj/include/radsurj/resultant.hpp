#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "radsurj/poly.hpp"

namespace radsurj {

namespace detail {

/// Fraction-free Gaussian elimination (Bareiss) over the polynomial ring.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, const VarTablePtr& vars)
{
    const std::size_t n = m.size();
    if (n == 0)
        return MultiPoly::constant(vars, 1);
    bool negate = false;
    MultiPoly previous = MultiPoly::constant(vars, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m[p][k].is_zero())
                ++p;
            if (p == n)
                return MultiPoly(vars);
            std::swap(m[k], m[p]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = divide_exact(num, previous);
            }
            m[i][k] = MultiPoly(vars);
        }
        previous = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

inline void check_resultant_args(const MultiPoly& a, const MultiPoly& b, std::size_t var)
{
    require_same_table(a, b);
    if (var >= a.arity())
        throw DomainError("resultant variable is not in the table");
    if (!a.involves(var) && !b.involves(var))
        throw DomainError("resultant variable '" + (*a.vars())[var].name + "' occurs in neither input");
}

} // namespace detail

/// Res_var(a, b) from the Sylvester matrix with rows of a first. When b has
/// degree 0 in var the result is b^deg(a), and symmetrically for a.
inline MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, std::size_t var)
{
    detail::check_resultant_args(a, b, var);
    const auto& vars = a.vars();
    if (a.is_zero() || b.is_zero())
        return MultiPoly(vars);
    const std::uint32_t n = a.degree_in(var);
    const std::uint32_t m = b.degree_in(var);
    if (n == 0)
        return a.pow(m);
    if (m == 0)
        return b.pow(n);

    const auto ca = a.coefficients_in(var);
    const auto cb = b.coefficients_in(var);
    const std::size_t size = n + m;
    std::vector<std::vector<MultiPoly>> sylvester(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k)
            sylvester[row][row + k] = ca[n - k];
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k)
            sylvester[m + row][row + k] = cb[m - k];
    return detail::bareiss_determinant(std::move(sylvester), vars);
}

/// Same resultant through the subresultant remainder sequence.
inline MultiPoly subresultant_resultant(MultiPoly a, MultiPoly b, std::size_t var)
{
    detail::check_resultant_args(a, b, var);
    const auto vars = a.vars();
    if (a.is_zero() || b.is_zero())
        return MultiPoly(vars);
    if (a.degree_in(var) == 0)
        return a.pow(b.degree_in(var));
    if (b.degree_in(var) == 0)
        return b.pow(a.degree_in(var));

    const auto one = MultiPoly::constant(vars, 1);
    MultiPoly g = one;
    MultiPoly h = one;
    BigRat sign = 1;
    if (a.degree_in(var) < b.degree_in(var)) {
        std::swap(a, b);
        if (a.degree_in(var) % 2 == 1 && b.degree_in(var) % 2 == 1)
            sign = -1;
    }
    while (true) {
        const std::uint32_t da = a.degree_in(var);
        const std::uint32_t db = b.degree_in(var);
        const std::uint32_t delta = da - db;
        if (da % 2 == 1 && db % 2 == 1)
            sign = -sign;
        MultiPoly r = pseudo_remainder(a, b, var);
        a = std::move(b);
        if (r.is_zero())
            return MultiPoly(vars);
        b = divide_exact(r, g * h.pow(delta));
        g = a.leading_coefficient_in(var);
        // h <- g^delta / h^(delta - 1)
        if (delta != 0)
            h = divide_exact(g.pow(delta), h.pow(delta - 1));
        if (b.degree_in(var) == 0) {
            const std::uint32_t d = a.degree_in(var);
            // h <- lc(b)^d / h^(d - 1)
            MultiPoly last = d == 0 ? h : divide_exact(b.pow(d), h.pow(d - 1));
            return last * sign;
        }
    }
}

} // namespace radsurj
