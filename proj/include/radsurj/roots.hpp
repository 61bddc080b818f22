#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <sstream>
#include <vector>

#include "radsurj/bigrat.hpp"
#include "radsurj/error.hpp"
#include "radsurj/poly.hpp"

namespace radsurj {

using Complex = std::complex<double>;

namespace detail {

/// Horner evaluation of p and p' (coefficients ascending).
inline void horner(std::span<const Complex> c, Complex z, Complex& p, Complex& dp)
{
    p = 0;
    dp = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
}

inline double horner_scale(std::span<const Complex> c, double r)
{
    double s = 0;
    for (std::size_t k = c.size(); k-- > 0;)
        s = s * r + std::abs(c[k]);
    return s;
}

} // namespace detail

/// All complex roots of Σ coeffs[k]·z^k by Aberth–Ehrlich iteration.
/// Starting points are fixed, so results are reproducible. Each returned root
/// satisfies |p(r)| ≤ tol·Σ|c_k||r|^k.
inline std::vector<Complex> complex_roots(std::span<const Complex> coeffs, double tol = 1e-10,
                                          int max_iterations = 500)
{
    std::vector<Complex> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == Complex(0))
        c.pop_back();
    if (c.size() < 2)
        throw DomainError("root finding needs a polynomial of degree >= 1");
    const std::size_t n = c.size() - 1;
    const Complex lead = c.back();
    for (auto& x : c)
        x /= lead;

    std::vector<Complex> roots;
    // Roots at zero are exact; strip them first.
    std::size_t zeros = 0;
    while (zeros < n && c[zeros] == Complex(0))
        ++zeros;
    roots.assign(zeros, Complex(0));
    std::vector<Complex> p(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
    const std::size_t deg = p.size() - 1;
    if (deg == 0)
        return roots;
    if (deg == 1) {
        roots.push_back(-p[0] / p[1]);
        return roots;
    }

    // Radius from the geometric mean of |p_0|, which sits inside the
    // Cauchy bound and works well for well-spread roots.
    double radius = std::pow(std::abs(p[0]), 1.0 / static_cast<double>(deg));
    double cauchy = 0;
    for (std::size_t k = 0; k < deg; ++k)
        cauchy = std::max(cauchy, std::abs(p[k]));
    radius = std::clamp(radius, 1e-3, 1.0 + cauchy);
    std::vector<Complex> z(deg);
    for (std::size_t k = 0; k < deg; ++k) {
        const double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg) + 0.4;
        z[k] = std::polar(radius, angle);
    }

    auto converged = [&](std::size_t k) {
        Complex v, dv;
        detail::horner(p, z[k], v, dv);
        return std::abs(v) <= tol * detail::horner_scale(p, std::abs(z[k]));
    };

    std::vector<bool> done(deg, false);
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool all = true;
        for (std::size_t k = 0; k < deg; ++k) {
            if (done[k])
                continue;
            Complex v, dv;
            detail::horner(p, z[k], v, dv);
            if (std::abs(v) <= 1e-3 * tol * detail::horner_scale(p, std::abs(z[k]))) {
                done[k] = true;
                continue;
            }
            const Complex ratio = v / dv;
            Complex sum = 0;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != k)
                    sum += 1.0 / (z[k] - z[j]);
            const Complex step = ratio / (1.0 - ratio * sum);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
                continue;
            z[k] -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z[k])))
                done[k] = true;
            else
                all = false;
        }
        if (all)
            break;
    }
    for (std::size_t k = 0; k < deg; ++k) {
        if (!converged(k)) {
            std::ostringstream msg;
            msg << "root finder did not converge; best iterate:";
            for (const auto& r : z)
                msg << ' ' << r;
            throw NumericError(msg.str());
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

/// Complex coefficients (ascending) of a polynomial that only involves `var`.
inline std::vector<Complex> numeric_coefficients(const MultiPoly& f, std::size_t var)
{
    const std::size_t allowed[] = {var};
    if (!f.only_uses(allowed))
        throw DomainError("expected a univariate polynomial");
    std::vector<Complex> out(f.degree_in(var) + 1, Complex(0));
    for (const auto& [e, c] : f.terms())
        out[e[var]] += c.get_d();
    return out;
}

namespace detail {

inline std::vector<BigInt> positive_divisors(BigInt n, const BigInt& limit)
{
    n = abs(n);
    std::vector<BigInt> small, large;
    if (n > limit * limit)
        throw ResourceError("integer too large for the rational root sieve");
    for (BigInt d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n)
                large.push_back(BigInt(n / d));
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace detail

/// Exact rational roots of a univariate polynomial by the rational root
/// theorem, sorted increasingly, without multiplicity.
inline std::vector<BigRat> rational_roots(const MultiPoly& f, std::size_t var)
{
    const std::size_t allowed[] = {var};
    if (f.is_zero() || !f.only_uses(allowed))
        throw DomainError("rational roots need a nonzero univariate polynomial");
    const std::size_t n = f.degree_in(var);
    std::vector<BigRat> c(n + 1, BigRat(0));
    for (const auto& [e, q] : f.terms())
        c[e[var]] = q;
    BigInt den = 1;
    for (const auto& q : c)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<BigInt> a(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        a[k] = BigInt(c[k] * den);

    std::vector<BigRat> roots;
    std::size_t low = 0;
    while (low <= n && a[low] == 0)
        ++low;
    if (low > 0)
        roots.push_back(0);
    if (low == n)
        return roots;

    auto value = [&](const BigRat& x) {
        BigRat v = 0;
        for (std::size_t k = n + 1; k-- > low;)
            v = v * x + BigRat(a[k]);
        return v;
    };
    const BigInt limit = 1'000'000;
    const auto nums = detail::positive_divisors(a[low], limit);
    const auto dens = detail::positive_divisors(a[n], limit);
    for (const auto& p : nums)
        for (const auto& q : dens) {
            for (int s : {1, -1}) {
                BigRat x(p * s, q);
                x.canonicalize();
                if (std::find(roots.begin(), roots.end(), x) == roots.end() && value(x) == 0)
                    roots.push_back(x);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace radsurj
