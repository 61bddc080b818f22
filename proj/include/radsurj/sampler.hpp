#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <ostream>
#include <vector>

#include "radsurj/missing.hpp"
#include "radsurj/param.hpp"
#include "radsurj/roots.hpp"
#include "radsurj/tower.hpp"

namespace radsurj {

struct SamplerConfig {
    double branch_tol = 1e-9;       // radicand treated as zero below this
    double denominator_tol = 1e-9;  // reject evaluations with |q_i| at or below this
    double residual_tol = 1e-8;     // scaled implicit residual
    double match_tol = 1e-3;        // candidate-to-image distance
    double root_tol = 1e-10;
};

struct BranchPoint {
    Complex t;
    std::vector<Complex> deltas;
    std::vector<Complex> image;
    std::vector<double> denominator_magnitudes;
};

namespace detail {

inline std::vector<Complex> tower_point(const RadicalTower& tower, Complex t, const std::vector<Complex>& deltas)
{
    std::vector<Complex> point(tower.vars()->size(), Complex(0));
    point[tower.parameter()] = t;
    for (std::size_t i = 0; i < deltas.size(); ++i)
        point[tower.radical_var(i)] = deltas[i];
    return point;
}

inline void branches_from(const RadicalTower& tower, Complex t, double tol, std::vector<Complex>& prefix,
                          std::vector<std::vector<Complex>>& out)
{
    const std::size_t level = prefix.size();
    if (level == tower.size()) {
        out.push_back(prefix);
        return;
    }
    const Complex g = tower.radicand(level).evaluate<Complex>(tower_point(tower, t, prefix));
    const unsigned e = tower.exponent(level);
    if (std::abs(g) <= tol) {
        prefix.push_back(Complex(0));
        branches_from(tower, t, tol, prefix, out);
        prefix.pop_back();
        return;
    }
    const double modulus = std::pow(std::abs(g), 1.0 / e);
    for (unsigned k = 0; k < e; ++k) {
        prefix.push_back(std::polar(modulus, (std::arg(g) + 2 * std::numbers::pi * k) / e));
        branches_from(tower, t, tol, prefix, out);
        prefix.pop_back();
    }
}

inline double distance(const std::vector<Complex>& a, const std::vector<Complex>& b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::norm(a[i] - b[i]);
    return std::sqrt(s);
}

} // namespace detail

/// Every choice of radical values over t₀, depth first. A radicand of
/// modulus at most `tol` contributes the single branch 0.
inline std::vector<std::vector<Complex>> enumerate_branches(const RadicalTower& tower, Complex t0,
                                                            double tol = 1e-9)
{
    std::vector<std::vector<Complex>> out;
    std::vector<Complex> prefix;
    detail::branches_from(tower, t0, tol, prefix, out);
    return out;
}

/// Evaluate the parametrization on every branch over t₀. Branches where a
/// denominator is too small are returned with an empty image.
inline std::vector<BranchPoint> evaluate_branches(const RadicalParametrization& param, Complex t0,
                                                  const SamplerConfig& config = {})
{
    std::vector<BranchPoint> out;
    for (auto& deltas : enumerate_branches(param.tower, t0, config.branch_tol)) {
        BranchPoint bp;
        bp.t = t0;
        const auto point = detail::tower_point(param.tower, t0, deltas);
        bp.deltas = std::move(deltas);
        bool ok = true;
        std::vector<Complex> image;
        for (const auto& c : param.components) {
            const Complex q = c.denominator.evaluate<Complex>(point);
            bp.denominator_magnitudes.push_back(std::abs(q));
            if (std::abs(q) <= config.denominator_tol) {
                ok = false;
                continue;
            }
            image.push_back(c.numerator.evaluate<Complex>(point) / q);
        }
        if (ok)
            bp.image = std::move(image);
        out.push_back(std::move(bp));
    }
    return out;
}

/// n/3 points on |t| = 0.7, n/3 on |t| = 3.1 and the rest evenly spaced on [−5, 5].
inline std::vector<Complex> default_samples(std::size_t n = 600)
{
    const std::size_t per_circle = n / 3;
    const std::size_t real = n - 2 * per_circle;
    std::vector<Complex> out;
    for (double radius : {0.7, 3.1})
        for (std::size_t k = 0; k < per_circle; ++k)
            out.push_back(std::polar(radius, 2 * std::numbers::pi * static_cast<double>(k) / per_circle));
    for (std::size_t k = 0; k < real; ++k)
        out.push_back(Complex(real == 1 ? 0.0 : -5.0 + 10.0 * static_cast<double>(k) / (real - 1), 0.0));
    return out;
}

struct SampleReport {
    std::size_t sample_count = 0;
    std::size_t evaluations = 0;
    std::vector<BranchPoint> accepted;
    std::size_t rejected = 0;
    std::optional<double> max_implicit_residual;
    SamplerConfig config;
};

inline SampleReport sample_images(const RadicalParametrization& param, const std::vector<Complex>& samples,
                                  const SamplerConfig& config = {},
                                  const std::optional<std::vector<MultiPoly>>& implicit = std::nullopt)
{
    SampleReport report;
    report.sample_count = samples.size();
    report.config = config;
    if (implicit)
        report.max_implicit_residual = 0.0;
    for (const auto& t0 : samples) {
        for (auto& bp : evaluate_branches(param, t0, config)) {
            ++report.evaluations;
            if (bp.image.empty()) {
                ++report.rejected;
                continue;
            }
            if (implicit)
                report.max_implicit_residual =
                    std::max(*report.max_implicit_residual, implicit_residual(*implicit, param, bp.image));
            report.accepted.push_back(std::move(bp));
        }
    }
    return report;
}

struct CandidateVerdict {
    std::vector<Complex> point;
    bool covered = false;
    std::optional<Complex> parameter;  // t₀ reaching the point, when covered
    double min_distance = std::numeric_limits<double>::infinity();  // to the sampled cloud
};

namespace detail {

/// Parameters t with G_j(x_j*, t) = 0, leading coefficients below the
/// relative threshold dropped.
inline std::vector<Complex> parameter_candidates(const MultiPoly& g, std::size_t x, std::size_t t, Complex value)
{
    if (g.is_zero() || g.degree_in(t) == 0)
        return {};
    std::vector<Complex> coeffs(g.degree_in(t) + 1, Complex(0));
    for (const auto& [e, c] : g.terms()) {
        Complex term = c.get_d();
        for (std::uint32_t k = 0; k < e[x]; ++k)
            term *= value;
        coeffs[e[t]] += term;
    }
    double largest = 0;
    for (const auto& c : coeffs)
        largest = std::max(largest, std::abs(c));
    while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-9 * largest)
        coeffs.pop_back();
    if (coeffs.size() < 2)
        return {};
    try {
        return complex_roots(coeffs, 1e-12);
    } catch (const NumericError&) {
        return {};
    }
}

} // namespace detail

/// Decide, heuristically, whether each candidate is reached. A candidate is
/// covered when some parameter solving G_j(x_j*, t) = 0 has a branch whose
/// image lies within the match tolerance, or a sampled image does.
inline std::vector<CandidateVerdict> confirm_candidates(const SampleReport& report,
                                                        const std::vector<std::vector<Complex>>& candidates,
                                                        const RadicalParametrization& param,
                                                        const SamplerConfig& config = {})
{
    std::vector<MultiPoly> gs;
    for (std::size_t j = 0; j < param.components.size(); ++j)
        gs.push_back(component_G(param, j));

    std::vector<CandidateVerdict> out;
    for (const auto& cand : candidates) {
        CandidateVerdict v;
        v.point = cand;
        std::optional<Complex> nearest;
        for (const auto& bp : report.accepted) {
            const double d = detail::distance(bp.image, cand);
            if (d < v.min_distance) {
                v.min_distance = d;
                nearest = bp.t;
            }
        }
        for (std::size_t j = 0; j < gs.size() && !v.covered; ++j) {
            const auto ts = detail::parameter_candidates(gs[j], param.components[j].coordinate,
                                                         param.tower.parameter(), cand.at(j));
            for (const auto& t0 : ts) {
                for (const auto& bp : evaluate_branches(param, t0, config)) {
                    if (!bp.image.empty() && detail::distance(bp.image, cand) <= config.match_tol) {
                        v.covered = true;
                        v.parameter = t0;
                        break;
                    }
                }
                if (v.covered)
                    break;
            }
        }
        if (!v.covered && v.min_distance <= config.match_tol) {
            v.covered = true;
            v.parameter = nearest;
        }
        out.push_back(std::move(v));
    }
    return out;
}

/// One row per accepted image: re/im of t, of each radical, of each coordinate.
inline void write_csv(std::ostream& os, const SampleReport& report, const RadicalParametrization& param)
{
    const auto& vars = *param.vars();
    os << "t_re,t_im";
    for (std::size_t i = 0; i < param.tower.size(); ++i) {
        const auto& name = vars[param.tower.radical_var(i)].name;
        os << ',' << name << "_re," << name << "_im";
    }
    for (const auto& c : param.components)
        os << ',' << c.name << "_re," << c.name << "_im";
    os << '\n';
    os.precision(17);
    auto put = [&](Complex z) { os << ',' << z.real() << ',' << z.imag(); };
    for (const auto& bp : report.accepted) {
        os << bp.t.real() << ',' << bp.t.imag();
        for (const auto& d : bp.deltas)
            put(d);
        for (const auto& x : bp.image)
            put(x);
        os << '\n';
    }
}

} // namespace radsurj
