#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "radsurj/gcd.hpp"
#include "radsurj/groebner.hpp"
#include "radsurj/param.hpp"
#include "radsurj/remainder.hpp"
#include "radsurj/roots.hpp"

namespace radsurj {

/// G_i(x_i, t) = R(x_i·q_i − p_i), with x_i carried through as an inert variable.
inline MultiPoly component_G(const RadicalParametrization& param, std::size_t i)
{
    const auto& comp = param.components.at(i);
    const MultiPoly x = MultiPoly::variable(param.vars(), comp.coordinate);
    return normalized_remainder(x * comp.denominator - comp.numerator, param.tower);
}

struct CoordinateCandidates {
    MultiPoly g;         // G_i
    MultiPoly cleaned;   // squarefree part of G_i in t
    MultiPoly leading;   // c_i(x_i), monic; constant when nothing can be missed
    std::size_t degree = 0;
    std::vector<BigRat> rational_roots;
    std::vector<Complex> numeric_roots;  // distinct roots of c_i
    bool exact_roots_complete = true;    // false when the sieve gave up on huge coefficients
};

struct CandidatePolySet {
    std::vector<CoordinateCandidates> coordinates;
};

/// c_i = lc_t(squarefree_part(G_i, t)) times the squarefree part of the
/// t-content of G_i. The content factor matters when a coordinate is
/// constant along a component of the curve; there it is the whole
/// generator of I(A_P) ∩ ℚ[x_i, t].
inline CoordinateCandidates coordinate_candidates(const RadicalParametrization& param, std::size_t i,
                                                  double root_tol = 1e-10)
{
    const std::size_t t = param.tower.parameter();
    const std::size_t x = param.components.at(i).coordinate;
    CoordinateCandidates cc;
    cc.g = component_G(param, i);
    if (cc.g.is_zero()) {
        cc.cleaned = cc.g;
        cc.leading = cc.g;
        return cc;
    }
    cc.cleaned = squarefree_part(cc.g, t);
    MultiPoly content = content_in(cc.g, t);
    if (content.involves(x))
        content = squarefree_part(content, x);
    cc.leading = (cc.cleaned.leading_coefficient_in(t) * content).monic();
    cc.degree = cc.leading.degree_in(x);
    if (cc.degree == 0)
        return cc;

    const MultiPoly distinct = squarefree_part(cc.leading, x);
    try {
        cc.rational_roots = rational_roots(cc.leading, x);
    } catch (const ResourceError&) {
        cc.exact_roots_complete = false;
    }
    const auto coeffs = numeric_coefficients(distinct, x);
    cc.numeric_roots = complex_roots(coeffs, root_tol);
    // c_i is real and squarefree: a root this close to the axis is real.
    // Rational roots are snapped to their exact values.
    for (auto& r : cc.numeric_roots) {
        if (std::abs(r.imag()) <= 1e-9 * std::max(1.0, std::abs(r)))
            r = Complex(r.real(), 0.0);
        for (const auto& q : cc.rational_roots)
            if (std::abs(r - Complex(q.get_d())) <= 1e-8 * std::max(1.0, std::abs(q.get_d())))
                r = Complex(q.get_d());
    }
    std::sort(cc.numeric_roots.begin(), cc.numeric_roots.end(), [](const Complex& a, const Complex& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return cc;
}

inline CandidatePolySet candidate_polys(const RadicalParametrization& param, double root_tol = 1e-10)
{
    CandidatePolySet set;
    for (std::size_t i = 0; i < param.components.size(); ++i)
        set.coordinates.push_back(coordinate_candidates(param, i, root_tol));
    return set;
}

/// ∏ max(e_i, classical total degree of g_i).
inline std::uint64_t infinity_bound(const RadicalTower& tower)
{
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < tower.size(); ++i)
        bound *= std::max<std::uint64_t>(tower.exponent(i), tower.radicand(i).total_degree());
    return bound;
}

/// Generators of D_P: E_i, p_i − x_i·q_i and z·Q − 1 with Q the product of
/// the distinct denominators.
inline std::vector<MultiPoly> incidence_generators(const RadicalParametrization& param)
{
    const auto& vars = param.vars();
    std::vector<MultiPoly> gens;
    for (std::size_t k = 0; k < param.tower.size(); ++k)
        gens.push_back(param.tower.tower_polynomial(k));
    std::vector<MultiPoly> distinct;
    for (const auto& c : param.components) {
        gens.push_back(c.numerator - MultiPoly::variable(vars, c.coordinate) * c.denominator);
        const MultiPoly q = c.denominator.monic();
        if (!q.is_constant() && std::find(distinct.begin(), distinct.end(), q) == distinct.end())
            distinct.push_back(q);
    }
    MultiPoly product = MultiPoly::constant(vars, 1);
    for (const auto& q : distinct)
        product = product * q;
    gens.push_back(MultiPoly::variable(vars, param.inverse_marker) * product - MultiPoly::constant(vars, 1));
    return gens;
}

/// Implicit equations of the closure of the image.
inline std::vector<MultiPoly> implicitize(const RadicalParametrization& param,
                                          std::uint64_t step_budget = default_step_budget)
{
    std::vector<std::size_t> coords;
    for (const auto& c : param.components)
        coords.push_back(c.coordinate);
    return elimination_ideal(incidence_generators(param), coords, step_budget);
}

enum class LocusKind { empty, finite, positive_dimensional, unknown };

inline const char* to_string(LocusKind k)
{
    switch (k) {
    case LocusKind::empty: return "empty";
    case LocusKind::finite: return "finite";
    case LocusKind::positive_dimensional: return "positive-dimensional";
    case LocusKind::unknown: return "unknown";
    }
    return "?";
}

struct Condition2Locus {
    LocusKind kind = LocusKind::unknown;
    std::optional<IdealBasis> basis;
};

/// Common zeros of Ē, p_i, q_i in (t, Δ̄): the 0/0 indeterminacies of x_i.
inline Condition2Locus condition2_locus(const RadicalParametrization& param, std::size_t i,
                                        std::uint64_t step_budget = default_step_budget)
{
    std::vector<MultiPoly> gens;
    for (std::size_t k = 0; k < param.tower.size(); ++k)
        gens.push_back(param.tower.tower_polynomial(k));
    const auto& comp = param.components.at(i);
    if (!comp.numerator.is_zero())
        gens.push_back(comp.numerator);
    gens.push_back(comp.denominator);
    Condition2Locus locus;
    try {
        locus.basis = buchberger(gens, TermOrder::grevlex(param.tower.tower_vars()), step_budget);
    } catch (const ResourceError&) {
        return locus;
    }
    if (locus.basis->is_unit())
        locus.kind = LocusKind::empty;
    else if (is_zero_dimensional(*locus.basis))
        locus.kind = LocusKind::finite;
    else
        locus.kind = LocusKind::positive_dimensional;
    return locus;
}

struct MissingConfig {
    double root_tol = 1e-10;
    double filter_tol = 1e-8;
    std::size_t max_tuples = 100'000;
    std::uint64_t step_budget = default_step_budget;
};

struct CandidateTuple {
    std::vector<Complex> coords;
    double implicit_residual = 0;  // max scaled residual over the implicit generators
};

struct MissingPointReport {
    CandidatePolySet polys;
    std::vector<CandidateTuple> candidates;  // after the implicit filter
    std::size_t unfiltered_count = 0;
    std::uint64_t hyp1_bound = 0;
    std::uint64_t infinity_bound = 0;
    std::vector<Condition2Locus> condition2;
    std::optional<std::vector<MultiPoly>> implicit;
    std::vector<std::string> notes;
};

/// Largest scaled residual |F(x)| / Σ|c_α||x^α| over the generators.
inline double implicit_residual(const std::vector<MultiPoly>& implicit, const RadicalParametrization& param,
                                const std::vector<Complex>& point)
{
    std::vector<Complex> full(param.vars()->size(), Complex(0));
    for (std::size_t i = 0; i < param.components.size(); ++i)
        full[param.components[i].coordinate] = point.at(i);
    double worst = 0;
    for (const auto& f : implicit) {
        const double scale = f.magnitude_at(full);
        const double value = std::abs(f.evaluate<Complex>(full));
        worst = std::max(worst, scale > 0 ? value / scale : value);
    }
    return worst;
}

/// Superset of the points missed through the failure of hypothesis 1,
/// plus the bounds and the hypothesis-2 loci.
inline MissingPointReport missing_candidates(const RadicalParametrization& param,
                                             std::optional<std::vector<MultiPoly>> implicit = std::nullopt,
                                             const MissingConfig& config = {})
{
    MissingPointReport report;
    report.polys = candidate_polys(param, config.root_tol);
    report.infinity_bound = infinity_bound(param.tower);
    report.hyp1_bound = 1;
    bool degenerate = false;
    bool empty = false;
    for (const auto& cc : report.polys.coordinates) {
        report.hyp1_bound *= cc.degree;
        if (cc.leading.is_zero())
            degenerate = true;
        else if (cc.degree == 0)
            empty = true;
    }
    for (std::size_t i = 0; i < param.components.size(); ++i)
        report.condition2.push_back(condition2_locus(param, i, config.step_budget));

    if (!implicit) {
        try {
            implicit = implicitize(param, config.step_budget);
        } catch (const ResourceError&) {
            report.notes.push_back("implicitization exceeded the step budget; candidates are not filtered");
        }
    }
    report.implicit = implicit;

    if (degenerate) {
        report.notes.push_back("some G_i vanishes identically; no candidate set can be derived");
        return report;
    }
    if (empty)
        return report;

    std::size_t count = 1;
    for (const auto& cc : report.polys.coordinates) {
        count *= cc.numeric_roots.size();
        if (count > config.max_tuples) {
            report.notes.push_back("candidate product exceeds " + std::to_string(config.max_tuples) + " tuples");
            return report;
        }
    }
    report.unfiltered_count = count;
    std::vector<std::size_t> index(report.polys.coordinates.size(), 0);
    for (std::size_t n = 0; n < count; ++n) {
        CandidateTuple tuple;
        for (std::size_t i = 0; i < index.size(); ++i)
            tuple.coords.push_back(report.polys.coordinates[i].numeric_roots[index[i]]);
        if (implicit)
            tuple.implicit_residual = implicit_residual(*implicit, param, tuple.coords);
        if (!implicit || tuple.implicit_residual <= config.filter_tol)
            report.candidates.push_back(std::move(tuple));
        for (std::size_t i = index.size(); i-- > 0;) {
            if (++index[i] < report.polys.coordinates[i].numeric_roots.size())
                break;
            index[i] = 0;
        }
    }
    return report;
}

} // namespace radsurj
