#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "radsurj/degree.hpp"
#include "radsurj/remainder.hpp"
#include "radsurj/resultant.hpp"
#include "radsurj/tower.hpp"

namespace radsurj {

struct GuiltReport {
    BigRat expected_degree;  // deg_w(f)·e_1⋯e_m
    Degree actual_degree;    // deg(R(f)); nullopt when R(f) = 0
    bool guilty = false;
    RemainderTrace trace;
};

/// f is guilty when R(f) has lower degree than deg_w(f)·e_1⋯e_m.
inline GuiltReport is_guilty(const MultiPoly& f, const RadicalTower& tower)
{
    const MultiPoly nf = normal_form(f, tower);
    if (nf.is_zero())
        throw DomainError("guiltiness of the zero polynomial");
    GuiltReport report;
    report.expected_degree = *weighted_degree(nf, tower.weights()) * BigRat(tower.degree_product());
    report.trace = normalized_remainder_trace(nf, tower);
    report.actual_degree = weighted_degree(report.trace.result(), tower.weights());
    report.guilty = !report.actual_degree || report.expected_degree > *report.actual_degree;
    return report;
}

enum class SuspicionClause { none, tied_leading_terms, suspicious_radicand };

inline const char* to_string(SuspicionClause c)
{
    switch (c) {
    case SuspicionClause::none: return "none";
    case SuspicionClause::tied_leading_terms: return "tied-leading-terms";
    case SuspicionClause::suspicious_radicand: return "suspicious-radicand";
    }
    return "?";
}

/// One link of the suspicion chain. `level` is the tower level whose
/// radicand was examined (nullopt for the input polynomial itself);
/// `via_radical` names the radical of the leading monomial that led there.
struct SuspicionStep {
    std::optional<std::size_t> level;
    SuspicionClause clause = SuspicionClause::none;
    std::optional<std::size_t> via_radical;
};

struct SuspicionWitness {
    bool suspicious = false;
    std::vector<SuspicionStep> chain;
};

namespace detail {

inline bool suspicious_chain(const MultiPoly& f, const RadicalTower& tower, std::optional<std::size_t> level,
                             std::vector<SuspicionStep>& chain)
{
    const MultiPoly lead = leading_form(f, tower.weights());
    if (lead.term_count() >= 2) {
        chain.push_back({level, SuspicionClause::tied_leading_terms, std::nullopt});
        return true;
    }
    const auto& exps = lead.leading_term().first;
    for (std::size_t i = 0; i < tower.size(); ++i) {
        if (exps[tower.radical_var(i)] == 0)
            continue;
        std::vector<SuspicionStep> sub;
        if (suspicious_chain(tower.radicand(i), tower, i, sub)) {
            chain.push_back({level, SuspicionClause::suspicious_radicand, i});
            chain.insert(chain.end(), sub.begin(), sub.end());
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Syntactic over-approximation of guilt: tied leading terms, or a single
/// leading monomial containing a radical whose radicand is suspicious.
inline SuspicionWitness is_suspicious(const MultiPoly& f, const RadicalTower& tower)
{
    const MultiPoly nf = normal_form(f, tower);
    if (nf.is_zero())
        throw DomainError("suspicion test of the zero polynomial");
    SuspicionWitness w;
    w.suspicious = detail::suspicious_chain(nf, tower, std::nullopt, w.chain);
    return w;
}

/// Single-radical guilt test from leading coefficients only: with
/// f = Σ c_i(t)Δ^i, J the indices attaining the weighted degree and
/// f_l(Δ) = Σ_{i∈J} lc(c_i)Δ^i, f is guilty iff Res_Δ(Δ^e − lc(g), f_l) = 0.
inline bool fast_guilty_single(const MultiPoly& f, const RadicalTower& tower)
{
    if (tower.size() != 1)
        throw UnsupportedError("fast guiltiness test needs a tower with exactly one radical");
    const std::size_t t = tower.parameter();
    const std::size_t delta = tower.radical_var(0);
    const std::size_t allowed[] = {t, delta};
    const MultiPoly nf = normal_form(f, tower);
    if (nf.is_zero())
        throw DomainError("guiltiness of the zero polynomial");
    if (!nf.only_uses(allowed))
        throw DomainError("fast guiltiness test expects a polynomial in t and the radical only");

    const auto& vars = tower.vars();
    const MultiPoly& g = tower.radicand(0);
    const std::uint32_t e = tower.exponent(0);
    const BigRat w = tower.weights()[delta];
    const BigRat lead_g = g.leading_coefficient_in(t).constant_value();

    const auto coeffs = nf.coefficients_in(delta);
    std::optional<BigRat> top;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        BigRat d = BigRat(coeffs[i].degree_in(t)) + w * BigRat(static_cast<unsigned long>(i));
        if (!top || d > *top)
            top = d;
    }
    MultiPoly leading(vars);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero())
            continue;
        BigRat d = BigRat(coeffs[i].degree_in(t)) + w * BigRat(static_cast<unsigned long>(i));
        if (d != *top)
            continue;
        const BigRat lc = coeffs[i].leading_coefficient_in(t).constant_value();
        leading += MultiPoly::variable(vars, delta, static_cast<std::uint32_t>(i)) * lc;
    }
    const MultiPoly model = MultiPoly::variable(vars, delta, e) - MultiPoly::constant(vars, lead_g);
    return resultant(model, leading, delta).is_zero();
}

} // namespace radsurj
