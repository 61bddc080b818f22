#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "radsurj/gcd.hpp"
#include "radsurj/groebner.hpp"
#include "radsurj/guilt.hpp"
#include "radsurj/param.hpp"
#include "radsurj/remainder.hpp"

namespace radsurj {

enum class HypothesisMode { guilty, suspicious };
enum class IdealStrategy { exact, gcd, exact_then_gcd };
enum class Verdict { certified_surjective, inconclusive };
enum class CertificatePath { none, theorem_main, cor_pol, cor_3, cor_susp };

inline const char* to_string(HypothesisMode m) { return m == HypothesisMode::guilty ? "guilty" : "suspicious"; }

inline const char* to_string(IdealStrategy s)
{
    switch (s) {
    case IdealStrategy::exact: return "exact";
    case IdealStrategy::gcd: return "gcd";
    case IdealStrategy::exact_then_gcd: return "exact-then-gcd";
    }
    return "?";
}

inline const char* to_string(Verdict v)
{
    return v == Verdict::certified_surjective ? "CERTIFIED_SURJECTIVE" : "INCONCLUSIVE";
}

inline const char* to_string(CertificatePath p)
{
    switch (p) {
    case CertificatePath::none: return "none";
    case CertificatePath::theorem_main: return "theorem-main";
    case CertificatePath::cor_pol: return "cor-pol";
    case CertificatePath::cor_3: return "cor-3";
    case CertificatePath::cor_susp: return "cor-susp";
    }
    return "?";
}

struct SurjectivityConfig {
    HypothesisMode mode = HypothesisMode::guilty;
    IdealStrategy strategy = IdealStrategy::exact_then_gcd;
    std::uint64_t step_budget = default_step_budget;
};

/// Outcome of the 0/0-freeness check ⟨Ē, p_i, q_i⟩ = ⟨1⟩ for one component.
struct Hypothesis2Result {
    bool established = false;
    std::string route = "none";    // constant-denominator | exact | gcd | none
    std::optional<bool> exact;     // ideal triviality, when computed
    bool gcd = false;              // gcd(R(p_i), R(q_i)) = 1
    bool budget_exhausted = false;
};

struct ComponentRecord {
    Degree deg_numerator;
    Degree deg_denominator;
    bool degree_condition = false;
    bool rational = false;
    std::optional<GuiltReport> guilt;           // absent when p_i = 0
    std::optional<SuspicionWitness> suspicion;  // absent when p_i = 0
    Hypothesis2Result hyp2;
};

struct SurjectivityReport {
    Verdict verdict = Verdict::inconclusive;
    CertificatePath path = CertificatePath::none;
    std::optional<std::size_t> witness_index;  // 0-based
    HypothesisMode mode = HypothesisMode::guilty;
    IdealStrategy strategy = IdealStrategy::exact_then_gcd;
    std::vector<ComponentRecord> components;
    std::vector<std::string> notes;
};

/// Degree data, guilt and suspicion for one component.
inline ComponentRecord hypothesis1_record(const RadicalParametrization& param, std::size_t i)
{
    const auto& comp = param.components.at(i);
    const auto& w = param.tower.weights();
    ComponentRecord rec;
    rec.deg_numerator = weighted_degree(comp.numerator, w);
    rec.deg_denominator = weighted_degree(comp.denominator, w);
    rec.degree_condition = rec.deg_numerator && (!rec.deg_denominator || *rec.deg_numerator > *rec.deg_denominator);
    rec.rational = param.rational(i);
    if (!comp.numerator.is_zero()) {
        rec.guilt = is_guilty(comp.numerator, param.tower);
        rec.suspicion = is_suspicious(comp.numerator, param.tower);
    }
    return rec;
}

inline bool qualifies(const ComponentRecord& rec, HypothesisMode mode)
{
    if (!rec.degree_condition || !rec.guilt)
        return false;
    return mode == HypothesisMode::guilty ? !rec.guilt->guilty : !rec.suspicion->suspicious;
}

/// Smallest i with deg_w p_i > deg_w q_i and p_i not guilty (or not suspicious).
inline std::optional<std::size_t> hypothesis1(const RadicalParametrization& param, HypothesisMode mode,
                                              std::vector<ComponentRecord>* records = nullptr)
{
    std::optional<std::size_t> witness;
    for (std::size_t i = 0; i < param.components.size(); ++i) {
        ComponentRecord rec = hypothesis1_record(param, i);
        if (!witness && qualifies(rec, mode))
            witness = i;
        if (records)
            records->push_back(std::move(rec));
    }
    return witness;
}

/// gcd(R(p_i), R(q_i)) = 1: sufficient for ⟨Ē, p_i, q_i⟩ = ⟨1⟩.
inline bool hypothesis2_gcd(const RadicalParametrization& param, std::size_t i)
{
    const auto& comp = param.components.at(i);
    const MultiPoly rp = normalized_remainder(comp.numerator, param.tower);
    const MultiPoly rq = normalized_remainder(comp.denominator, param.tower);
    const MultiPoly g = univ_gcd(rp, rq, param.tower.parameter());
    return g.is_constant() && !g.is_zero();
}

inline std::vector<MultiPoly> indeterminacy_generators(const RadicalParametrization& param, std::size_t i)
{
    std::vector<MultiPoly> gens;
    for (std::size_t k = 0; k < param.tower.size(); ++k)
        gens.push_back(param.tower.tower_polynomial(k));
    const auto& comp = param.components.at(i);
    if (!comp.numerator.is_zero())
        gens.push_back(comp.numerator);
    gens.push_back(comp.denominator);
    return gens;
}

inline bool hypothesis2_exact(const RadicalParametrization& param, std::size_t i,
                              std::uint64_t step_budget = default_step_budget)
{
    return ideal_is_trivial(indeterminacy_generators(param, i), TermOrder::grevlex(param.tower.tower_vars()),
                            step_budget);
}

inline Hypothesis2Result hypothesis2(const RadicalParametrization& param, std::size_t i, IdealStrategy strategy,
                                     std::uint64_t step_budget = default_step_budget)
{
    Hypothesis2Result r;
    const auto& comp = param.components.at(i);
    r.gcd = hypothesis2_gcd(param, i);
    if (comp.denominator.is_constant()) {
        r.established = true;
        r.route = "constant-denominator";
        return r;
    }
    if (strategy != IdealStrategy::gcd) {
        try {
            r.exact = hypothesis2_exact(param, i, step_budget);
        } catch (const ResourceError&) {
            r.budget_exhausted = true;
            if (strategy == IdealStrategy::exact)
                throw;
        }
    }
    if (r.exact) {
        r.established = *r.exact;
        r.route = *r.exact ? "exact" : "none";
    } else if (r.gcd) {
        r.established = true;
        r.route = "gcd";
    }
    return r;
}

/// Combine both hypotheses into a certificate. Never claims that a
/// parametrization is not surjective.
inline SurjectivityReport check_surjective(const RadicalParametrization& param, const SurjectivityConfig& config = {})
{
    SurjectivityReport report;
    report.mode = config.mode;
    report.strategy = config.strategy;
    report.witness_index = hypothesis1(param, config.mode, &report.components);
    for (const auto& w : param.warnings)
        report.notes.push_back(w);

    bool all_hyp2 = true;
    for (std::size_t i = 0; i < param.components.size(); ++i) {
        report.components[i].hyp2 = hypothesis2(param, i, config.strategy, config.step_budget);
        if (report.components[i].hyp2.budget_exhausted)
            report.notes.push_back("component " + std::to_string(i + 1) +
                                   ": Groebner step budget exhausted, fell back to the gcd check");
        all_hyp2 = all_hyp2 && report.components[i].hyp2.established;
    }

    if (!report.witness_index) {
        report.notes.push_back(config.mode == HypothesisMode::guilty
                                   ? "hypothesis 1 fails: no component with deg p > deg q and p not guilty"
                                   : "hypothesis 1 fails: no component with deg p > deg q and p not suspicious");
    }
    if (!all_hyp2)
        report.notes.push_back("hypothesis 2 not established for every component");

    if (report.witness_index && all_hyp2) {
        report.verdict = Verdict::certified_surjective;
        bool all_polynomial = true;
        bool non_rational_polynomial = true;
        for (std::size_t i = 0; i < param.components.size(); ++i) {
            all_polynomial = all_polynomial && param.components[i].polynomial();
            if (!param.rational(i))
                non_rational_polynomial = non_rational_polynomial && param.components[i].polynomial();
        }
        if (config.mode == HypothesisMode::suspicious)
            report.path = CertificatePath::cor_susp;
        else if (all_polynomial)
            report.path = CertificatePath::cor_pol;
        else if (param.rational(*report.witness_index) && non_rational_polynomial)
            report.path = CertificatePath::cor_3;
        else
            report.path = CertificatePath::theorem_main;
    }
    return report;
}

} // namespace radsurj
