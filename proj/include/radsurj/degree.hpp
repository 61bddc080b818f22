#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radsurj/bigrat.hpp"
#include "radsurj/poly.hpp"

namespace radsurj {

/// Per-variable rational weights: t ↦ 1, radicals ↦ positive rationals,
/// every other variable ↦ 0.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<BigRat> weights) : weights_(std::move(weights)) {}

    std::size_t size() const noexcept { return weights_.size(); }
    const BigRat& operator[](std::size_t i) const { return weights_.at(i); }
    BigRat& operator[](std::size_t i) { return weights_.at(i); }
    const std::vector<BigRat>& values() const noexcept { return weights_; }

    BigRat of(const Exponents& e) const
    {
        BigRat d = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i])
                d += weights_[i] * e[i];
        return d;
    }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<BigRat> weights_;
};

/// Weighted degree; std::nullopt stands for −∞ (the zero polynomial).
using Degree = std::optional<BigRat>;

inline std::string to_string(const Degree& d) { return d ? d->get_str() : std::string("-inf"); }

inline Degree weighted_degree(const MultiPoly& f, const WeightVector& w)
{
    if (f.arity() != w.size())
        throw StructuralError("weight vector does not match the variable table");
    Degree best;
    for (const auto& [e, c] : f.terms()) {
        BigRat d = w.of(e);
        if (!best || d > *best)
            best = std::move(d);
    }
    return best;
}

/// Sum of the monomials of f attaining its weighted degree.
inline MultiPoly leading_form(const MultiPoly& f, const WeightVector& w)
{
    if (f.is_zero())
        throw DomainError("leading form of the zero polynomial");
    const BigRat top = *weighted_degree(f, w);
    MultiPoly out(f.vars());
    for (const auto& [e, c] : f.terms())
        if (w.of(e) == top)
            out.accumulate(e, c);
    return out;
}

} // namespace radsurj
