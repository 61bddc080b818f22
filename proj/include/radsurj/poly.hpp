#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "radsurj/bigrat.hpp"
#include "radsurj/error.hpp"
#include "radsurj/var_table.hpp"

namespace radsurj {

using Exponents = std::vector<std::uint32_t>;

inline std::uint64_t total_degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

/// Graded lexicographic order, largest monomial first. Lex ties are broken
/// by variable-table position (earlier variables are bigger).
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const
    {
        const auto da = total_degree(a);
        const auto db = total_degree(b);
        if (da != db)
            return da > db;
        return a > b;
    }
};

inline bool divides(const Exponents& a, const Exponents& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

/// Sparse polynomial with exact rational coefficients over a shared
/// variable table. Zero coefficients are never stored.
class MultiPoly {
public:
    using Terms = std::map<Exponents, BigRat, GrlexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(VarTablePtr vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(VarTablePtr vars, const BigRat& c)
    {
        MultiPoly p(std::move(vars));
        if (c != 0)
            p.terms_.emplace(Exponents(p.arity(), 0), c);
        return p;
    }

    static MultiPoly variable(VarTablePtr vars, std::size_t index, std::uint32_t power = 1)
    {
        MultiPoly p(std::move(vars));
        if (index >= p.arity())
            throw DomainError("variable index out of range");
        Exponents e(p.arity(), 0);
        e[index] = power;
        p.terms_.emplace(std::move(e), BigRat(1));
        return p;
    }

    static MultiPoly named(VarTablePtr vars, std::string_view name, std::uint32_t power = 1)
    {
        const auto idx = vars->index_of(name);
        return variable(std::move(vars), idx, power);
    }

    static MultiPoly monomial(VarTablePtr vars, Exponents e, const BigRat& c)
    {
        MultiPoly p(std::move(vars));
        if (e.size() != p.arity())
            throw StructuralError("exponent vector does not match the variable table");
        if (c != 0)
            p.terms_.emplace(std::move(e), c);
        return p;
    }

    const VarTablePtr& vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t arity() const noexcept { return vars_ ? vars_->size() : 0; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && radsurj::total_degree(terms_.begin()->first) == 0);
    }

    BigRat constant_value() const
    {
        if (terms_.empty())
            return 0;
        const auto& [e, c] = *terms_.rbegin();
        return radsurj::total_degree(e) == 0 ? c : BigRat(0);
    }

    /// Leading term in grlex order. Undefined for the zero polynomial.
    const Terms::value_type& leading_term() const
    {
        if (terms_.empty())
            throw DomainError("leading term of the zero polynomial");
        return *terms_.begin();
    }

    std::uint32_t degree_in(std::size_t var) const
    {
        std::uint32_t d = 0;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e[var]);
        return d;
    }

    std::uint64_t total_degree() const { return terms_.empty() ? 0 : radsurj::total_degree(terms_.begin()->first); }

    bool involves(std::size_t var) const
    {
        for (const auto& [e, c] : terms_)
            if (e[var] != 0)
                return true;
        return false;
    }

    /// Indices of the variables that actually occur.
    std::vector<std::size_t> support() const
    {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < arity(); ++v)
            if (involves(v))
                out.push_back(v);
        return out;
    }

    bool only_uses(std::span<const std::size_t> allowed) const
    {
        for (std::size_t v : support())
            if (std::find(allowed.begin(), allowed.end(), v) == allowed.end())
                return false;
        return true;
    }

    /// Coefficients as a polynomial in `var`: entry k multiplies var^k.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const
    {
        std::vector<MultiPoly> out(degree_in(var) + (is_zero() ? 0 : 1), MultiPoly(vars_));
        for (const auto& [e, c] : terms_) {
            Exponents rest = e;
            rest[var] = 0;
            out[e[var]].terms_.emplace(std::move(rest), c);
        }
        return out;
    }

    MultiPoly coefficient_in(std::size_t var, std::uint32_t power) const
    {
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] != power)
                continue;
            Exponents rest = e;
            rest[var] = 0;
            out.terms_.emplace(std::move(rest), c);
        }
        return out;
    }

    MultiPoly leading_coefficient_in(std::size_t var) const { return coefficient_in(var, degree_in(var)); }

    MultiPoly derivative(std::size_t var) const
    {
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0)
                continue;
            Exponents d = e;
            --d[var];
            out.terms_.emplace(std::move(d), c * e[var]);
        }
        return out;
    }

    /// Replace every occurrence of `var` by `value`.
    MultiPoly substitute(std::size_t var, const MultiPoly& value) const
    {
        require_same_table(*this, value);
        std::vector<MultiPoly> powers{constant(vars_, 1)};
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) {
            while (powers.size() <= e[var])
                powers.push_back(powers.back() * value);
            Exponents rest = e;
            rest[var] = 0;
            for (const auto& [pe, pc] : powers[e[var]].terms_) {
                Exponents m = rest;
                for (std::size_t i = 0; i < m.size(); ++i)
                    m[i] += pe[i];
                out.accumulate(std::move(m), c * pc);
            }
        }
        return out;
    }

    MultiPoly substitute(std::size_t var, const BigRat& value) const
    {
        return substitute(var, constant(vars_, value));
    }

    MultiPoly pow(std::uint64_t n) const
    {
        MultiPoly result = constant(vars_, 1);
        MultiPoly base = *this;
        while (n) {
            if (n & 1)
                result = result * base;
            n >>= 1;
            if (n)
                base = base * base;
        }
        return result;
    }

    /// Multiply so that the grlex leading coefficient is 1.
    MultiPoly monic() const
    {
        if (is_zero())
            return *this;
        return *this * BigRat(1 / leading_term().second);
    }

    template <typename T>
    T evaluate(std::span<const T> point) const
    {
        if (point.size() != arity())
            throw StructuralError("evaluation point does not match the variable table");
        T sum{};
        for (const auto& [e, c] : terms_) {
            T term = coefficient_as<T>(c);
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::uint32_t k = 0; k < e[i]; ++k)
                    term *= point[i];
            sum += term;
        }
        return sum;
    }

    /// Sum of |c|·|monomial| at the point; used to scale residuals.
    double magnitude_at(std::span<const std::complex<double>> point) const
    {
        double sum = 0;
        for (const auto& [e, c] : terms_) {
            double term = std::abs(c.get_d());
            for (std::size_t i = 0; i < e.size(); ++i)
                term *= std::pow(std::abs(point[i]), static_cast<double>(e[i]));
            sum += term;
        }
        return sum;
    }

    /// Canonical text: grlex order, `*` between factors, `^` for powers.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            const bool negative = c < 0;
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            first = false;
            const BigRat mag = abs(c);
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += '*';
                mono += (*vars_)[i].name;
                if (e[i] > 1)
                    mono += '^' + std::to_string(e[i]);
            }
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + '*' + mono;
        }
        return out;
    }

    /// Add c·x^e in place, dropping the term if it cancels.
    void accumulate(Exponents e, const BigRat& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    friend void require_same_table(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.vars_ == b.vars_)
            return;
        if (!a.vars_ || !b.vars_ || !(*a.vars_ == *b.vars_))
            throw StructuralError("polynomials are defined over different variable tables");
    }

    MultiPoly& operator+=(const MultiPoly& o)
    {
        require_same_table(*this, o);
        for (const auto& [e, c] : o.terms_)
            accumulate(e, c);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& o)
    {
        require_same_table(*this, o);
        for (const auto& [e, c] : o.terms_)
            accumulate(e, -c);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    friend MultiPoly operator-(MultiPoly a)
    {
        for (auto& [e, c] : a.terms_)
            c = -c;
        return a;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        require_same_table(a, b);
        MultiPoly out(a.vars_);
        Exponents m(a.arity());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < m.size(); ++i)
                    m[i] = ea[i] + eb[i];
                out.accumulate(m, ca * cb);
            }
        return out;
    }

    friend MultiPoly operator*(MultiPoly a, const BigRat& s)
    {
        if (s == 0)
            return MultiPoly(a.vars_);
        for (auto& [e, c] : a.terms_)
            c *= s;
        return a;
    }

    friend MultiPoly operator*(const BigRat& s, MultiPoly a) { return std::move(a) * s; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.vars_ != b.vars_ && a.vars_ && b.vars_ && !(*a.vars_ == *b.vars_))
            return false;
        return a.terms_ == b.terms_;
    }

private:
    template <typename T>
    static T coefficient_as(const BigRat& c)
    {
        if constexpr (std::is_same_v<T, BigRat>)
            return c;
        else
            return T(c.get_d());
    }

    VarTablePtr vars_;
    Terms terms_;
};

/// Exact quotient a / b. Throws DomainError when b does not divide a.
inline MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b)
{
    require_same_table(a, b);
    if (b.is_zero())
        throw DomainError("division by the zero polynomial");
    MultiPoly quotient(a.vars());
    MultiPoly rest = a;
    const auto& [lead_e, lead_c] = b.leading_term();
    while (!rest.is_zero()) {
        const auto& [re, rc] = rest.leading_term();
        if (!divides(lead_e, re))
            throw DomainError("inexact polynomial division");
        Exponents qe(re.size());
        for (std::size_t i = 0; i < qe.size(); ++i)
            qe[i] = re[i] - lead_e[i];
        const BigRat qc = rc / lead_c;
        auto step = MultiPoly::monomial(a.vars(), qe, qc);
        rest -= step * b;
        quotient += step;
    }
    return quotient;
}

/// Pseudo-remainder of a by b in `var`: lc(b)^(deg a - deg b + 1)·a mod b.
inline MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var)
{
    require_same_table(a, b);
    if (b.is_zero())
        throw DomainError("pseudo-division by zero");
    const auto db = b.degree_in(var);
    if (a.is_zero() || a.degree_in(var) < db)
        return a;
    const auto lb = b.leading_coefficient_in(var);
    MultiPoly r = a;
    std::uint32_t steps = a.degree_in(var) - db + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        const auto dr = r.degree_in(var);
        const auto lr = r.leading_coefficient_in(var);
        r = r * lb - lr * MultiPoly::variable(a.vars(), var, dr - db) * b;
        --steps;
    }
    if (steps)
        r = r * lb.pow(steps);
    return r;
}

} // namespace radsurj
