#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "radsurj/error.hpp"
#include "radsurj/poly.hpp"

namespace radsurj {

/// Monomial order over an explicit list of variables, biggest first.
/// Block orders compare the first `block_size` variables by grevlex and
/// break ties with grevlex on the rest.
struct TermOrder {
    enum class Kind { lex, grevlex, block };

    Kind kind = Kind::grevlex;
    std::vector<std::size_t> vars;
    std::size_t block_size = 0;

    static TermOrder lex(std::vector<std::size_t> vars) { return {Kind::lex, std::move(vars), 0}; }
    static TermOrder grevlex(std::vector<std::size_t> vars) { return {Kind::grevlex, std::move(vars), 0}; }

    static TermOrder block(const std::vector<std::size_t>& eliminated, const std::vector<std::size_t>& kept)
    {
        TermOrder o{Kind::block, eliminated, eliminated.size()};
        o.vars.insert(o.vars.end(), kept.begin(), kept.end());
        return o;
    }

    /// True when a is strictly bigger than b.
    bool greater(const Exponents& a, const Exponents& b) const
    {
        switch (kind) {
        case Kind::lex:
            for (std::size_t v : vars)
                if (a[v] != b[v])
                    return a[v] > b[v];
            return false;
        case Kind::grevlex:
            return grevlex_cmp(a, b, 0, vars.size()) > 0;
        case Kind::block: {
            const int c = grevlex_cmp(a, b, 0, block_size);
            if (c != 0)
                return c > 0;
            return grevlex_cmp(a, b, block_size, vars.size()) > 0;
        }
        }
        return false;
    }

    friend bool operator==(const TermOrder&, const TermOrder&) = default;

private:
    int grevlex_cmp(const Exponents& a, const Exponents& b, std::size_t from, std::size_t to) const
    {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = from; i < to; ++i) {
            da += a[vars[i]];
            db += b[vars[i]];
        }
        if (da != db)
            return da > db ? 1 : -1;
        for (std::size_t i = to; i-- > from;)
            if (a[vars[i]] != b[vars[i]])
                return a[vars[i]] < b[vars[i]] ? 1 : -1;
        return 0;
    }
};

struct IdealBasis {
    std::vector<MultiPoly> generators;
    TermOrder order;
    bool reduced = false;

    bool is_unit() const { return generators.size() == 1 && generators.front().is_constant() && !generators.front().is_zero(); }
};

inline constexpr std::uint64_t default_step_budget = 1'000'000;

namespace detail {

struct GTerm {
    Exponents e;
    BigRat c;
};

using GPoly = std::vector<GTerm>;

class GroebnerEngine {
public:
    GroebnerEngine(const TermOrder& order, VarTablePtr vars, std::uint64_t budget)
        : order_(order), vars_(std::move(vars)), budget_(budget)
    {
    }

    GPoly from(const MultiPoly& f) const
    {
        GPoly p;
        p.reserve(f.term_count());
        for (const auto& [e, c] : f.terms())
            p.push_back({e, c});
        sort(p);
        return p;
    }

    MultiPoly to(const GPoly& p) const
    {
        MultiPoly f(vars_);
        for (const auto& t : p)
            f.accumulate(t.e, t.c);
        return f;
    }

    void sort(GPoly& p) const
    {
        std::sort(p.begin(), p.end(), [&](const GTerm& a, const GTerm& b) { return order_.greater(a.e, b.e); });
    }

    static void make_monic(GPoly& p)
    {
        if (p.empty() || p.front().c == 1)
            return;
        const BigRat inv = 1 / p.front().c;
        for (auto& t : p)
            t.c *= inv;
    }

    /// p − c·x^shift·g, merging two sorted term lists.
    GPoly subtract_multiple(const GPoly& p, const BigRat& c, const Exponents& shift, const GPoly& g) const
    {
        GPoly out;
        out.reserve(p.size() + g.size());
        std::size_t i = 0, j = 0;
        Exponents m(shift.size());
        auto shifted = [&](std::size_t k) {
            for (std::size_t v = 0; v < m.size(); ++v)
                m[v] = g[k].e[v] + shift[v];
            return m;
        };
        while (i < p.size() || j < g.size()) {
            if (j == g.size()) {
                out.push_back(p[i++]);
                continue;
            }
            const Exponents gm = shifted(j);
            if (i == p.size() || order_.greater(gm, p[i].e)) {
                out.push_back({gm, -c * g[j].c});
                ++j;
            } else if (order_.greater(p[i].e, gm)) {
                out.push_back(p[i++]);
            } else {
                BigRat v = p[i].c - c * g[j].c;
                if (v != 0)
                    out.push_back({gm, std::move(v)});
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// Full reduction of p modulo the polynomials in `basis` selected by `active`.
    GPoly reduce(GPoly p, const std::vector<GPoly>& basis, const std::vector<bool>* active = nullptr,
                 std::size_t skip = static_cast<std::size_t>(-1))
    {
        GPoly remainder;
        while (!p.empty()) {
            const auto& lead = p.front();
            std::size_t hit = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (k == skip || (active && !(*active)[k]) || basis[k].empty())
                    continue;
                if (divides(basis[k].front().e, lead.e)) {
                    hit = k;
                    break;
                }
            }
            if (hit == basis.size()) {
                remainder.push_back(lead);
                p.erase(p.begin());
                continue;
            }
            if (++steps_ > budget_)
                throw ResourceError("Groebner basis computation exceeded the step budget of " +
                                    std::to_string(budget_) + " reductions");
            const auto& g = basis[hit];
            Exponents shift(lead.e.size());
            for (std::size_t v = 0; v < shift.size(); ++v)
                shift[v] = lead.e[v] - g.front().e[v];
            const BigRat c = lead.c / g.front().c;
            p = subtract_multiple(p, c, shift, g);
        }
        return remainder;
    }

    GPoly s_polynomial(const GPoly& f, const GPoly& g) const
    {
        const auto& a = f.front().e;
        const auto& b = g.front().e;
        Exponents sf(a.size()), sg(a.size());
        for (std::size_t v = 0; v < a.size(); ++v) {
            const auto l = std::max(a[v], b[v]);
            sf[v] = l - a[v];
            sg[v] = l - b[v];
        }
        GPoly left;
        left.reserve(f.size());
        const BigRat cf = 1 / f.front().c;
        for (const auto& t : f) {
            Exponents m(t.e.size());
            for (std::size_t v = 0; v < m.size(); ++v)
                m[v] = t.e[v] + sf[v];
            left.push_back({std::move(m), t.c * cf});
        }
        return subtract_multiple(left, 1 / g.front().c, sg, g);
    }

    std::vector<GPoly> run(const std::vector<MultiPoly>& gens)
    {
        std::vector<GPoly> basis;
        for (const auto& f : gens) {
            if (f.is_zero())
                continue;
            GPoly p = from(f);
            make_monic(p);
            basis.push_back(std::move(p));
        }
        if (basis.empty())
            return basis;

        std::vector<bool> active(basis.size(), true);
        // Pending critical pairs keyed by (lcm degree, i, j).
        std::set<std::tuple<std::uint64_t, std::size_t, std::size_t>> pending;
        auto lcm_of = [&](std::size_t i, std::size_t j) {
            Exponents l(basis[i].front().e.size());
            for (std::size_t v = 0; v < l.size(); ++v)
                l[v] = std::max(basis[i].front().e[v], basis[j].front().e[v]);
            return l;
        };
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < j; ++i)
                pending.insert({total_degree(lcm_of(i, j)), i, j});

        auto in_pending = [&](std::size_t i, std::size_t j) {
            if (i > j)
                std::swap(i, j);
            return pending.count({total_degree(lcm_of(i, j)), i, j}) > 0;
        };

        while (!pending.empty()) {
            const auto [deg, i, j] = *pending.begin();
            pending.erase(pending.begin());
            const Exponents l = lcm_of(i, j);
            const auto& ei = basis[i].front().e;
            const auto& ej = basis[j].front().e;
            bool coprime = true;
            for (std::size_t v = 0; v < l.size(); ++v)
                if (ei[v] && ej[v]) {
                    coprime = false;
                    break;
                }
            if (coprime)
                continue;
            bool chain = false;
            for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
                if (k == i || k == j || !divides(basis[k].front().e, l))
                    continue;
                chain = !in_pending(i, k) && !in_pending(j, k);
            }
            if (chain)
                continue;

            GPoly s = reduce(s_polynomial(basis[i], basis[j]), basis);
            if (s.empty())
                continue;
            make_monic(s);
            if (total_degree(s.front().e) == 0 || s.front().e == Exponents(s.front().e.size(), 0)) {
                GPoly one{{Exponents(s.front().e.size(), 0), BigRat(1)}};
                return {one};
            }
            const std::size_t n = basis.size();
            basis.push_back(std::move(s));
            active.push_back(true);
            for (std::size_t k = 0; k < n; ++k)
                pending.insert({total_degree(lcm_of(k, n)), k, n});
        }
        return finalize(std::move(basis));
    }

    std::vector<GPoly> finalize(std::vector<GPoly> basis)
    {
        for (const auto& p : basis)
            if (!p.empty() && total_degree(p.front().e) == 0)
                return {GPoly{{Exponents(p.front().e.size(), 0), BigRat(1)}}};

        // Minimal basis: drop elements whose leading monomial is divisible by
        // another's (keep the first of equal leading monomials).
        std::vector<bool> keep(basis.size(), true);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size() && keep[i]; ++j) {
                if (i == j || !keep[j])
                    continue;
                if (divides(basis[j].front().e, basis[i].front().e) &&
                    (basis[j].front().e != basis[i].front().e || j < i))
                    keep[i] = false;
            }
        std::vector<GPoly> minimal;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (keep[i])
                minimal.push_back(std::move(basis[i]));

        // Interreduce tails.
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            GPoly lead{minimal[i].front()};
            GPoly tail(minimal[i].begin() + 1, minimal[i].end());
            GPoly reduced_tail = reduce(std::move(tail), minimal, nullptr, i);
            lead.insert(lead.end(), reduced_tail.begin(), reduced_tail.end());
            make_monic(lead);
            minimal[i] = std::move(lead);
        }
        std::sort(minimal.begin(), minimal.end(),
                  [&](const GPoly& a, const GPoly& b) { return order_.greater(a.front().e, b.front().e); });
        return minimal;
    }

    std::uint64_t steps() const noexcept { return steps_; }

private:
    TermOrder order_;
    VarTablePtr vars_;
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
};

inline void check_order_covers(const std::vector<MultiPoly>& gens, const TermOrder& order)
{
    for (const auto& g : gens)
        for (std::size_t v : g.support())
            if (std::find(order.vars.begin(), order.vars.end(), v) == order.vars.end())
                throw DomainError("variable '" + (*g.vars())[v].name + "' is not covered by the term order");
}

} // namespace detail

/// Reduced Gröbner basis by Buchberger's algorithm with the normal selection
/// strategy (smallest lcm degree first, ties by generator index) and the
/// product and chain criteria.
inline IdealBasis buchberger(const std::vector<MultiPoly>& gens, const TermOrder& order,
                             std::uint64_t step_budget = default_step_budget)
{
    if (gens.empty())
        throw DomainError("empty generator list");
    for (const auto& g : gens)
        require_same_table(g, gens.front());
    detail::check_order_covers(gens, order);
    const auto vars = gens.front().vars();
    detail::GroebnerEngine engine(order, vars, step_budget);
    IdealBasis result;
    result.order = order;
    result.reduced = true;
    for (const auto& p : engine.run(gens))
        result.generators.push_back(engine.to(p));
    return result;
}

/// Normal form of f modulo a Gröbner basis.
inline MultiPoly reduce_by(const MultiPoly& f, const IdealBasis& basis,
                           std::uint64_t step_budget = default_step_budget)
{
    detail::GroebnerEngine engine(basis.order, f.vars(), step_budget);
    std::vector<detail::GPoly> gs;
    for (const auto& g : basis.generators)
        gs.push_back(engine.from(g));
    return engine.to(engine.reduce(engine.from(f), gs));
}

/// S-polynomial of two basis elements, for self-checks.
inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const TermOrder& order)
{
    detail::GroebnerEngine engine(order, f.vars(), default_step_budget);
    return engine.to(engine.s_polynomial(engine.from(f), engine.from(g)));
}

inline std::vector<std::size_t> all_variables(const VarTablePtr& vars)
{
    std::vector<std::size_t> out(vars->size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = i;
    return out;
}

/// True iff the ideal is ⟨1⟩. Uses grevlex over the whole table.
inline bool ideal_is_trivial(const std::vector<MultiPoly>& gens, std::uint64_t step_budget = default_step_budget)
{
    if (gens.empty())
        return false;
    return buchberger(gens, TermOrder::grevlex(all_variables(gens.front().vars())), step_budget).is_unit();
}

inline bool ideal_is_trivial(const std::vector<MultiPoly>& gens, const TermOrder& order,
                             std::uint64_t step_budget = default_step_budget)
{
    if (gens.empty())
        return false;
    return buchberger(gens, order, step_budget).is_unit();
}

/// Generators of I ∩ ℚ[keep] via a block order eliminating every other
/// table variable.
inline std::vector<MultiPoly> elimination_ideal(const std::vector<MultiPoly>& gens,
                                                const std::vector<std::size_t>& keep,
                                                std::uint64_t step_budget = default_step_budget)
{
    if (gens.empty())
        throw DomainError("empty generator list");
    const auto& vars = gens.front().vars();
    for (std::size_t v : keep)
        if (v >= vars->size())
            throw DomainError("kept variable outside the table");
    std::vector<std::size_t> eliminated;
    for (std::size_t v = 0; v < vars->size(); ++v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end())
            eliminated.push_back(v);
    const IdealBasis basis = buchberger(gens, TermOrder::block(eliminated, keep), step_budget);
    std::vector<MultiPoly> out;
    for (const auto& g : basis.generators)
        if (g.only_uses(keep))
            out.push_back(g);
    return out;
}

/// Finiteness criterion: every variable of the order is a pure power of
/// some leading monomial.
inline bool is_zero_dimensional(const IdealBasis& basis)
{
    if (!basis.reduced)
        throw PreconditionError("zero-dimensionality test needs a reduced basis");
    if (basis.is_unit())
        return true;
    detail::GroebnerEngine engine(basis.order, basis.generators.empty() ? nullptr : basis.generators.front().vars(),
                                  default_step_budget);
    for (std::size_t v : basis.order.vars) {
        bool found = false;
        for (const auto& g : basis.generators) {
            const auto lead = engine.from(g).front().e;
            bool pure = lead[v] > 0;
            for (std::size_t u = 0; u < lead.size() && pure; ++u)
                if (u != v && lead[u] != 0)
                    pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found)
            return false;
    }
    return true;
}

} // namespace radsurj
