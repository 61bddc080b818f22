#include <algorithm>

#include <gtest/gtest.h>

#include "support.hpp"

using namespace radsurj;
using radsurj::test::P;
using radsurj::test::str;
using radsurj::test::tower_of;

namespace {

TermOrder tower_grevlex(const RadicalTower& T) { return TermOrder::grevlex(T.tower_vars()); }

std::vector<std::string> texts(const IdealBasis& b)
{
    std::vector<std::string> out;
    for (const auto& g : b.generators)
        out.push_back(str(g));
    return out;
}

void expect_groebner_self_check(const std::vector<MultiPoly>& gens, const IdealBasis& basis)
{
    for (const auto& g : gens)
        EXPECT_TRUE(reduce_by(g, basis).is_zero()) << str(g);
    for (std::size_t i = 0; i < basis.generators.size(); ++i)
        for (std::size_t j = i + 1; j < basis.generators.size(); ++j)
            EXPECT_TRUE(
                reduce_by(s_polynomial(basis.generators[i], basis.generators[j], basis.order), basis).is_zero());
}

} // namespace

TEST(Buchberger, Examples)
{
    const auto circle = tower_of("d^2 = 1 - t^2;");
    const auto single = buchberger({P(circle, "d^2 - (1 - t^2)")}, tower_grevlex(circle));
    ASSERT_EQ(single.generators.size(), 1u);
    EXPECT_EQ(single.generators[0], P(circle, "d^2 + t^2 - 1"));
    EXPECT_TRUE(single.reduced);

    const auto T = tower_of("d^2 = t;");
    const std::vector<MultiPoly> gens{P(T, "d^2 - t"), P(T, "t*(d - 1)"), P(T, "t - 1")};
    const auto b = buchberger(gens, tower_grevlex(T));
    EXPECT_FALSE(b.is_unit());
    std::vector<BigRat> point(T.vars()->size(), BigRat(0));
    point[T.parameter()] = 1;
    point[test::var(T, "d")] = 1;
    for (const auto& g : b.generators)
        EXPECT_EQ(g.evaluate<BigRat>(point), BigRat(0)) << str(g);
    expect_groebner_self_check(gens, b);

    const auto unit = buchberger({P(T, "t"), P(T, "t - 1")}, tower_grevlex(T));
    EXPECT_TRUE(unit.is_unit());
    EXPECT_EQ(texts(unit), std::vector<std::string>{"1"});
}

TEST(Buchberger, ReducedBasisShape)
{
    const auto T = tower_of("d1^2 = t; d2^2 = d1 + 1;");
    const std::vector<MultiPoly> gens{T.tower_polynomial(0), T.tower_polynomial(1), P(T, "d1*d2 + t - 3")};
    for (const auto& order : {TermOrder::lex(T.tower_vars()), tower_grevlex(T)}) {
        const auto b = buchberger(gens, order);
        expect_groebner_self_check(gens, b);
        // Interreduced: no element is reducible by the others.
        for (std::size_t i = 0; i < b.generators.size(); ++i) {
            IdealBasis rest = b;
            rest.generators.erase(rest.generators.begin() + static_cast<std::ptrdiff_t>(i));
            EXPECT_EQ(reduce_by(b.generators[i], rest), b.generators[i]);
        }
    }
}

TEST(Buchberger, PermutationInvariance)
{
    test::Corpus corpus(37);
    for (int n = 0; n < 60; ++n) {
        const auto T = corpus.tower(2, 2, 2);
        std::vector<MultiPoly> gens;
        for (std::size_t k = 0; k < T.size(); ++k)
            gens.push_back(T.tower_polynomial(k));
        gens.push_back(corpus.normalized(T, 3, 2));
        gens.push_back(corpus.normalized(T, 3, 2));
        const auto order = tower_grevlex(T);
        const auto a = buchberger(gens, order);
        std::reverse(gens.begin(), gens.end());
        const auto b = buchberger(gens, order);
        EXPECT_EQ(texts(a), texts(b));
        expect_groebner_self_check(gens, a);
        // Triviality does not depend on the order.
        EXPECT_EQ(a.is_unit(), buchberger(gens, TermOrder::lex(T.tower_vars())).is_unit());
    }
}

TEST(IdealIsTrivial, Examples)
{
    const auto circle = tower_of("d^2 = 1 - t^2;");
    EXPECT_TRUE(ideal_is_trivial({circle.tower_polynomial(0), P(circle, "t"), P(circle, "1")}));
    EXPECT_FALSE(ideal_is_trivial({circle.tower_polynomial(0), P(circle, "d"), P(circle, "1 - t^2")}));
    const auto T = tower_of("d^2 = t;");
    EXPECT_FALSE(ideal_is_trivial({P(T, "d^2 - t"), P(T, "t*(d - 1)"), P(T, "t - 1")}, tower_grevlex(T)));
    EXPECT_FALSE(ideal_is_trivial({P(T, "d^2 - t"), P(T, "t*(d - 1)"), P(T, "t - 1")},
                                  TermOrder::lex(T.tower_vars())));
}

TEST(IdealIsTrivial, BudgetExhaustion)
{
    const auto T = tower_of("d1^2 = t; d2^2 = d1 + 1;");
    EXPECT_THROW(ideal_is_trivial({T.tower_polynomial(0), T.tower_polynomial(1), P(T, "d1*d2 + t - 3")},
                                  tower_grevlex(T), 1),
                 ResourceError);
}

TEST(EliminationIdeal, Circle)
{
    const auto param = parse("tower { d^2 = 1 - t^2; } param { x = t; y = d; }");
    const auto& vars = param.vars();
    const std::vector<MultiPoly> gens{param.tower.tower_polynomial(0), P(param, "t - x"), P(param, "d - y"),
                                      P(param, "z - 1")};
    const auto out = elimination_ideal(gens, {vars->index_of("x"), vars->index_of("y")});
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(str(out[0]), "x^2 + y^2 - 1");

    const auto everything = elimination_ideal(gens, all_variables(vars));
    const auto basis = buchberger(gens, TermOrder::block({}, all_variables(vars)));
    EXPECT_EQ(everything, basis.generators);
}

TEST(ZeroDimensional, Examples)
{
    const auto T = tower_of("d^2 = t;");
    const std::vector<std::size_t> dt{test::var(T, "d"), T.parameter()};
    EXPECT_TRUE(is_zero_dimensional(buchberger({P(T, "d^2 - t"), P(T, "t*(d - 1)"), P(T, "t - 1")},
                                               TermOrder::grevlex(dt))));
    const auto circle = tower_of("d^2 = 1 - t^2;");
    EXPECT_FALSE(is_zero_dimensional(
        buchberger({circle.tower_polynomial(0)}, TermOrder::grevlex({test::var(circle, "d"), circle.parameter()}))));
    EXPECT_TRUE(is_zero_dimensional(buchberger({P(T, "1")}, TermOrder::grevlex(dt))));

    IdealBasis raw;
    raw.generators = {P(T, "t^2"), P(T, "t")};
    raw.order = TermOrder::grevlex(dt);
    EXPECT_THROW(is_zero_dimensional(raw), PreconditionError);
}

TEST(TermOrder, Comparisons)
{
    const auto T = tower_of("d^2 = t;");
    const auto t = T.parameter();
    const auto d = test::var(T, "d");
    auto e = [&](std::uint32_t a, std::uint32_t b) {
        Exponents x(T.vars()->size(), 0);
        x[t] = a;
        x[d] = b;
        return x;
    };
    // lex with d > t
    const auto lex = TermOrder::lex({d, t});
    EXPECT_TRUE(lex.greater(e(0, 1), e(5, 0)));
    // grevlex: degree first
    const auto grev = TermOrder::grevlex({d, t});
    EXPECT_TRUE(grev.greater(e(2, 0), e(0, 1)));
    EXPECT_TRUE(grev.greater(e(0, 2), e(1, 1)));
    // block: anything with d beats anything without
    const auto block = TermOrder::block({d}, {t});
    EXPECT_TRUE(block.greater(e(0, 1), e(9, 0)));
}
