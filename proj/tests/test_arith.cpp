#include <gtest/gtest.h>

#include "oracle.hpp"
#include "support.hpp"

using namespace radsurj;
using radsurj::test::P;
using radsurj::test::str;
using radsurj::test::tower_of;

TEST(BigRat, CanonicalForm)
{
    BigRat q(6, -4);
    q.canonicalize();
    EXPECT_EQ(to_string(q), "-3/2");
    EXPECT_EQ(to_string(BigRat(0)), "0");
    EXPECT_EQ(parse_rational("10/4"), BigRat(5, 2));
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("abc"), InputError);
    EXPECT_EQ(rat_pow(BigRat(-2, 3), 3), BigRat(-8, 27));
}

TEST(VarTable, Validation)
{
    EXPECT_THROW(make_table({{"t", VarRole::parameter}, {"t", VarRole::radical}}), InputError);
    EXPECT_THROW(make_table({{"d", VarRole::radical}, {"t", VarRole::parameter}}), InputError);
    const auto vars = make_tower_table({"d1", "d2"}, {"x"});
    EXPECT_EQ(vars->index_of("d2"), 2u);
    EXPECT_FALSE(vars->find("y"));
    EXPECT_THROW(vars->index_of("y"), DomainError);
}

TEST(MultiPoly, RingOps)
{
    const auto T = tower_of("d^2 = 1 - t^2;");
    EXPECT_EQ(str(P(T, "t + d") * P(T, "t - d")), "t^2 - d^2");
    EXPECT_EQ(str(P(T, "t + 3*d").substitute(test::var(T, "d"), BigRat(0))), "t");
    EXPECT_TRUE((P(T, "t^2 - 1") + P(T, "1 - t^2")).is_zero());
    EXPECT_EQ(str(P(T, "3/2*t")), "3/2*t");
    EXPECT_EQ(str(P(T, "t^2*(t^2 - 3*t + 1)")), "t^4 - 3*t^3 + t^2");
    EXPECT_EQ(str(P(T, "(t + d)^2").substitute(test::var(T, "d"), P(T, "t"))), "4*t^2");
}

TEST(MultiPoly, MismatchedTablesAreRejected)
{
    const auto A = tower_of("d^2 = t;");
    const auto B = tower_of("e^2 = t;");
    const auto C = tower_of("d^2 = t;");
    EXPECT_NO_THROW(P(A, "t") + P(C, "t"));
    EXPECT_THROW(P(A, "t") + P(B, "t"), StructuralError);
    EXPECT_THROW(P(A, "t") * P(B, "t"), StructuralError);
}

TEST(MultiPoly, ExactDivision)
{
    const auto T = tower_of("d^2 = t;");
    EXPECT_EQ(str(divide_exact(P(T, "t^2 - d^2"), P(T, "t - d"))), "t + d");
    EXPECT_THROW(divide_exact(P(T, "t^2 + 1"), P(T, "t - 1")), DomainError);
}

TEST(WeightedDegree, Examples)
{
    const auto axis = tower_of("d1^2 = t^2 - 1;");
    EXPECT_EQ(weighted_degree(P(axis, "t - d1"), axis.weights()), BigRat(1));
    const auto sus = tower_of("d1^2 = t^2 - 1; d2^2 = t - d1;");
    EXPECT_EQ(weighted_degree(P(sus, "d1*d2 + 3"), sus.weights()), BigRat(3, 2));
    EXPECT_FALSE(weighted_degree(MultiPoly(sus.vars()), sus.weights()));
    EXPECT_EQ(to_string(weighted_degree(MultiPoly(sus.vars()), sus.weights())), "-inf");
}

TEST(LeadingForm, Examples)
{
    const auto sus = tower_of("d1^2 = t^2 - 1; d2^2 = t - d1;");
    EXPECT_EQ(str(leading_form(P(sus, "d1*d2 + t^2"), sus.weights())), "t^2");
    const auto axis = tower_of("d1^2 = t^2 - 1;");
    EXPECT_EQ(str(leading_form(P(axis, "t - d1"), axis.weights())), "t - d1");
    EXPECT_EQ(str(leading_form(P(axis, "t^3 + t"), axis.weights())), "t^3");
    EXPECT_THROW(leading_form(MultiPoly(axis.vars()), axis.weights()), DomainError);
}

TEST(WeightedDegree, ProductIsAdditive)
{
    test::Corpus corpus(11);
    for (int n = 0; n < 200; ++n) {
        const auto T = corpus.tower(2, 3, 3);
        const auto f = corpus.normalized(T);
        const auto g = corpus.normalized(T);
        const auto& w = T.weights();
        const BigRat sum = *weighted_degree(f, w) + *weighted_degree(g, w);
        const auto prod = weighted_degree(f * g, w);
        ASSERT_TRUE(prod);
        EXPECT_LE(*prod, sum);
        if (!(leading_form(f, w) * leading_form(g, w)).is_zero()) {
            EXPECT_EQ(*prod, sum);
        }
    }
}

TEST(Resultant, Examples)
{
    const auto axis = tower_of("d1^2 = t^2 - 1;");
    const auto d1 = test::var(axis, "d1");
    EXPECT_EQ(str(resultant(P(axis, "d1^2 - (t^2 - 1)"), P(axis, "t - d1"), d1)), "1");

    const auto shifted = tower_of("d1^2 = t - 1;");
    EXPECT_EQ(str(resultant(P(shifted, "d1^2 - (t - 1)"), P(shifted, "t - d1"), d1)), "t^2 - t + 1");

    // (Δ₁δ + t)(−Δ₁δ + t) = t² − Δ₁²(Δ₁ + 1)
    const auto nested = tower_of("d1^2 = t; d2^2 = d1 + 1;");
    const auto d2 = test::var(nested, "d2");
    const auto res = resultant(P(nested, "d2^2 - (d1 + 1)"), P(nested, "d1*d2 + t"), d2);
    EXPECT_EQ(res, P(nested, "t^2 - d1^3 - d1^2"));
    EXPECT_EQ(res, oracle::laplace_det({{P(nested, "t"), P(nested, "d1*(d1 + 1)")}, {P(nested, "d1"), P(nested, "t")}},
                                       nested.vars()));
}

TEST(Resultant, ConventionsAndErrors)
{
    const auto T = tower_of("d^2 = t;");
    const auto d = test::var(T, "d");
    EXPECT_THROW(resultant(P(T, "t"), P(T, "t + 1"), d), DomainError);
    EXPECT_TRUE(resultant(P(T, "d^2 - t"), MultiPoly(T.vars()), d).is_zero());
    // Degree-0 second argument: B^{deg A}.
    EXPECT_EQ(resultant(P(T, "d^3 - t"), P(T, "t + x"), d), P(T, "(t + x)^3"));
    EXPECT_EQ(resultant(P(T, "t + x"), P(T, "d^2 - t"), d), P(T, "(t + x)^2"));
}

TEST(Resultant, DegreeZeroSecondArgumentRandom)
{
    test::Corpus corpus(5);
    for (int n = 0; n < 100; ++n) {
        const auto T = corpus.tower(2, 3, 3, 2);
        const auto a = corpus.normalized(T) + MultiPoly::variable(T.vars(), T.radical_var(1), 2);
        MultiPoly b = corpus.normalized(T).substitute(T.radical_var(1), BigRat(0));
        const auto v = T.radical_var(1);
        EXPECT_EQ(resultant(a, b, v), b.pow(a.degree_in(v)));
    }
}

TEST(Resultant, MatchesSplitProductFormula)
{
    test::Corpus corpus(7);
    const auto T = tower_of("d^2 = t;");
    const auto t = T.parameter();
    for (int n = 0; n < 200; ++n) {
        std::vector<BigRat> ra, rb;
        for (int k = corpus.uniform(1, 4); k > 0; --k)
            ra.push_back(BigRat(corpus.uniform(-5, 5), corpus.uniform(1, 3)));
        for (int k = corpus.uniform(1, 4); k > 0; --k)
            rb.push_back(BigRat(corpus.uniform(-5, 5), corpus.uniform(1, 3)));
        for (auto& q : ra)
            q.canonicalize();
        for (auto& q : rb)
            q.canonicalize();
        const BigRat la = corpus.coefficient(), lb = corpus.coefficient();
        const auto a = corpus.from_roots(T.vars(), t, ra, la);
        const auto b = corpus.from_roots(T.vars(), t, rb, lb);
        const BigRat expected = oracle::split_resultant(ra, la, rb, lb);
        EXPECT_EQ(resultant(a, b, t), MultiPoly::constant(T.vars(), expected));
        EXPECT_EQ(subresultant_resultant(a, b, t), MultiPoly::constant(T.vars(), expected));
        // Zero exactly when a root is shared.
        bool shared = false;
        for (const auto& x : ra)
            for (const auto& y : rb)
                shared = shared || x == y;
        EXPECT_EQ(expected == 0, shared);
    }
}

TEST(Resultant, SubresultantRouteAgreesOnMultivariateInput)
{
    test::Corpus corpus(13);
    for (int n = 0; n < 150; ++n) {
        const auto T = corpus.tower(3, 3, 3);
        const auto k = static_cast<std::size_t>(corpus.uniform(0, static_cast<int>(T.size()) - 1));
        const auto v = T.radical_var(k);
        const auto a = corpus.normalized(T) * MultiPoly::variable(T.vars(), v) + corpus.normalized(T);
        const auto b = corpus.normalized(T) + MultiPoly::variable(T.vars(), v, 2);
        EXPECT_EQ(resultant(a, b, v), subresultant_resultant(a, b, v)) << str(a) << " | " << str(b);
        EXPECT_EQ(resultant(T.tower_polynomial(k), a, v), subresultant_resultant(T.tower_polynomial(k), a, v));
    }
}

TEST(Gcd, UnivariateExamples)
{
    const auto T = tower_of("d^2 = t;");
    const auto t = T.parameter();
    EXPECT_EQ(str(univ_gcd(P(T, "t^2 - 1"), P(T, "t - 1"), t)), "t - 1");
    EXPECT_EQ(str(univ_gcd(P(T, "t^2 - t + 1"), P(T, "1"), t)), "1");
    EXPECT_EQ(str(univ_gcd(P(T, "t^4"), P(T, "t^4 - 3*t^3 + t^2"), t)), "t^2");
    EXPECT_THROW(univ_gcd(P(T, "t*d"), P(T, "t"), t), DomainError);
}

TEST(Gcd, CommonFactorsAreFound)
{
    test::Corpus corpus(17);
    for (int n = 0; n < 100; ++n) {
        const auto T = corpus.tower(2, 2, 2);
        const auto a = corpus.normalized(T, 3, 2);
        const auto b = corpus.normalized(T, 3, 2);
        const auto c = corpus.normalized(T, 2, 2);
        const auto g = poly_gcd(a * c, b * c);
        EXPECT_NO_THROW(divide_exact(a * c, g));
        EXPECT_NO_THROW(divide_exact(b * c, g));
        EXPECT_NO_THROW(divide_exact(g, c));
    }
}

TEST(SquarefreePart, Examples)
{
    const auto T = tower_of("d^2 = t;");
    const auto t = T.parameter();
    const auto f = P(T, "((t - 1)*((x^2 - 1)*t - x^2))^2");
    const auto s = squarefree_part(f, t);
    const auto expected = P(T, "(t - 1)*((x^2 - 1)*t - x^2)");
    EXPECT_EQ(s.monic(), expected.monic());
    EXPECT_EQ(str(squarefree_part(P(T, "t^2"), t)), "t");
    EXPECT_EQ(str(squarefree_part(P(T, "t^2 + 1"), t)), "t^2 + 1");
    EXPECT_THROW(squarefree_part(MultiPoly(T.vars()), t), DomainError);
}

TEST(SquarefreePart, CoprimeWithDerivative)
{
    test::Corpus corpus(19);
    const auto T = tower_of("d^2 = t;");
    const auto t = T.parameter();
    for (int n = 0; n < 100; ++n) {
        std::vector<BigRat> roots;
        for (int k = corpus.uniform(1, 5); k > 0; --k)
            roots.push_back(corpus.uniform(-3, 3));
        const auto f = corpus.from_roots(T.vars(), t, roots, corpus.coefficient());
        const auto s = squarefree_part(f, t);
        EXPECT_EQ(str(univ_gcd(s, s.derivative(t), t)), "1");
        EXPECT_NO_THROW(divide_exact(f, s));
    }
}

TEST(Roots, ComplexExamples)
{
    const std::vector<Complex> z2m1{-1.0, 0.0, 1.0};
    auto r = complex_roots(z2m1);
    ASSERT_EQ(r.size(), 2u);
    std::sort(r.begin(), r.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
    EXPECT_NEAR(r[0].real(), -1.0, 1e-12);
    EXPECT_NEAR(r[1].real(), 1.0, 1e-12);

    const std::vector<Complex> z2m2{-2.0, 0.0, 1.0};
    for (const auto& z : complex_roots(z2m2))
        EXPECT_NEAR(std::abs(z), std::sqrt(2.0), 1e-12);

    const std::vector<Complex> z3m1{-1.0, 0.0, 0.0, 1.0};
    const auto cube = complex_roots(z3m1);
    ASSERT_EQ(cube.size(), 3u);
    for (const auto& z : cube)
        EXPECT_NEAR(std::abs(z * z * z - 1.0), 0.0, 1e-12);
    EXPECT_THROW(complex_roots(std::vector<Complex>{1.0}), DomainError);
}

TEST(Roots, RationalSieve)
{
    const auto T = tower_of("d^2 = t;");
    const auto t = T.parameter();
    const auto roots = rational_roots(P(T, "(2*t - 1)*(t + 3)^2*(t^2 + 1)*t"), t);
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_EQ(roots[0], BigRat(-3));
    EXPECT_EQ(roots[1], BigRat(0));
    EXPECT_EQ(roots[2], BigRat(1, 2));
    EXPECT_TRUE(rational_roots(P(T, "t^2 - 2"), t).empty());
}

TEST(Determinism, RepeatedCallsAgree)
{
    const auto T = tower_of("d1^2 = t; d2^2 = d1 + 1;");
    const auto f = P(T, "d1*d2 + t");
    EXPECT_EQ(str(normalized_remainder(f, T)), str(normalized_remainder(f, T)));
    EXPECT_EQ(str(resultant(T.tower_polynomial(1), f, T.radical_var(1))),
              str(resultant(T.tower_polynomial(1), f, T.radical_var(1))));
}
