#include "support.hpp"

#include <gtest/gtest.h>

using namespace absirr;
using namespace testing_support;

TEST(Arithmetic, SpecExamples) {
    const FieldSpec f2 = gf("GF(2)"), f3 = gf("GF(3)");
    EXPECT_EQ(P("x+y", f2) * P("x+y", f2), P("x^2+y^2", f2));
    EXPECT_TRUE((P("x^2+y", f2) * Polynomial(f2, 2)).is_zero());
    EXPECT_EQ(P("x+1", f3, 1) * P("x+2", f3, 1), P("x^2+2", f3, 1));
    EXPECT_EQ(P("x+y", f3) - P("x+y", f3), Polynomial(f3, 2));
    EXPECT_EQ(-P("x", f3), P("2x", f3));
}

TEST(Arithmetic, MismatchesThrow) {
    const FieldSpec f2 = gf("GF(2)"), f3 = gf("GF(3)");
    try {
        (void)(P("x", f2) + P("x", f3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
    try {
        (void)(P("x", f2, 2) * P("x", f2, 3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ArityMismatch);
    }
}

TEST(TotalDegree, Examples) {
    const FieldSpec f = gf("GF(5)");
    EXPECT_EQ(P("x^2y + y", f).total_degree(), Degree(3));
    EXPECT_EQ(P("1", f).total_degree(), Degree(0));
    EXPECT_TRUE(Polynomial(f, 2).total_degree().is_neg_infinity());
    EXPECT_LT(Polynomial(f, 2).total_degree(), Degree(0));
}

TEST(GradedDecomposition, Examples) {
    const FieldSpec f2 = gf("GF(2)"), f7 = gf("GF(7)");
    const auto g = graded_decomposition(P("x^2 + xy + x + 1", f2));
    ASSERT_EQ(g.size(), 3u);
    EXPECT_EQ(g.forms[0].degree, 2u);
    EXPECT_EQ(g.forms[0].form, P("x^2+xy", f2));
    EXPECT_EQ(g.forms[1].form, P("x", f2));
    EXPECT_EQ(g.forms[2].form, P("1", f2));
    EXPECT_EQ(graded_decomposition(P("x^3+y^3", f2)).size(), 1u);
    const auto h = graded_decomposition(P("x^5 + y^2 + 1", f7));
    ASSERT_EQ(h.size(), 3u);
    EXPECT_EQ(h.forms[1].degree, 2u);
    EXPECT_EQ(h.forms[1].form, P("y^2", f7));
}

TEST(GradedDecomposition, ZeroThrows) {
    try {
        graded_decomposition(Polynomial(gf("GF(2)"), 2));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
    }
}

TEST(GradedDecomposition, ReconstructsRandomInputs) {
    Rng rng(11);
    for (const char* spec : {"GF(2)", "GF(3)", "GF(2^2)", "GF(5)", "GF(3^2)"}) {
        const FieldSpec f = gf(spec);
        for (int i = 0; i < 2000; ++i) {
            const Polynomial p = random_polynomial(f, 1 + i % 3, 1 + i % 6, rng);
            if (p.is_zero()) continue;
            const auto g = graded_decomposition(p);
            Polynomial sum(f, p.arity());
            for (std::size_t k = 0; k < g.size(); ++k) {
                ASSERT_TRUE(g.forms[k].form.is_homogeneous());
                ASSERT_FALSE(g.forms[k].form.is_zero());
                ASSERT_EQ(g.forms[k].form.total_degree(), Degree(g.forms[k].degree));
                if (k) {
                    ASSERT_LT(g.forms[k].degree, g.forms[k - 1].degree);
                }
                sum += g.forms[k].form;
            }
            ASSERT_EQ(sum, p);
        }
    }
}

TEST(LeadingFormAndTangentCone, Examples) {
    const FieldSpec f = gf("GF(3)");
    EXPECT_EQ(leading_form(P("x^3 + xy + 1", f)), P("x^3", f));
    EXPECT_EQ(tangent_cone(P("x^3 + xy + 1", f)), P("1", f));
    const Polynomial h = P("x^2y + 2xy^2", f);
    EXPECT_EQ(leading_form(h), h);
    EXPECT_EQ(tangent_cone(h), h);
    const Polynomial prod = P("x+1", f) * P("y+1", f);
    EXPECT_EQ(tangent_cone(prod), tangent_cone(P("x+1", f)) * tangent_cone(P("y+1", f)));
}

TEST(LeadingFormAndTangentCone, MultiplicativeExhaustiveGF2) {
    const FieldSpec f = field_build(2);
    std::vector<Polynomial> all;
    for_each_polynomial(f, monomials_up_to(2, 3), [&](const Polynomial& p) {
        if (!p.is_zero()) all.push_back(p);
    });
    ASSERT_EQ(all.size(), 1023u);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const Polynomial la = leading_form(all[i]), ta = tangent_cone(all[i]);
        for (std::size_t j = i; j < all.size(); ++j) {
            const Polynomial prod = all[i] * all[j];
            ASSERT_EQ(leading_form(prod), la * leading_form(all[j]));
            ASSERT_EQ(tangent_cone(prod), ta * tangent_cone(all[j]));
        }
    }
}

TEST(DegreeGap, Examples) {
    const FieldSpec f = gf("GF(5)");
    EXPECT_EQ(degree_gap(P("x^5 + x^2", f)), Gap(3));
    EXPECT_TRUE(degree_gap(P("x^3y + x^2y^2", f)).is_infinite());
    EXPECT_TRUE(degree_gap(P("3x^2y", f)).is_infinite());
    EXPECT_EQ(degree_gap(P("x^4 + x^3 + 1", f)), Gap(1));
    EXPECT_GT(Gap::infinity(), Gap(1000000));
    EXPECT_EQ(Gap::infinity().to_string(), "infinity");
}

TEST(DegreeGap, DegenerateInputsThrow) {
    const FieldSpec f = gf("GF(5)");
    for (const Polynomial& p : {Polynomial(f, 2), P("4", f)}) {
        try {
            degree_gap(p);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
        }
    }
}

TEST(GapProfile, Examples) {
    const FieldSpec f = gf("GF(2)");
    const GapProfile g = gap_profile(P("x^10 + x^9y + y^10 + x^7 + y^5 + x + y", f));
    EXPECT_EQ(g.degree, 10u);
    EXPECT_EQ(g.gaps, (std::vector<std::uint64_t>{3, 5, 9}));
    EXPECT_EQ(g.tangent_cone_degree, 1u);
    EXPECT_TRUE(g.gap(4).is_infinite());
    const GapProfile h = gap_profile(P("x^2y + xy^2", f));
    EXPECT_TRUE(h.gaps.empty());
    EXPECT_TRUE(h.gap(1).is_infinite());
    EXPECT_EQ(h.tangent_cone_degree, 3u);
    EXPECT_EQ(gap_profile(P("x^2 + x", f)).gaps, (std::vector<std::uint64_t>{1}));
}

TEST(PartialDerivative, Examples) {
    const FieldSpec f2 = gf("GF(2)"), f3 = gf("GF(3)"), f5 = gf("GF(5)");
    EXPECT_TRUE(partial_derivative(P("x^2", f2), 0).is_zero());
    EXPECT_EQ(partial_derivative(P("x^3 + xy", f3), 0), P("y", f3));
    EXPECT_EQ(partial_derivative(P("xy^2", f5), 1), P("2xy", f5));
    try {
        partial_derivative(P("x", f5), 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BadIndex);
    }
}

TEST(EvaluateAndSubstitute, Examples) {
    const FieldSpec f2 = gf("GF(2)"), f5 = gf("GF(5)");
    const std::vector<FieldElement> ones{f2.one(), f2.one()};
    EXPECT_TRUE(evaluate(P("x+y", f2), ones).is_zero());
    const std::vector<FieldElement> pt{f5.element(2), f5.element(3)};
    EXPECT_EQ(evaluate(P("x^2y", f5), pt).residue(), 2u);
    EXPECT_EQ(substitute_variable(P("xy + y^2", f5), 1, f5.one()), P("x + 1", f5));
    EXPECT_EQ(substitute_variable(P("xy", f5), 1, P("x+1", f5)), P("x^2 + x", f5));
}

TEST(LiftToExtension, Examples) {
    const FieldSpec f2 = gf("GF(2)"), f4 = gf("GF(2^2)");
    const Polynomial lifted = lift_to_extension(P("x+y", f2), f4);
    EXPECT_EQ(lifted.field(), f4);
    EXPECT_EQ(lifted, P("x+y", f4));
    EXPECT_TRUE(lift_to_extension(Polynomial(f2, 2), f4).is_zero());
}

TEST(LiftToExtension, Multiplicative) {
    Rng rng(5);
    const FieldSpec f4 = gf("GF(2^2)"), f16 = gf("GF(2^4)");
    for (int i = 0; i < 200; ++i) {
        const Polynomial a = random_polynomial(f4, 2, 3, rng), b = random_polynomial(f4, 2, 3, rng);
        EXPECT_EQ(lift_to_extension(a * b, f16), lift_to_extension(a, f16) * lift_to_extension(b, f16));
    }
}

TEST(Division, ExactAndRemainder) {
    const FieldSpec f = gf("GF(3)");
    const Polynomial a = P("x^2 + xy + 2", f), b = P("x + 2y + 1", f);
    EXPECT_EQ(divide_exact(a * b, b), a);
    EXPECT_FALSE(divide_exact(a * b + P("1", f), b).has_value());
    const DivisionResult r = divide(a * b + P("y", f), b);
    EXPECT_EQ(r.quotient * b + r.remainder, a * b + P("y", f));
}

TEST(MonomialOrder, TotalOrderOnRandomTriples) {
    Rng rng(9);
    auto rand_mono = [&] {
        Monomial m(3);
        for (std::size_t i = 0; i < 3; ++i) m[i] = static_cast<std::uint32_t>(uniform_below(rng, 4));
        return m;
    };
    for (int i = 0; i < 20000; ++i) {
        const Monomial a = rand_mono(), b = rand_mono(), c = rand_mono();
        const auto ab = grevlex_compare(a, b);
        EXPECT_EQ(ab == 0, a == b);
        EXPECT_EQ(grevlex_compare(b, a), 0 <=> ab);
        if (ab < 0 && grevlex_compare(b, c) < 0) {
            EXPECT_TRUE(grevlex_compare(a, c) < 0);
        }
    }
}

TEST(MonomialOrder, GrevlexConvention) {
    // x^2 > xy > y^2 > xz > yz > z^2 among quadratics
    const FieldSpec f = gf("GF(5)");
    EXPECT_EQ(S(P("z^2 + yz + xz + y^2 + xy + x^2", f, 3)), "x^2 + xy + y^2 + xz + yz + z^2");
}
