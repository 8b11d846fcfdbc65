#include "g1inv/polynomial.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace g1inv;
using g1inv::testing::Rng;

namespace {

const VarSet& xyz() {
    static const VarSet v = make_vars({"x", "y", "z"});
    return v;
}

MultiPoly random_poly(Rng& rng, unsigned max_degree, int terms) {
    MultiPoly p(xyz());
    for (int k = 0; k < terms; ++k) {
        Exponent e(3);
        for (auto& d : e) d = static_cast<unsigned>(rng.uniform(0, static_cast<int>(max_degree)));
        p.add_term(e, rng.uniform(-4, 4));
    }
    return p;
}

} // namespace

TEST(MultiPoly, PrintsInGradedLexOrder) {
    const MultiPoly x = MultiPoly::variable(xyz(), "x");
    const MultiPoly y = MultiPoly::variable(xyz(), "y");
    const MultiPoly z = MultiPoly::variable(xyz(), "z");
    const MultiPoly p = 7 + x * z * Rational(-1, 2) + 3 * x * x + y;
    EXPECT_EQ(to_string(p), "3*x^2 - 1/2*x*z + y + 7");
    EXPECT_EQ(to_string(MultiPoly(xyz())), "0");
    EXPECT_EQ(to_string(-x), "-x");
}

TEST(MultiPoly, RingAxiomsOnRandomInputs) {
    Rng rng(11);
    for (int round = 0; round < 50; ++round) {
        const MultiPoly a = random_poly(rng, 3, 6);
        const MultiPoly b = random_poly(rng, 3, 6);
        const MultiPoly c = random_poly(rng, 2, 4);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a - a).is_zero(), true);
        EXPECT_EQ(pow(a, 3), a * a * a);
    }
}

TEST(MultiPoly, ExactDivisionRecoversFactor) {
    Rng rng(12);
    for (int round = 0; round < 30; ++round) {
        const MultiPoly a = random_poly(rng, 3, 5);
        const MultiPoly b = random_poly(rng, 2, 4);
        if (b.is_zero()) continue;
        const auto q = exact_divide(a * b, b);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, a);
    }
    const MultiPoly x = MultiPoly::variable(xyz(), "x");
    const MultiPoly y = MultiPoly::variable(xyz(), "y");
    EXPECT_FALSE(exact_divide(x * x + y, x).has_value());
}

TEST(MultiPoly, DerivativeSatisfiesLeibnizRule) {
    Rng rng(13);
    for (int round = 0; round < 30; ++round) {
        const MultiPoly a = random_poly(rng, 3, 5);
        const MultiPoly b = random_poly(rng, 3, 5);
        for (const char* v : {"x", "y", "z"}) {
            EXPECT_EQ(partial_derivative(a * b, v), partial_derivative(a, v) * b + a * partial_derivative(b, v));
        }
    }
}

TEST(MultiPoly, SubstitutionCommutesWithEvaluation) {
    Rng rng(14);
    const MultiPoly x = MultiPoly::variable(xyz(), "x");
    const MultiPoly y = MultiPoly::variable(xyz(), "y");
    const MultiPoly z = MultiPoly::variable(xyz(), "z");
    for (int round = 0; round < 20; ++round) {
        const MultiPoly p = random_poly(rng, 3, 6);
        const std::vector<MultiPoly> images = {x + 2 * y, y - z, 3 * x * z};
        const std::vector<Rational> pt = {rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
        std::vector<Rational> image_values;
        for (const auto& im : images) image_values.push_back(evaluate(im, pt));
        EXPECT_EQ(evaluate(substitute(p, images), pt), evaluate(p, image_values));
    }
}

TEST(MultiPoly, CoefficientVectorsRoundTrip) {
    Rng rng(15);
    const auto monos = monomials(3, 3);
    ASSERT_EQ(monos.size(), 10u);
    EXPECT_EQ(monos.front(), (Exponent{3, 0, 0}));
    EXPECT_EQ(monos.back(), (Exponent{0, 0, 3}));
    std::vector<Rational> coeffs;
    for (int i = 0; i < 10; ++i) coeffs.push_back(rng.uniform(-5, 5));
    const MultiPoly p = from_coefficients(xyz(), 3, coeffs);
    EXPECT_TRUE(p.is_homogeneous(3) || p.is_zero());
    EXPECT_EQ(coefficient_vector(p, 3), coeffs);
}

TEST(MultiPoly, ChangeRingByName) {
    const VarSet other = make_vars({"z", "w", "x", "y"});
    const MultiPoly x = MultiPoly::variable(xyz(), "x");
    const MultiPoly z = MultiPoly::variable(xyz(), "z");
    const MultiPoly moved = change_ring(x * z * z, other);
    EXPECT_EQ(moved, MultiPoly::variable(other, "x") * pow(MultiPoly::variable(other, "z"), 2));
    EXPECT_EQ(degree_in(moved, "z"), 2);
    EXPECT_EQ(coefficient_of(moved, "z", 2), MultiPoly::variable(other, "x"));
}
