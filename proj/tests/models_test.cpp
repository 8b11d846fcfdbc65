#include "g1inv/errors.hpp"
#include "g1inv/models.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace g1inv;
using namespace g1inv::testing;

TEST(Models, WeierstrassFamilyLiesOnTheCurve) {
    Rng rng(31);
    for (int round = 0; round < 10; ++round) {
        const WeierstrassModel w = random_weierstrass(rng);
        for (int n = 1; n <= 5; ++n) {
            const auto eqs = equations(weierstrass_model(w, n));
            const auto point = weierstrass_embedding(n);
            for (const MultiPoly& f : eqs) {
                EXPECT_TRUE(reduce_mod_weierstrass(substitute(f, point), w).is_zero())
                    << "degree " << n << ": " << to_string(f);
            }
        }
    }
}

TEST(Models, DegreeFiveWeierstrassPfaffians) {
    const auto p = pfaffians(std::get<PfaffianModel>(weierstrass_model({{0, 0, 0, 0, 0}}, 5)));
    const VarSet& x = quinary_vars();
    auto v = [&](int i) { return MultiPoly::variable(x, (*x)[static_cast<std::size_t>(i - 1)]); };
    EXPECT_EQ(p[0], v(1) * v(4) - v(2) * v(2));
    EXPECT_EQ(p[1], v(2) * v(3) - v(1) * v(5));
    EXPECT_EQ(p[2], v(3) * v(3) - v(2) * v(4));
    EXPECT_EQ(p[3], v(2) * v(5) - v(3) * v(4));
    EXPECT_EQ(p[4], v(4) * v(4) - v(3) * v(5));
}

TEST(Models, IdentityActsTrivially) {
    Rng rng(32);
    for (int n = 1; n <= 5; ++n) {
        const GenusOneModel m = random_model(rng, n);
        EXPECT_EQ(g1inv::apply(identity_transformation(n), m), m);
        EXPECT_EQ(det_character(identity_transformation(n)), 1);
    }
}

TEST(Models, ComposeIsAGroupAction) {
    Rng rng(33);
    for (int n = 1; n <= 5; ++n) {
        for (int round = 0; round < 6; ++round) {
            const GenusOneModel m = random_model(rng, n, 2);
            const Transformation g1 = random_transformation(rng, n);
            const Transformation g2 = random_transformation(rng, n);
            EXPECT_EQ(g1inv::apply(compose(g1, g2), m), g1inv::apply(g1, g1inv::apply(g2, m))) << "degree " << n;
            EXPECT_EQ(det_character(compose(g1, g2)), det_character(g1) * det_character(g2)) << "degree " << n;
        }
    }
}

TEST(Models, GammaIsEquivariantAndMultiplicative) {
    Rng rng(34);
    for (int round = 0; round < 8; ++round) {
        const WeierstrassModel w = random_weierstrass(rng, 3);
        const auto g1 = std::get<WeierstrassTransform>(random_transformation(rng, 1));
        const auto g2 = std::get<WeierstrassTransform>(random_transformation(rng, 1));
        const auto g12 = std::get<WeierstrassTransform>(compose(g1, g2));
        const auto moved = std::get<WeierstrassModel>(g1inv::apply(g1, w));
        for (int n = 2; n <= 5; ++n) {
            EXPECT_EQ(g1inv::apply(gamma(g1, n), weierstrass_model(w, n)), weierstrass_model(moved, n)) << "degree " << n;
            EXPECT_EQ(compose(gamma(g1, n), gamma(g2, n)), gamma(g12, n)) << "degree " << n;
            EXPECT_EQ(det_character(gamma(g1, n)), det_character(g1)) << "degree " << n;
        }
    }
}

TEST(Models, ValidateRejectsDegenerateTransformations) {
    EXPECT_THROW(validate(WeierstrassTransform{0, 0, 0, 0}), InvalidInput);
    CubicTransform c;
    c.B = RatMatrix::Zero(3, 3);
    EXPECT_THROW(validate(c), InvalidInput);
    QuadricPairTransform q;
    q.A = RatMatrix::Identity(3, 3);
    EXPECT_THROW(validate(q), InvalidInput);
}

TEST(Models, PfaffianMatrixRoundTrip) {
    Rng rng(35);
    const auto m = std::get<PfaffianModel>(random_model(rng, 5));
    const PolyMatrix phi = pfaffian_matrix(m);
    EXPECT_TRUE(is_alternating(phi));
    EXPECT_EQ(pfaffian_model_from_matrix(phi), m);
}

TEST(Models, QuadricMatrixHalvesTheForm) {
    Rng rng(36);
    const auto m = std::get<QuadricPairModel>(random_model(rng, 4));
    const RatMatrix a = quadric_matrix(m.q1);
    const std::vector<Rational> x = {1, -2, 3, 5};
    Rational form = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) form += a(i, j) * x[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(j)];
    }
    EXPECT_EQ(form / 2, evaluate(quadrics(m)[0], x));
}
