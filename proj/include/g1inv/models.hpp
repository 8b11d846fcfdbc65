#pragma once

#include "g1inv/linalg.hpp"
#include "g1inv/polynomial.hpp"
#include "g1inv/rational.hpp"

#include <array>
#include <span>
#include <variant>
#include <vector>

namespace g1inv {

// ---------------------------------------------------------------------------
// Genus one models of degree 1..5
// ---------------------------------------------------------------------------

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6, stored as (a1, a2, a3, a4, a6).
struct WeierstrassModel {
    std::array<Rational, 5> a{};
    bool operator==(const WeierstrassModel&) const = default;
};

/// y^2 + p(x,z) y = q(x,z) with p = α0 x^2 + α1 xz + α2 z^2 and
/// q = a x^4 + b x^3 z + c x^2 z^2 + d x z^3 + e z^4.
struct QuarticModel {
    std::array<Rational, 3> p{};
    std::array<Rational, 5> q{};
    bool operator==(const QuarticModel&) const = default;
};

/// Ternary cubic with coefficients ordered
/// x^3, y^3, z^3, x^2y, x^2z, xy^2, y^2z, xz^2, yz^2, xyz
/// (classically named a, b, c, a2, a3, b1, b3, c1, c2, m).
struct CubicModel {
    std::array<Rational, 10> c{};
    bool operator==(const CubicModel&) const = default;
};

/// Pair of quadrics in x1..x4, coefficients in graded-lex order
/// x1^2, x1x2, x1x3, x1x4, x2^2, x2x3, x2x4, x3^2, x3x4, x4^2.
struct QuadricPairModel {
    std::array<Rational, 10> q1{};
    std::array<Rational, 10> q2{};
    bool operator==(const QuadricPairModel&) const = default;
};

/// 5x5 alternating matrix of linear forms in x1..x5, stored by its upper
/// triangle (1,2),(1,3),...,(4,5); entry k holds the coefficients of x1..x5.
struct PfaffianModel {
    std::array<std::array<Rational, 5>, 10> upper{};
    bool operator==(const PfaffianModel&) const = default;
};

using GenusOneModel =
    std::variant<WeierstrassModel, QuarticModel, CubicModel, QuadricPairModel, PfaffianModel>;

int degree(const GenusOneModel& m);

// Coordinate rings. Each call returns the same shared instance.
const VarSet& weierstrass_vars(); // x, y, z
const VarSet& binary_vars();      // x, z, y   (y has weight 2)
const VarSet& ternary_vars();     // x, y, z
const VarSet& quaternary_vars();  // x1..x4
const VarSet& quinary_vars();     // x1..x5

MultiPoly cubic_form(const CubicModel& m);
CubicModel cubic_from_form(const MultiPoly& u);

std::array<MultiPoly, 2> quadrics(const QuadricPairModel& m);
QuadricPairModel quadric_pair_from_forms(const MultiPoly& q1, const MultiPoly& q2);

/// Symmetric M with q = 1/2 x^T M x.
RatMatrix quadric_matrix(std::span<const Rational, 10> q);

/// Index into PfaffianModel::upper for 0-based i < j.
std::size_t upper_index(int i, int j);

PolyMatrix pfaffian_matrix(const PfaffianModel& m);
/// Reads the upper triangle; the input must be alternating with linear entries.
PfaffianModel pfaffian_model_from_matrix(const PolyMatrix& m);

/// Submaximal Pfaffians p_i = (-1)^(i+1) pf(phi with row and column i deleted).
std::array<MultiPoly, 5> pfaffians(const PfaffianModel& m);

/// Defining equations of the model (see the per-degree formats above).
std::vector<MultiPoly> equations(const GenusOneModel& m);

// ---------------------------------------------------------------------------
// Transformations
// ---------------------------------------------------------------------------

/// x = u^2 x' + r, y = u^3 y' + u^2 s x' + t.
struct WeierstrassTransform {
    Rational u = 1, r = 0, s = 0, t = 0;
};

/// (x, z) = (x', z') B,  y = mu^-1 y' + r0 x'^2 + r1 x'z' + r2 z'^2.
struct QuarticTransform {
    Rational mu = 1;
    std::array<Rational, 3> r{};
    RatMatrix B = RatMatrix::Identity(2, 2);
};

/// U' = mu U(x),  x_j = sum_i B_ij x'_i.
struct CubicTransform {
    Rational mu = 1;
    RatMatrix B = RatMatrix::Identity(3, 3);
};

/// (q1', q2') = A (q1, q2) with the substitution x_j = sum_i B_ij x'_i.
struct QuadricPairTransform {
    RatMatrix A = RatMatrix::Identity(2, 2);
    RatMatrix B = RatMatrix::Identity(4, 4);
};

/// phi' = A phi A^T with the substitution x_j = sum_i B_ij x'_i.
struct PfaffianTransform {
    RatMatrix A = RatMatrix::Identity(5, 5);
    RatMatrix B = RatMatrix::Identity(5, 5);
};

using Transformation = std::variant<WeierstrassTransform, QuarticTransform, CubicTransform,
                                    QuadricPairTransform, PfaffianTransform>;

int degree(const Transformation& g);

Transformation identity_transformation(int degree);

/// Throws InvalidInput for wrong matrix shapes or a vanishing nondegeneracy product.
void validate(const Transformation& g);

/// u^-1, mu det B, mu det B, det A det B, (det A)^2 det B for degrees 1..5.
Rational det_character(const Transformation& g);

/// The transformation acting as g1 after g2: apply(compose(g1, g2), m) = apply(g1, apply(g2, m)).
Transformation compose(const Transformation& g1, const Transformation& g2);

GenusOneModel apply(const Transformation& g, const GenusOneModel& m);

bool operator==(const Transformation& a, const Transformation& b);

// ---------------------------------------------------------------------------
// Weierstrass family
// ---------------------------------------------------------------------------

/// The degree-n model cut out by the image of E under |n.O|.
GenusOneModel weierstrass_model(const WeierstrassModel& w, int n);

/// Group map from degree-1 substitutions to degree-n transformations.
Transformation gamma(const WeierstrassTransform& g, int n);

/// Projects a degree-5 model from a smooth rational point on it, giving a
/// degree-4 model of the same curve. Throws InvalidInput when the point is
/// not on the curve, is singular, or the elimination degenerates.
QuadricPairModel project_from_point(const PfaffianModel& m, std::span<const Rational> point);

} // namespace g1inv
