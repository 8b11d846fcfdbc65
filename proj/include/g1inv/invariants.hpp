#pragma once

#include "g1inv/linalg.hpp"
#include "g1inv/models.hpp"
#include "g1inv/polynomial.hpp"
#include "g1inv/rational.hpp"

#include <array>
#include <optional>

namespace g1inv {

struct TateQuantities {
    Rational b2, b4, b6, b8;
};

/// (c4, c6, Delta) with c4^3 - c6^2 = 1728 Delta.
struct InvariantTriple {
    Rational c4, c6, disc;
    bool operator==(const InvariantTriple&) const = default;
};

/// Builds the triple from c4 and c6, setting Delta = (c4^3 - c6^2) / 1728.
InvariantTriple make_triple(Rational c4, Rational c6);

TateQuantities tate_quantities(const WeierstrassModel& m);

InvariantTriple invariants_deg1(const WeierstrassModel& m);
InvariantTriple invariants_deg2(const QuarticModel& m);
InvariantTriple invariants_deg3(const CubicModel& m);
InvariantTriple invariants_deg4(const QuadricPairModel& m);
InvariantTriple invariants_deg5(const PfaffianModel& m);

/// Dispatches on the model degree.
InvariantTriple invariants(const GenusOneModel& m);

/// (-1/2) det of the second partials in x, y, z. Other ring variables are
/// treated as constants, so U may have coefficients in extra parameters.
MultiPoly hessian(const MultiPoly& u);

/// Determinant of the 6x6 coefficient matrix of dU/dx, dU/dy, dU/dz, dH/dx,
/// dH/dy, dH/dz (graded-lex columns). Equals kDiscriminantSign3 * 1728 * Delta.
Rational discriminant_deg3_matrix(const CubicModel& m);

/// The symmetric matrices T1, T2 of a quadric pair, defined by
/// adj(s adj A + t adj B) = a^2 A s^3 + a T1 s^2 t + e T2 s t^2 + e^2 B t^3.
std::array<RatMatrix, 2> quadric_pair_covariants(const QuadricPairModel& m);

/// The six quadrics Omega_{r,s}, r < s, in lexicographic pair order.
std::array<MultiPoly, 6> omega_quadrics_deg4(const QuadricPairModel& m);

/// Determinant of the 10x10 coefficient matrix of q1, q2, q1', q2' and the
/// Omega_{r,s}. Equals kDiscriminantSign4 * 16 * Delta.
Rational discriminant_deg4_matrix(const QuadricPairModel& m);

/// Covariants produced by the degree-5 evaluation algorithm.
struct Deg5Covariants {
    std::array<MultiPoly, 5> p;         ///< submaximal Pfaffians, in x1..x5
    MultiPoly secant;                   ///< det(dp_i/dx_j), quintic in x1..x5
    std::array<MultiPoly, 5> aux;       ///< q_i in v1..v5 with dS/dx_i = q_i(p)
    MultiPoly m;                        ///< quintic in w1..w5 (the dual basis)
    MultiPoly n;                        ///< quintic in v1..v5 with coefficients in lambda
};

/// nullopt when the products p_i p_j are linearly dependent.
std::optional<Deg5Covariants> deg5_covariants(const PfaffianModel& m);

/// The pairing <M, N> = kappa * sum_a M_a N_a a! as a polynomial in lambda,
/// with kappa the fixed normalisation of the contraction.
MultiPoly contract(const MultiPoly& m, const MultiPoly& n);

/// The ten quadrics Omega_{r,s}, r < s, in lexicographic pair order.
std::array<MultiPoly, 10> omega_quadrics_deg5(const PfaffianModel& m);

/// Determinant of the 15x15 coefficient matrix of p1..p5 and the
/// Omega_{r,s}. Equals kDiscriminantSign5 * 32 * Delta.
Rational discriminant_deg5_matrix(const PfaffianModel& m);

inline constexpr int kDiscriminantSign3 = 1;
inline constexpr int kDiscriminantSign4 = -1;
inline constexpr int kDiscriminantSign5 = 1;

/// Delta computed by the determinant method (degrees 3..5), rescaled so that it
/// agrees with invariants(m).disc.
Rational discriminant_by_matrix(const GenusOneModel& m);

/// Weierstrass equation y^2 = x^3 - 27 c4 x - 54 c6. Throws SingularModel when Delta = 0.
WeierstrassModel jacobian(const GenusOneModel& m);

/// c4^3 / Delta. Throws SingularModel when Delta = 0.
Rational j_invariant(const GenusOneModel& m);

/// The weight-one invariant in characteristic 2, for integral models of degree 2..5.
int a1_char2(const GenusOneModel& m);

/// Left coset representatives of <(12345), (25)(34)> in S5 (0-based images).
const std::vector<std::array<int, 5>>& dihedral_coset_representatives();

} // namespace g1inv
