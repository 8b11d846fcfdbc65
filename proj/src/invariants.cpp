#include "g1inv/invariants.hpp"

#include "g1inv/errors.hpp"

#include <string>

namespace g1inv {

namespace {

// 1/2 x^T M x as a quadric in x1..x4.
MultiPoly quadric_from_matrix(const RatMatrix& m) {
    MultiPoly q(quaternary_vars());
    for (unsigned i = 0; i < 4; ++i) {
        for (unsigned j = i; j < 4; ++j) {
            Exponent e(4, 0u);
            ++e[i];
            ++e[j];
            q.add_term(e, i == j ? Rational(m(i, i) / 2) : m(i, j));
        }
    }
    return q;
}

} // namespace

InvariantTriple make_triple(Rational c4, Rational c6) {
    Rational disc = (c4 * c4 * c4 - c6 * c6) / 1728;
    return {std::move(c4), std::move(c6), std::move(disc)};
}

TateQuantities tate_quantities(const WeierstrassModel& m) {
    const auto& [a1, a2, a3, a4, a6] = m.a;
    return {a1 * a1 + 4 * a2, 2 * a4 + a1 * a3, a3 * a3 + 4 * a6,
            a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4};
}

InvariantTriple invariants_deg1(const WeierstrassModel& m) {
    const auto [b2, b4, b6, b8] = tate_quantities(m);
    InvariantTriple out;
    out.c4 = b2 * b2 - 24 * b4;
    out.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    out.disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    return out;
}

InvariantTriple invariants_deg2(const QuarticModel& m) {
    // Complete the square: (y + p/2)^2 = q + p^2/4.
    const auto& [al0, al1, al2] = m.p;
    const Rational a = m.q[0] + al0 * al0 / 4;
    const Rational b = m.q[1] + al0 * al1 / 2;
    const Rational c = m.q[2] + (al1 * al1 + 2 * al0 * al2) / 4;
    const Rational d = m.q[3] + al1 * al2 / 2;
    const Rational e = m.q[4] + al2 * al2 / 4;
    Rational c4 = 16 * (12 * a * e - 3 * b * d + c * c);
    Rational c6 = 32 * (72 * a * c * e - 27 * a * d * d - 27 * b * b * e + 9 * b * c * d - 2 * c * c * c);
    return make_triple(std::move(c4), std::move(c6));
}

MultiPoly hessian(const MultiPoly& u) {
    static constexpr std::array<const char*, 3> xyz{"x", "y", "z"};
    std::array<MultiPoly, 3> first;
    for (std::size_t i = 0; i < 3; ++i) first[i] = partial_derivative(u, xyz[i]);
    PolyMatrix second(3, 3);
    for (Eigen::Index i = 0; i < 3; ++i) {
        for (Eigen::Index j = 0; j < 3; ++j) {
            second(i, j) = partial_derivative(first[static_cast<std::size_t>(i)], xyz[static_cast<std::size_t>(j)]);
        }
    }
    MultiPoly h = determinant(second) * Rational(-1, 2);
    h.adopt_ring(u.vars());
    return h;
}

InvariantTriple invariants_deg3(const CubicModel& m) {
    static const VarSet vars = make_vars({"x", "y", "z", "mu"});
    const MultiPoly u = change_ring(cubic_form(m), vars);
    if (u.is_zero()) return {0, 0, 0};
    const MultiPoly h = hessian(u);
    const MultiPoly pencil = u + MultiPoly::variable(vars, "mu") * h;
    const MultiPoly hp = hessian(pencil);
    // H(U + mu H) = 3 (c4 mu + 2 c6 mu^2 + c4^2 mu^3) U + (1 - 3 c4 mu^2 - 2 c6 mu^3) H
    const auto c4 = exact_divide(coefficient_of(hp, "mu", 1), 3 * u);
    if (!c4 || !c4->is_constant()) throw InternalError("Hessian syzygy: mu coefficient is not a multiple of U");
    const Rational c4v = c4->constant_value();
    const auto c6 = exact_divide(coefficient_of(hp, "mu", 2) + 3 * c4v * h, 6 * u);
    if (!c6 || !c6->is_constant()) throw InternalError("Hessian syzygy: mu^2 coefficient is not a multiple of U");
    return make_triple(c4v, c6->constant_value());
}

Rational discriminant_deg3_matrix(const CubicModel& m) {
    const MultiPoly u = cubic_form(m);
    const MultiPoly h = hessian(u);
    std::array<MultiPoly, 6> rows;
    const std::array<const char*, 3> xyz{"x", "y", "z"};
    for (std::size_t i = 0; i < 3; ++i) {
        rows[i] = partial_derivative(u, xyz[i]);
        rows[i + 3] = partial_derivative(h, xyz[i]);
    }
    return determinant(coefficient_matrix(rows, ternary_vars(), 2));
}

InvariantTriple invariants_deg4(const QuadricPairModel& m) {
    static const VarSet st = make_vars({"s", "t"});
    const MultiPoly s = MultiPoly::variable(st, "s"), t = MultiPoly::variable(st, "t");
    const RatMatrix a = quadric_matrix(m.q1), b = quadric_matrix(m.q2);
    PolyMatrix pencil(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) pencil(i, j) = a(i, j) * s + b(i, j) * t;
    }
    MultiPoly f = determinant(pencil);
    f.adopt_ring(st);
    const Rational qa = f.coefficient({4, 0}), qb = f.coefficient({3, 1}), qc = f.coefficient({2, 2}),
                   qd = f.coefficient({1, 3}), qe = f.coefficient({0, 4});
    Rational c4 = 12 * qa * qe - 3 * qb * qd + qc * qc;
    Rational c6 = (72 * qa * qc * qe - 27 * qa * qd * qd - 27 * qb * qb * qe + 9 * qb * qc * qd -
                   2 * qc * qc * qc) / 2;
    return make_triple(std::move(c4), std::move(c6));
}

std::array<RatMatrix, 2> quadric_pair_covariants(const QuadricPairModel& m) {
    // T1 and T2 are polynomial in A and B, but their defining identity divides
    // by det A and det B. Evaluate on the pencil (A + eps I, B + eps I), where
    // both determinants are nonzero polynomials in eps, and then set eps = 0.
    static const VarSet vars = make_vars({"s", "t", "eps"});
    const MultiPoly s = MultiPoly::variable(vars, "s"), t = MultiPoly::variable(vars, "t"),
                    eps = MultiPoly::variable(vars, "eps");
    const RatMatrix a = quadric_matrix(m.q1), b = quadric_matrix(m.q2);
    PolyMatrix ap(4, 4), bp(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            ap(i, j) = MultiPoly::constant(vars, a(i, j)) + (i == j ? eps : MultiPoly(vars));
            bp(i, j) = MultiPoly::constant(vars, b(i, j)) + (i == j ? eps : MultiPoly(vars));
        }
    }
    const MultiPoly det_a = determinant(ap), det_b = determinant(bp);
    const PolyMatrix adj_a = adjugate(ap), adj_b = adjugate(bp);
    PolyMatrix combo(4, 4);
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) combo(i, j) = s * adj_a(i, j) + t * adj_b(i, j);
    }
    const PolyMatrix adj = adjugate(combo);
    const std::array<Rational, 3> origin{0, 0, 0};
    std::array<RatMatrix, 2> out{RatMatrix(4, 4), RatMatrix(4, 4)};
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = 0; j < 4; ++j) {
            MultiPoly entry = adj(i, j);
            entry.adopt_ring(vars);
            const auto t1 = exact_divide(coefficient_of(coefficient_of(entry, "s", 2), "t", 1), det_a);
            const auto t2 = exact_divide(coefficient_of(coefficient_of(entry, "s", 1), "t", 2), det_b);
            if (!t1 || !t2) throw InternalError("adjugate pencil is not divisible by det A, det B");
            out[0](i, j) = evaluate(*t1, origin);
            out[1](i, j) = evaluate(*t2, origin);
        }
    }
    return out;
}

std::array<MultiPoly, 6> omega_quadrics_deg4(const QuadricPairModel& m) {
    const auto q = quadrics(m);
    const VarSet& vars = quaternary_vars();
    std::array<std::array<MultiPoly, 4>, 2> grad;
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t i = 0; i < 4; ++i) grad[k][i] = partial_derivative(q[k], (*vars)[i]);
    }
    std::array<MultiPoly, 6> out;
    std::size_t idx = 0;
    for (int r = 0; r < 4; ++r) {
        for (int s = r + 1; s < 4; ++s, ++idx) {
            std::array<int, 4> perm{r, s, 0, 0};
            for (int k = 0, pos = 2; k < 4; ++k) {
                if (k != r && k != s) perm[static_cast<std::size_t>(pos++)] = k;
            }
            const auto k3 = static_cast<std::size_t>(perm[2]), k4 = static_cast<std::size_t>(perm[3]);
            MultiPoly omega = grad[0][k3] * grad[1][k4] - grad[0][k4] * grad[1][k3];
            omega.adopt_ring(vars);
            out[idx] = permutation_sign(perm) > 0 ? omega : -omega;
        }
    }
    return out;
}

Rational discriminant_deg4_matrix(const QuadricPairModel& m) {
    const auto q = quadrics(m);
    const auto [t1, t2] = quadric_pair_covariants(m);
    const auto omega = omega_quadrics_deg4(m);
    std::vector<MultiPoly> rows{q[0], q[1], quadric_from_matrix(t1), quadric_from_matrix(t2)};
    rows.insert(rows.end(), omega.begin(), omega.end());
    return determinant(coefficient_matrix(rows, quaternary_vars(), 2));
}

InvariantTriple invariants(const GenusOneModel& m) {
    switch (degree(m)) {
    case 1: return invariants_deg1(std::get<WeierstrassModel>(m));
    case 2: return invariants_deg2(std::get<QuarticModel>(m));
    case 3: return invariants_deg3(std::get<CubicModel>(m));
    case 4: return invariants_deg4(std::get<QuadricPairModel>(m));
    default: return invariants_deg5(std::get<PfaffianModel>(m));
    }
}

Rational discriminant_by_matrix(const GenusOneModel& m) {
    switch (degree(m)) {
    case 3: return discriminant_deg3_matrix(std::get<CubicModel>(m)) / (kDiscriminantSign3 * 1728);
    case 4: return discriminant_deg4_matrix(std::get<QuadricPairModel>(m)) / (kDiscriminantSign4 * 16);
    case 5: return discriminant_deg5_matrix(std::get<PfaffianModel>(m)) / (kDiscriminantSign5 * 32);
    default:
        throw InvalidInput("the determinant method needs a model of degree 3, 4 or 5, got degree " +
                           std::to_string(degree(m)));
    }
}

WeierstrassModel jacobian(const GenusOneModel& m) {
    const InvariantTriple inv = invariants(m);
    if (inv.disc == 0) throw SingularModel("singular model has no Jacobian");
    WeierstrassModel out;
    out.a = {0, 0, 0, -27 * inv.c4, -54 * inv.c6};
    return out;
}

Rational j_invariant(const GenusOneModel& m) {
    const InvariantTriple inv = invariants(m);
    if (inv.disc == 0) throw SingularModel("singular model has no j-invariant");
    return inv.c4 * inv.c4 * inv.c4 / inv.disc;
}

} // namespace g1inv
