#include "g1inv/errors.hpp"
#include "g1inv/models.hpp"

#include <algorithm>

namespace g1inv {

QuadricPairModel project_from_point(const PfaffianModel& m, std::span<const Rational> point) {
    if (point.size() != 5) throw InvalidInput("projection needs a point with 5 coordinates");
    if (std::all_of(point.begin(), point.end(), [](const Rational& c) { return c == 0; })) {
        throw InvalidInput("(0:0:0:0:0) is not a projective point");
    }
    const VarSet& vars = quinary_vars();
    const auto p = pfaffians(m);
    for (const auto& pi : p) {
        if (evaluate(pi, point) != 0) throw InvalidInput("point does not lie on the curve");
    }

    RatMatrix jac(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i) {
        for (Eigen::Index j = 0; j < 5; ++j) {
            jac(i, j) = evaluate(partial_derivative(p[static_cast<std::size_t>(i)], (*vars)[static_cast<std::size_t>(j)]), point);
        }
    }
    const RowEchelon tangent = row_echelon(jac);
    if (tangent.pivots.size() != 3) throw InvalidInput("point is a singular point of the curve");

    // New coordinates y = Y x: y1..y3 cut out the tangent line, y4 vanishes at
    // the point, and y5 is the first coordinate not vanishing there.
    RatMatrix y(5, 5);
    y.topRows(3) = tangent.reduced.topRows(3);
    RatMatrix pt(1, 5);
    for (Eigen::Index j = 0; j < 5; ++j) pt(0, j) = point[static_cast<std::size_t>(j)];
    bool found = false;
    for (const RatVector& candidate : kernel_basis(pt)) {
        RatMatrix trial(4, 5);
        trial.topRows(3) = y.topRows(3);
        trial.row(3) = candidate.transpose();
        if (rank(trial) == 4) {
            y.row(3) = candidate.transpose();
            found = true;
            break;
        }
    }
    if (!found) throw InternalError("no coordinate completes the tangent line");
    const auto lead = static_cast<Eigen::Index>(
        std::find_if(point.begin(), point.end(), [](const Rational& c) { return c != 0; }) - point.begin());
    y.row(4) = RatMatrix::Identity(5, 5).row(lead);

    // x = Y^-1 y, i.e. x_j = sum_k Yinv(j, k) y_k.
    const RatMatrix yinv = inverse(y);
    std::vector<MultiPoly> images;
    for (Eigen::Index j = 0; j < 5; ++j) {
        MultiPoly image(vars);
        for (Eigen::Index k = 0; k < 5; ++k) {
            image += yinv(j, k) * MultiPoly::variable(vars, (*vars)[static_cast<std::size_t>(k)]);
        }
        images.push_back(std::move(image));
    }

    std::array<MultiPoly, 5> moved;
    RatMatrix linear_part(4, 5); // coefficient of x_k * x5 in quadric i
    for (std::size_t i = 0; i < 5; ++i) {
        moved[i] = substitute(p[i], images);
        moved[i].adopt_ring(vars);
        if (!coefficient_of(moved[i], "x5", 2).is_zero()) {
            throw InternalError("projection centre is not on the transformed curve");
        }
        const MultiPoly l = coefficient_of(moved[i], "x5", 1);
        for (Eigen::Index k = 0; k < 4; ++k) {
            Exponent e(5, 0u);
            e[static_cast<std::size_t>(k)] = 1;
            linear_part(k, static_cast<Eigen::Index>(i)) = l.coefficient(e);
        }
    }

    const auto combos = kernel_basis(linear_part);
    if (combos.size() < 2) throw InvalidInput("elimination left fewer than two quadrics");
    std::array<MultiPoly, 2> survivors;
    for (std::size_t k = 0; k < 2; ++k) {
        MultiPoly q(vars);
        for (std::size_t i = 0; i < 5; ++i) q += combos[k](static_cast<Eigen::Index>(i)) * moved[i];
        survivors[k] = change_ring(q, quaternary_vars());
    }
    QuadricPairModel out = quadric_pair_from_forms(survivors[0], survivors[1]);
    RatMatrix coeffs(2, 10);
    for (Eigen::Index j = 0; j < 10; ++j) {
        coeffs(0, j) = out.q1[static_cast<std::size_t>(j)];
        coeffs(1, j) = out.q2[static_cast<std::size_t>(j)];
    }
    if (rank(coeffs) != 2) throw InvalidInput("projected quadrics are linearly dependent");
    return out;
}

} // namespace g1inv
