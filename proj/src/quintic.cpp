// Degree-5 invariants via the covariants P, S, Q, M and N_lambda.

#include "g1inv/errors.hpp"
#include "g1inv/invariants.hpp"

#include <string>

namespace g1inv {

namespace {

const VarSet& dual_vars() {
    static const VarSet vars = make_vars({"w1", "w2", "w3", "w4", "w5"});
    return vars;
}

const VarSet& v_lambda_vars() {
    static const VarSet vars = make_vars({"v1", "v2", "v3", "v4", "v5", "lambda"});
    return vars;
}

const VarSet& lambda_vars() {
    static const VarSet vars = make_vars({"lambda"});
    return vars;
}

// Normalisation of the contraction S^5 V* x S^5 V -> K, fixed so that the
// Weierstrass family reproduces the degree-1 invariants.
const Rational& contraction_scale() {
    static const Rational kappa(1);
    return kappa;
}

Integer factorial(unsigned k) {
    Integer f = 1;
    for (unsigned i = 2; i <= k; ++i) f *= i;
    return f;
}

// Coefficient of x_i in a linear form of x1..x5.
Rational linear_coefficient(const MultiPoly& form, std::size_t i) {
    Exponent e(5, 0u);
    e[i] = 1;
    return change_ring(form, quinary_vars()).coefficient(e);
}

} // namespace

std::optional<Deg5Covariants> deg5_covariants(const PfaffianModel& model) {
    const VarSet& x = quinary_vars();
    Deg5Covariants cov;
    cov.p = pfaffians(model);

    // Step 2: the 15 products p_i p_j must be linearly independent.
    std::vector<MultiPoly> products;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i; j < 5; ++j) products.push_back(cov.p[i] * cov.p[j]);
    }
    const RatMatrix system = coefficient_matrix(products, x, 4).transpose(); // 70 x 15
    if (rank(system) != 15) return std::nullopt;

    // Step 3: secant quintic.
    PolyMatrix jac(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i) {
        for (Eigen::Index j = 0; j < 5; ++j) {
            jac(i, j) = partial_derivative(cov.p[static_cast<std::size_t>(i)], (*x)[static_cast<std::size_t>(j)]);
        }
    }
    cov.secant = change_ring(determinant(jac), x);

    // Step 4: auxiliary quadrics, dS/dx_i = q_i(p_1, ..., p_5).
    const VarSet& vl = v_lambda_vars();
    for (std::size_t i = 0; i < 5; ++i) {
        const MultiPoly ds = partial_derivative(cov.secant, (*x)[i]);
        const auto rhs_values = coefficient_vector(ds, 4);
        RatVector rhs(static_cast<Eigen::Index>(rhs_values.size()));
        for (std::size_t k = 0; k < rhs_values.size(); ++k) rhs(static_cast<Eigen::Index>(k)) = rhs_values[k];
        const auto solution = solve_linear(system, rhs);
        if (!solution) throw InternalError("secant quintic derivative is not a quadric in the Pfaffians");
        MultiPoly q(vl);
        Eigen::Index col = 0;
        for (std::size_t a = 0; a < 5; ++a) {
            for (std::size_t b = a; b < 5; ++b, ++col) {
                Exponent e(6, 0u);
                ++e[a];
                ++e[b];
                q.add_term(e, (*solution)(col));
            }
        }
        cov.aux[i] = std::move(q);
    }

    // Step 5: M = det(sum_k d^2 p_k / dx_i dx_j w_k).
    const VarSet& w = dual_vars();
    PolyMatrix hess(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i) {
        for (Eigen::Index j = 0; j < 5; ++j) {
            MultiPoly entry(w);
            for (std::size_t k = 0; k < 5; ++k) {
                const Rational c = partial_derivative(partial_derivative(cov.p[k], (*x)[static_cast<std::size_t>(i)]),
                                                      (*x)[static_cast<std::size_t>(j)])
                                       .constant_value();
                entry += c * MultiPoly::variable(w, (*w)[k]);
            }
            hess(i, j) = std::move(entry);
        }
    }
    cov.m = change_ring(determinant(hess), w);

    // Step 6: N = det(lambda dq_i/dv_j + sum_k dphi_jk/dx_i v_k).
    const PolyMatrix phi = pfaffian_matrix(model);
    const MultiPoly lambda = MultiPoly::variable(vl, "lambda");
    PolyMatrix nmat(5, 5);
    for (Eigen::Index i = 0; i < 5; ++i) {
        for (Eigen::Index j = 0; j < 5; ++j) {
            MultiPoly entry = lambda * partial_derivative(cov.aux[static_cast<std::size_t>(i)], (*vl)[static_cast<std::size_t>(j)]);
            for (Eigen::Index k = 0; k < 5; ++k) {
                entry += linear_coefficient(phi(j, k), static_cast<std::size_t>(i)) *
                         MultiPoly::variable(vl, (*vl)[static_cast<std::size_t>(k)]);
            }
            nmat(i, j) = std::move(entry);
        }
    }
    cov.n = change_ring(determinant(nmat), vl);
    return cov;
}

MultiPoly contract(const MultiPoly& m, const MultiPoly& n) {
    const MultiPoly mm = change_ring(m, dual_vars());
    const MultiPoly nn = change_ring(n, v_lambda_vars());
    MultiPoly out(lambda_vars());
    for (const auto& [e, c] : nn.terms()) {
        const Exponent v_part(e.begin(), e.begin() + 5);
        const Rational mc = mm.coefficient(v_part);
        if (mc == 0) continue;
        Integer weight = 1;
        for (unsigned k : v_part) weight *= factorial(k);
        out.add_term({e[5]}, contraction_scale() * mc * c * Rational(weight));
    }
    return out;
}

InvariantTriple invariants_deg5(const PfaffianModel& m) {
    const auto cov = deg5_covariants(m);
    if (!cov) return {0, 0, 0};
    const MultiPoly pairing = contract(cov->m, cov->n);
    for (unsigned k : {0u, 2u, 4u}) {
        if (pairing.coefficient({k}) != 0) {
            throw InternalError("contraction has a nonzero lambda^" + std::to_string(k) + " coefficient");
        }
    }
    if (degree_in(pairing, "lambda") > 5) throw InternalError("contraction has degree above 5 in lambda");
    Rational c4 = pairing.coefficient({1}) / 40;
    Rational c6 = pairing.coefficient({3}) / -320;
    const Rational c8 = pairing.coefficient({5}) / 128;
    if (c8 != c4 * c4) {
        throw InternalError("c8 = " + to_string(c8) + " differs from c4^2 = " + to_string(Rational(c4 * c4)));
    }
    return make_triple(std::move(c4), std::move(c6));
}

std::array<MultiPoly, 10> omega_quadrics_deg5(const PfaffianModel& m) {
    const VarSet& x = quinary_vars();
    const auto p = pfaffians(m);
    const PolyMatrix phi = pfaffian_matrix(m);
    std::array<std::array<MultiPoly, 5>, 5> grad; // grad[i][k] = dp_i/dx_k
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t k = 0; k < 5; ++k) grad[i][k] = partial_derivative(p[i], (*x)[k]);
    }
    std::array<MultiPoly, 10> out;
    std::size_t idx = 0;
    for (int r = 0; r < 5; ++r) {
        for (int s = r + 1; s < 5; ++s, ++idx) {
            std::array<int, 5> perm{r, s, 0, 0, 0};
            for (int k = 0, pos = 2; k < 5; ++k) {
                if (k != r && k != s) perm[static_cast<std::size_t>(pos++)] = k;
            }
            const auto k3 = static_cast<std::size_t>(perm[2]), k4 = static_cast<std::size_t>(perm[3]),
                       k5 = static_cast<std::size_t>(perm[4]);
            MultiPoly omega(x);
            for (std::size_t i = 0; i < 5; ++i) {
                for (std::size_t j = 0; j < 5; ++j) {
                    if (i == j) continue;
                    const Rational c = linear_coefficient(phi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), k4);
                    if (c == 0) continue;
                    omega += c * grad[i][k3] * grad[j][k5];
                }
            }
            out[idx] = permutation_sign(perm) > 0 ? omega : -omega;
        }
    }
    return out;
}

Rational discriminant_deg5_matrix(const PfaffianModel& m) {
    const auto p = pfaffians(m);
    const auto omega = omega_quadrics_deg5(m);
    std::vector<MultiPoly> rows(p.begin(), p.end());
    rows.insert(rows.end(), omega.begin(), omega.end());
    return determinant(coefficient_matrix(rows, quinary_vars(), 2));
}

} // namespace g1inv
