#include "g1inv/linalg.hpp"

namespace g1inv {

MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b) {
    auto q = exact_divide(a, b);
    if (!q) throw InternalError("fraction-free elimination hit an inexact division");
    return *std::move(q);
}

Rational determinant(const RatMatrix& m) { return bareiss_determinant<Rational>(m); }

MultiPoly determinant(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    if (m.rows() <= 6) return cofactor_determinant<MultiPoly>(m);
    return bareiss_determinant<MultiPoly>(m);
}

namespace {

template <class Scalar>
Matrix<Scalar> adjugate_impl(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) throw InvalidInput("adjugate of a non-square matrix");
    const Eigen::Index n = m.rows();
    Matrix<Scalar> adj(n, n);
    if (n == 1) {
        adj(0, 0) = Scalar(1);
        return adj;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            Matrix<Scalar> sub(n - 1, n - 1);
            for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            Scalar minor = cofactor_determinant<Scalar>(sub);
            adj(j, i) = (i + j) % 2 == 0 ? minor : Scalar(-minor);
        }
    }
    return adj;
}

} // namespace

PolyMatrix adjugate(const PolyMatrix& m) { return adjugate_impl<MultiPoly>(m); }
RatMatrix adjugate(const RatMatrix& m) { return adjugate_impl<Rational>(m); }

bool is_alternating(const PolyMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_zero()) return false;
        for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
            if (!(m(i, j) + m(j, i)).is_zero()) return false;
        }
    }
    return true;
}

MultiPoly pfaffian4(const PolyMatrix& m) {
    if (m.rows() != 4 || m.cols() != 4) throw InvalidInput("pfaffian4 needs a 4x4 matrix");
    if (!is_alternating(m)) throw InvalidInput("pfaffian4 needs an alternating matrix");
    return m(0, 1) * m(2, 3) - m(0, 2) * m(1, 3) + m(0, 3) * m(1, 2);
}

PolyMatrix principal_minor(const PolyMatrix& m, Eigen::Index k) {
    const Eigen::Index n = m.rows();
    PolyMatrix out(n - 1, n - 1);
    for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == k) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
            if (c == k) continue;
            out(rr, cc++) = m(r, c);
        }
        ++rr;
    }
    return out;
}

RowEchelon row_echelon(const RatMatrix& a) {
    // Fraction-free forward pass (every division is exact), then normalise.
    RatMatrix m = a;
    const Eigen::Index rows = m.rows();
    const Eigen::Index cols = m.cols();
    std::vector<Eigen::Index> pivots;
    Rational previous = 1;
    Eigen::Index r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index p = r;
        while (p < rows && m(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r) m.row(r).swap(m.row(p));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / previous;
            }
            m(i, c) = 0;
        }
        previous = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    for (Eigen::Index k = static_cast<Eigen::Index>(pivots.size()); k-- > 0;) {
        const Eigen::Index c = pivots[static_cast<std::size_t>(k)];
        const Rational lead = m(k, c);
        for (Eigen::Index j = c; j < cols; ++j) m(k, j) /= lead;
        for (Eigen::Index i = 0; i < k; ++i) {
            const Rational f = m(i, c);
            if (f == 0) continue;
            for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& a) { return row_echelon(a).pivots.size(); }

std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b) {
    if (a.rows() != b.size()) throw InvalidInput("solve_linear: right-hand side has the wrong length");
    RatMatrix augmented(a.rows(), a.cols() + 1);
    augmented.leftCols(a.cols()) = a;
    augmented.col(a.cols()) = b;
    auto [reduced, pivots] = row_echelon(augmented);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    RatVector x = RatVector::Constant(a.cols(), Rational(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        x(pivots[k]) = reduced(static_cast<Eigen::Index>(k), a.cols());
    }
    return x;
}

std::vector<RatVector> kernel_basis(const RatMatrix& a) {
    auto [reduced, pivots] = row_echelon(a);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<RatVector> basis;
    for (Eigen::Index free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        RatVector v = RatVector::Constant(a.cols(), Rational(0));
        v(free) = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v(pivots[k]) = -reduced(static_cast<Eigen::Index>(k), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidInput("inverse of a non-square matrix");
    const Eigen::Index n = a.rows();
    RatMatrix augmented(n, 2 * n);
    augmented.leftCols(n) = a;
    augmented.rightCols(n) = RatMatrix::Identity(n, n);
    auto [reduced, pivots] = row_echelon(augmented);
    if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
        throw InvalidInput("matrix is singular");
    }
    return reduced.rightCols(n);
}

int permutation_sign(std::span<const int> perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) ++inversions;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

RatMatrix coefficient_matrix(std::span<const MultiPoly> forms, const VarSet& vars, unsigned d) {
    const std::size_t cols = monomials(vars->size(), d).size();
    RatMatrix out(static_cast<Eigen::Index>(forms.size()), static_cast<Eigen::Index>(cols));
    for (std::size_t r = 0; r < forms.size(); ++r) {
        const auto row = coefficient_vector(change_ring(forms[r], vars), d);
        for (std::size_t c = 0; c < cols; ++c) out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c];
    }
    return out;
}

PolyMatrix to_poly_matrix(const RatMatrix& m) { return m.cast<MultiPoly>(); }

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("matrix product: inner dimensions differ");
    PolyMatrix out(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            MultiPoly acc;
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc += a(i, k) * b(k, j);
            }
            out(i, j) = std::move(acc);
        }
    }
    return out;
}

} // namespace g1inv
