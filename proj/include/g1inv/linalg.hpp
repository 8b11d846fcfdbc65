#pragma once

#include "g1inv/errors.hpp"
#include "g1inv/polynomial.hpp"
#include "g1inv/rational.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<g1inv::MultiPoly> : GenericNumTraits<g1inv::MultiPoly> {
    using Real = g1inv::MultiPoly;
    using NonInteger = g1inv::MultiPoly;
    using Nested = g1inv::MultiPoly;
    using Literal = g1inv::MultiPoly;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 50,
        MulCost = 200
    };
};

} // namespace Eigen

namespace g1inv {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;
using PolyMatrix = Matrix<MultiPoly>;

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
/// Throws InternalError when b does not divide a.
MultiPoly exact_quotient(const MultiPoly& a, const MultiPoly& b);

/// Fraction-free (Bareiss) determinant. Every division is exact, so over a
/// polynomial ring the intermediate entries stay polynomial.
template <class Scalar>
Scalar bareiss_determinant(Matrix<Scalar> m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    const Eigen::Index n = m.rows();
    if (n == 0) return Scalar(1);
    bool negate = false;
    Scalar previous(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && is_zero(m(pivot, k))) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != k) {
            m.row(k).swap(m.row(pivot));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
            }
            m(i, k) = Scalar(0);
        }
        previous = m(k, k);
    }
    Scalar det = m(n - 1, n - 1);
    return negate ? Scalar(-det) : det;
}

/// Laplace expansion along rows, memoising minors by their column set.
template <class Scalar>
Scalar cofactor_determinant(const Matrix<Scalar>& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    const auto n = static_cast<int>(m.rows());
    if (n == 0) return Scalar(1);
    if (n > 20) throw InvalidInput("cofactor expansion limited to 20x20");
    // memo[mask] = determinant of rows (n - popcount(mask))..n-1 against columns in mask
    std::unordered_map<std::uint32_t, Scalar> memo;
    auto minor = [&](auto&& self, std::uint32_t mask, int row) -> Scalar {
        if (row == n) return Scalar(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        Scalar total(0);
        int position = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            if (!is_zero(m(row, j))) {
                Scalar term = m(row, j) * self(self, mask & ~(1u << j), row + 1);
                if (position % 2 == 0) total += term;
                else total -= term;
            }
            ++position;
        }
        memo.emplace(mask, total);
        return total;
    };
    return minor(minor, (n == 32 ? ~0u : (1u << n) - 1u), 0);
}

Rational determinant(const RatMatrix& m);

/// Cofactor expansion up to 6x6, fraction-free elimination beyond.
MultiPoly determinant(const PolyMatrix& m);

/// Classical adjoint (transpose of the cofactor matrix).
PolyMatrix adjugate(const PolyMatrix& m);
RatMatrix adjugate(const RatMatrix& m);

bool is_alternating(const PolyMatrix& m);

/// Pfaffian of a 4x4 alternating matrix: m01*m23 - m02*m13 + m03*m12.
MultiPoly pfaffian4(const PolyMatrix& m);

/// Deletes row and column k.
PolyMatrix principal_minor(const PolyMatrix& m, Eigen::Index k);

/// Reduced row echelon form with its pivot columns.
struct RowEchelon {
    RatMatrix reduced;
    std::vector<Eigen::Index> pivots;
};

RowEchelon row_echelon(const RatMatrix& a);

std::size_t rank(const RatMatrix& a);

/// One exact solution of A x = b (free variables set to zero), or nullopt when
/// the system is inconsistent. Throws InvalidInput on dimension mismatch.
std::optional<RatVector> solve_linear(const RatMatrix& a, const RatVector& b);

/// Basis of the right kernel, one vector per free column of the echelon form.
std::vector<RatVector> kernel_basis(const RatMatrix& a);

/// Exact inverse; throws InvalidInput for a singular matrix.
RatMatrix inverse(const RatMatrix& a);

/// Row r holds the coefficients of forms[r] against monomials(vars, d).
RatMatrix coefficient_matrix(std::span<const MultiPoly> forms, const VarSet& vars, unsigned d);

/// +1 or -1 according to the parity of a permutation in one-line notation.
int permutation_sign(std::span<const int> perm);

PolyMatrix to_poly_matrix(const RatMatrix& m);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

} // namespace g1inv
