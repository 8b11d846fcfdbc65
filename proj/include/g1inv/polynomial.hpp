#pragma once

#include "g1inv/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace g1inv {

/// Ordered variable names shared by every polynomial of one ring.
using VarSet = std::shared_ptr<const std::vector<std::string>>;

VarSet make_vars(std::vector<std::string> names);

/// One non-negative exponent per ring variable.
using Exponent = std::vector<unsigned>;

/// Graded lexicographic order, variables ranked by their position in the ring.
/// Maps keyed with this comparator iterate from the leading term downwards.
struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// A default constructed or scalar-constructed polynomial carries no ring; it
/// is a constant that adopts the ring of whatever it is combined with. Two
/// polynomials with different rings cannot be combined.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(int c);                // NOLINT: literals
    MultiPoly(const Rational& c);    // NOLINT: scalars embed implicitly
    explicit MultiPoly(VarSet vars); // zero of the given ring

    static MultiPoly constant(VarSet vars, const Rational& c);
    static MultiPoly variable(VarSet vars, std::string_view name);
    static MultiPoly term(VarSet vars, Exponent e, const Rational& c);

    const VarSet& vars() const { return vars_; }
    std::size_t num_vars() const { return vars_ ? vars_->size() : 0; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Value of a constant polynomial; throws InvalidInput otherwise.
    Rational constant_value() const;
    Rational coefficient(const Exponent& e) const;
    /// -1 for the zero polynomial.
    int total_degree() const;
    /// True for zero and for polynomials whose terms all have degree d.
    bool is_homogeneous(int d) const;

    void add_term(const Exponent& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    friend MultiPoly operator*(MultiPoly a, int c) { return a *= Rational(c); }
    friend MultiPoly operator*(int c, MultiPoly a) { return a *= Rational(c); }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Moves a ringless constant into `vars`; no-op when already in that ring.
    void adopt_ring(const VarSet& vars);

private:
    VarSet vars_;
    TermMap terms_;
};

/// Index of `name` in the ring; throws InvalidInput when absent.
std::size_t var_index(const VarSet& vars, std::string_view name);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);

/// Quotient q with num = q * den, or nullopt when den does not divide num.
/// Throws InvalidInput when den is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den);

MultiPoly pow(const MultiPoly& p, unsigned k);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

/// Replaces the i-th ring variable of p by images[i]; the images share a ring.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);

/// Re-expresses p over `target`, matching variables by name.
MultiPoly change_ring(const MultiPoly& p, const VarSet& target);

/// Coefficient of var^k, as a polynomial in the same ring (var no longer occurs).
MultiPoly coefficient_of(const MultiPoly& p, std::string_view var, unsigned k);

/// Highest power of var occurring in p (0 for constants, -1 for zero).
int degree_in(const MultiPoly& p, std::string_view var);

/// All exponents of total degree d in n variables, leading (grlex) first.
std::vector<Exponent> monomials(std::size_t n, unsigned d);

/// Coefficients of p against monomials(num_vars, d). p must be homogeneous of degree d.
std::vector<Rational> coefficient_vector(const MultiPoly& p, unsigned d);

MultiPoly from_coefficients(const VarSet& vars, unsigned d, std::span<const Rational> coeffs);

/// Canonical text, leading term first: "3*x1^2 - 1/2*x1*x5 + 7".
std::string to_string(const MultiPoly& p);

} // namespace g1inv
