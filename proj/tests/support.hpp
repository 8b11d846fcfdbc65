#pragma once

#include "g1inv/invariants.hpp"
#include "g1inv/linalg.hpp"
#include "g1inv/models.hpp"
#include "g1inv/polynomial.hpp"

#include "g1inv/model_io.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>

namespace g1inv {

// Readable failure messages in test assertions.
inline void PrintTo(const GenusOneModel& m, std::ostream* os) { *os << model_to_json(m).dump(); }
inline void PrintTo(const Transformation& g, std::ostream* os) { *os << transformation_to_json(g).dump(); }
inline void PrintTo(const MultiPoly& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(const InvariantTriple& t, std::ostream* os) {
    *os << "(" << to_string(t.c4) << ", " << to_string(t.c6) << ", " << to_string(t.disc) << ")";
}

} // namespace g1inv

namespace g1inv::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

    int nonzero(int lo, int hi) {
        for (;;) {
            if (int v = uniform(lo, hi); v != 0) return v;
        }
    }

    template <std::size_t N>
    std::array<Rational, N> integers(int lo, int hi) {
        std::array<Rational, N> out;
        for (auto& v : out) v = uniform(lo, hi);
        return out;
    }

    RatMatrix matrix(Eigen::Index rows, Eigen::Index cols, int lo, int hi) {
        RatMatrix m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i) {
            for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
        }
        return m;
    }

    RatMatrix invertible(Eigen::Index n, int lo, int hi) {
        for (;;) {
            RatMatrix m = matrix(n, n, lo, hi);
            if (determinant(m) != 0) return m;
        }
    }

private:
    std::mt19937_64 gen_;
};

inline WeierstrassModel random_weierstrass(Rng& rng, int bound = 5) { return {rng.integers<5>(-bound, bound)}; }

inline GenusOneModel random_model(Rng& rng, int n, int bound = 3) {
    switch (n) {
    case 1: return random_weierstrass(rng, bound);
    case 2: return QuarticModel{rng.integers<3>(-bound, bound), rng.integers<5>(-bound, bound)};
    case 3: return CubicModel{rng.integers<10>(-bound, bound)};
    case 4: return QuadricPairModel{rng.integers<10>(-bound, bound), rng.integers<10>(-bound, bound)};
    default: {
        PfaffianModel m;
        for (auto& e : m.upper) e = rng.integers<5>(-bound, bound);
        return m;
    }
    }
}

/// A model of degree n with nonzero discriminant.
inline GenusOneModel random_smooth_model(Rng& rng, int n, int bound = 3) {
    for (;;) {
        GenusOneModel m = random_model(rng, n, bound);
        if (invariants(m).disc != 0) return m;
    }
}

inline Transformation random_transformation(Rng& rng, int n) {
    switch (n) {
    case 1: return WeierstrassTransform{rng.nonzero(-2, 2), rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
    case 2: return QuarticTransform{rng.nonzero(-2, 2), rng.integers<3>(-2, 2), rng.invertible(2, -2, 2)};
    case 3: return CubicTransform{rng.nonzero(-2, 2), rng.invertible(3, -2, 2)};
    case 4: return QuadricPairTransform{rng.invertible(2, -2, 2), rng.invertible(4, -1, 1)};
    default: return PfaffianTransform{rng.invertible(5, -1, 1), rng.invertible(5, -1, 1)};
    }
}

/// Determinant by the Leibniz sum over all permutations.
inline Rational leibniz_determinant(const RatMatrix& m) {
    std::vector<int> perm(static_cast<std::size_t>(m.rows()));
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i) {
            for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
        }
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < perm.size(); ++i) term *= m(static_cast<Eigen::Index>(i), perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Reduces f(x, y) modulo the Weierstrass equation until y appears to degree <= 1.
inline MultiPoly reduce_mod_weierstrass(MultiPoly f, const WeierstrassModel& w) {
    const VarSet& ring = f.vars();
    const MultiPoly x = MultiPoly::variable(ring, "x");
    const MultiPoly y = MultiPoly::variable(ring, "y");
    const auto& [a1, a2, a3, a4, a6] = w.a;
    // y^2 = tail
    const MultiPoly tail = x * x * x + a2 * x * x + a4 * x + a6 - a1 * x * y - a3 * y;
    const std::size_t iy = var_index(ring, "y");
    for (;;) {
        auto it = std::find_if(f.terms().begin(), f.terms().end(),
                               [iy](const auto& t) { return t.first[iy] >= 2; });
        if (it == f.terms().end()) return f;
        Exponent e = it->first;
        const Rational c = it->second;
        e[iy] -= 2;
        const MultiPoly mono = MultiPoly::term(ring, e, c);
        f -= mono * y * y;
        f += mono * tail;
    }
}

/// The affine point (x, y) of E in the coordinates of the degree-n model.
inline std::vector<MultiPoly> weierstrass_embedding(int n) {
    static const VarSet ring = make_vars({"x", "y"});
    const MultiPoly x = MultiPoly::variable(ring, "x");
    const MultiPoly y = MultiPoly::variable(ring, "y");
    const MultiPoly one = MultiPoly::constant(ring, 1);
    switch (n) {
    case 1: return {x, y, one};       // x, y, z
    case 2: return {x, one, y};       // x, z, y
    case 3: return {x, y, one};       // x, y, z
    case 4: return {one, x, y, x * x};
    default: return {one, x, y, x * x, x * y};
    }
}

/// Recomputes the degree-5 contraction and returns true when the odd-only
/// shape and c8 = c4^2 hold (trivially true when step 2 rejects the model).
inline bool deg5_internal_checks(const PfaffianModel& m) {
    const auto cov = deg5_covariants(m);
    if (!cov) return true;
    const MultiPoly pairing = contract(cov->m, cov->n);
    for (unsigned k : {0u, 2u, 4u}) {
        if (pairing.coefficient({k}) != 0) return false;
    }
    const Rational c4 = pairing.coefficient({1}) / 40;
    return pairing.coefficient({5}) / 128 == c4 * c4;
}

} // namespace g1inv::testing
