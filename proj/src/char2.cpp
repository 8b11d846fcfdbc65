#include "g1inv/errors.hpp"
#include "g1inv/invariants.hpp"

#include <algorithm>
#include <set>

namespace g1inv {

namespace {

using Perm = std::array<int, 5>;

Perm compose(const Perm& a, const Perm& b) { // (a o b)(i) = a(b(i))
    Perm out{};
    for (std::size_t i = 0; i < 5; ++i) out[i] = a[static_cast<std::size_t>(b[i])];
    return out;
}

std::vector<Perm> dihedral_group() {
    const Perm rotation{1, 2, 3, 4, 0}; // (12345)
    const Perm reflection{0, 4, 3, 2, 1}; // (25)(34)
    std::set<Perm> group{{0, 1, 2, 3, 4}};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Perm& g : std::vector<Perm>(group.begin(), group.end())) {
            for (const Perm& h : {rotation, reflection}) grew |= group.insert(compose(g, h)).second;
        }
    }
    return {group.begin(), group.end()};
}

void require_integral(std::span<const Rational> values) {
    for (const auto& v : values) {
        if (!is_integer(v)) throw InvalidInput("characteristic-2 invariant needs integer coefficients");
    }
}

} // namespace

const std::vector<std::array<int, 5>>& dihedral_coset_representatives() {
    static const std::vector<Perm> reps = [] {
        const auto d5 = dihedral_group();
        std::set<Perm> covered;
        std::vector<Perm> out;
        Perm sigma{0, 1, 2, 3, 4};
        do {
            if (covered.count(sigma)) continue;
            out.push_back(sigma);
            for (const Perm& d : d5) covered.insert(compose(sigma, d));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        return out;
    }();
    return reps;
}

int a1_char2(const GenusOneModel& model) {
    switch (degree(model)) {
    case 1: {
        const auto& m = std::get<WeierstrassModel>(model);
        require_integral(m.a);
        return mod2(m.a[0]);
    }
    case 2: {
        const auto& m = std::get<QuarticModel>(model);
        require_integral(m.p);
        require_integral(m.q);
        return mod2(m.p[1]); // coefficient of xzy
    }
    case 3: {
        const auto& m = std::get<CubicModel>(model);
        require_integral(m.c);
        return mod2(m.c[9]); // coefficient of xyz
    }
    case 4: {
        const auto& m = std::get<QuadricPairModel>(model);
        require_integral(m.q1);
        require_integral(m.q2);
        // positions of x1x2, x1x3, x1x4, x2x3, x2x4, x3x4 in the graded-lex list
        const auto& a = m.q1;
        const auto& b = m.q2;
        const Rational sum = a[1] * b[8] + a[2] * b[6] + a[3] * b[5] + a[5] * b[3] + a[6] * b[2] + a[8] * b[1];
        return mod2(sum);
    }
    default: {
        const auto& m = std::get<PfaffianModel>(model);
        for (const auto& entry : m.upper) require_integral(entry);
        const PolyMatrix phi = pfaffian_matrix(m);
        MultiPoly total(quinary_vars());
        for (const Perm& sigma : dihedral_coset_representatives()) {
            MultiPoly product = MultiPoly::constant(quinary_vars(), 1);
            for (std::size_t i = 0; i < 5; ++i) {
                product *= phi(sigma[i], sigma[(i + 1) % 5]);
            }
            total += product;
        }
        return mod2(total.coefficient({1, 1, 1, 1, 1}));
    }
    }
}

} // namespace g1inv
