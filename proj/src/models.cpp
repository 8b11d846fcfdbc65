#include "g1inv/models.hpp"

#include "g1inv/errors.hpp"

#include <string>

namespace g1inv {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

MultiPoly var(const VarSet& vars, std::string_view name) { return MultiPoly::variable(vars, name); }

// Images of x_j = sum_i B(i, j) x'_i, for the variables of `vars`.
std::vector<MultiPoly> linear_substitution(const RatMatrix& b, const VarSet& vars) {
    const auto n = static_cast<Eigen::Index>(vars->size());
    std::vector<MultiPoly> images;
    for (Eigen::Index j = 0; j < n; ++j) {
        MultiPoly image(vars);
        for (Eigen::Index i = 0; i < n; ++i) {
            image += b(i, j) * var(vars, (*vars)[static_cast<std::size_t>(i)]);
        }
        images.push_back(std::move(image));
    }
    return images;
}

void require_shape(const RatMatrix& m, Eigen::Index n, const char* what) {
    if (m.rows() != n || m.cols() != n) {
        throw InvalidInput(std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
    }
}

void require_nonzero(const Rational& x, const char* what) {
    if (x == 0) throw InvalidInput(std::string("degenerate transformation: ") + what + " = 0");
}

} // namespace

int degree(const GenusOneModel& m) { return static_cast<int>(m.index()) + 1; }
int degree(const Transformation& g) { return static_cast<int>(g.index()) + 1; }

const VarSet& weierstrass_vars() {
    static const VarSet vars = make_vars({"x", "y", "z"});
    return vars;
}
const VarSet& binary_vars() {
    static const VarSet vars = make_vars({"x", "z", "y"});
    return vars;
}
const VarSet& ternary_vars() {
    static const VarSet vars = make_vars({"x", "y", "z"});
    return vars;
}
const VarSet& quaternary_vars() {
    static const VarSet vars = make_vars({"x1", "x2", "x3", "x4"});
    return vars;
}
const VarSet& quinary_vars() {
    static const VarSet vars = make_vars({"x1", "x2", "x3", "x4", "x5"});
    return vars;
}

namespace {

// Exponents (x, y, z) of the cubic coefficients in storage order.
constexpr std::array<std::array<unsigned, 3>, 10> kCubicMonomials{{
    {3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {2, 0, 1},
    {1, 2, 0}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 1},
}};

} // namespace

MultiPoly cubic_form(const CubicModel& m) {
    MultiPoly u(ternary_vars());
    for (std::size_t k = 0; k < 10; ++k) {
        const auto& e = kCubicMonomials[k];
        u.add_term({e[0], e[1], e[2]}, m.c[k]);
    }
    return u;
}

CubicModel cubic_from_form(const MultiPoly& u) {
    const MultiPoly form = change_ring(u, ternary_vars());
    if (!form.is_homogeneous(3)) throw InvalidInput("not a ternary cubic: " + to_string(u));
    CubicModel m;
    for (std::size_t k = 0; k < 10; ++k) {
        const auto& e = kCubicMonomials[k];
        m.c[k] = form.coefficient({e[0], e[1], e[2]});
    }
    return m;
}

std::array<MultiPoly, 2> quadrics(const QuadricPairModel& m) {
    return {from_coefficients(quaternary_vars(), 2, m.q1), from_coefficients(quaternary_vars(), 2, m.q2)};
}

QuadricPairModel quadric_pair_from_forms(const MultiPoly& q1, const MultiPoly& q2) {
    QuadricPairModel m;
    const auto c1 = coefficient_vector(change_ring(q1, quaternary_vars()), 2);
    const auto c2 = coefficient_vector(change_ring(q2, quaternary_vars()), 2);
    std::copy(c1.begin(), c1.end(), m.q1.begin());
    std::copy(c2.begin(), c2.end(), m.q2.begin());
    return m;
}

RatMatrix quadric_matrix(std::span<const Rational, 10> q) {
    RatMatrix a(4, 4);
    std::size_t k = 0;
    for (Eigen::Index i = 0; i < 4; ++i) {
        for (Eigen::Index j = i; j < 4; ++j, ++k) {
            if (i == j) {
                a(i, i) = 2 * q[k];
            } else {
                a(i, j) = q[k];
                a(j, i) = q[k];
            }
        }
    }
    return a;
}

std::size_t upper_index(int i, int j) {
    // (0,1)..(0,4) -> 0..3, (1,2)..(1,4) -> 4..6, (2,3),(2,4) -> 7,8, (3,4) -> 9
    static constexpr std::array<int, 5> row_start{0, 4, 7, 9, 10};
    return static_cast<std::size_t>(row_start[static_cast<std::size_t>(i)] + (j - i - 1));
}

PolyMatrix pfaffian_matrix(const PfaffianModel& m) {
    const VarSet& vars = quinary_vars();
    PolyMatrix phi = PolyMatrix::Constant(5, 5, MultiPoly(vars));
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const std::array<Rational, 5>& row = m.upper[upper_index(i, j)];
            MultiPoly entry = from_coefficients(vars, 1, row);
            phi(j, i) = -entry;
            phi(i, j) = std::move(entry);
        }
    }
    return phi;
}

PfaffianModel pfaffian_model_from_matrix(const PolyMatrix& phi) {
    if (phi.rows() != 5 || phi.cols() != 5 || !is_alternating(phi)) {
        throw InvalidInput("a degree-5 model is a 5x5 alternating matrix");
    }
    PfaffianModel m;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            const auto coeffs = coefficient_vector(change_ring(phi(i, j), quinary_vars()), 1);
            std::copy(coeffs.begin(), coeffs.end(), m.upper[upper_index(i, j)].begin());
        }
    }
    return m;
}

std::array<MultiPoly, 5> pfaffians(const PfaffianModel& m) {
    const PolyMatrix phi = pfaffian_matrix(m);
    std::array<MultiPoly, 5> p;
    for (Eigen::Index i = 0; i < 5; ++i) {
        MultiPoly pf = pfaffian4(principal_minor(phi, i));
        pf.adopt_ring(quinary_vars());
        p[static_cast<std::size_t>(i)] = i % 2 == 0 ? pf : -pf;
    }
    return p;
}

namespace {

MultiPoly weierstrass_equation(const WeierstrassModel& w) {
    const VarSet& v = weierstrass_vars();
    const MultiPoly x = var(v, "x"), y = var(v, "y"), z = var(v, "z");
    const auto& a = w.a;
    return y * y * z + a[0] * x * y * z + a[2] * y * z * z - x * x * x - a[1] * x * x * z -
           a[3] * x * z * z - a[4] * z * z * z;
}

MultiPoly binary_form(const VarSet& v, std::span<const Rational> coeffs) {
    // coefficients of x^d, x^(d-1) z, ..., z^d
    const auto d = static_cast<unsigned>(coeffs.size() - 1);
    MultiPoly f(v);
    const std::size_t ix = var_index(v, "x"), iz = var_index(v, "z");
    for (unsigned k = 0; k <= d; ++k) {
        Exponent e(v->size(), 0u);
        e[ix] = d - k;
        e[iz] = k;
        f.add_term(e, coeffs[k]);
    }
    return f;
}

std::vector<Rational> binary_coefficients(const MultiPoly& f, unsigned d) {
    const std::size_t ix = var_index(f.vars(), "x"), iz = var_index(f.vars(), "z");
    std::vector<Rational> out;
    for (unsigned k = 0; k <= d; ++k) {
        Exponent e(f.num_vars(), 0u);
        e[ix] = d - k;
        e[iz] = k;
        out.push_back(f.coefficient(e));
    }
    return out;
}

} // namespace

std::vector<MultiPoly> equations(const GenusOneModel& model) {
    return std::visit(
        overloaded{
            [](const WeierstrassModel& m) { return std::vector<MultiPoly>{weierstrass_equation(m)}; },
            [](const QuarticModel& m) {
                const VarSet& v = binary_vars();
                const MultiPoly y = var(v, "y");
                return std::vector<MultiPoly>{y * y + binary_form(v, m.p) * y - binary_form(v, m.q)};
            },
            [](const CubicModel& m) { return std::vector<MultiPoly>{cubic_form(m)}; },
            [](const QuadricPairModel& m) {
                auto q = quadrics(m);
                return std::vector<MultiPoly>{q[0], q[1]};
            },
            [](const PfaffianModel& m) {
                auto p = pfaffians(m);
                return std::vector<MultiPoly>(p.begin(), p.end());
            },
        },
        model);
}

// ---------------------------------------------------------------------------

Transformation identity_transformation(int degree) {
    switch (degree) {
    case 1: return WeierstrassTransform{};
    case 2: return QuarticTransform{};
    case 3: return CubicTransform{};
    case 4: return QuadricPairTransform{};
    case 5: return PfaffianTransform{};
    default: throw InvalidInput("degree must be 1..5, got " + std::to_string(degree));
    }
}

void validate(const Transformation& g) {
    std::visit(overloaded{
                   [](const WeierstrassTransform& t) { require_nonzero(t.u, "u"); },
                   [](const QuarticTransform& t) {
                       require_shape(t.B, 2, "B");
                       require_nonzero(t.mu * determinant(t.B), "mu det B");
                   },
                   [](const CubicTransform& t) {
                       require_shape(t.B, 3, "B");
                       require_nonzero(t.mu * determinant(t.B), "mu det B");
                   },
                   [](const QuadricPairTransform& t) {
                       require_shape(t.A, 2, "A");
                       require_shape(t.B, 4, "B");
                       require_nonzero(determinant(t.A) * determinant(t.B), "det A det B");
                   },
                   [](const PfaffianTransform& t) {
                       require_shape(t.A, 5, "A");
                       require_shape(t.B, 5, "B");
                       require_nonzero(determinant(t.A) * determinant(t.B), "det A det B");
                   },
               },
               g);
}

Rational det_character(const Transformation& g) {
    validate(g);
    return std::visit(overloaded{
                          [](const WeierstrassTransform& t) { return Rational(1 / t.u); },
                          [](const QuarticTransform& t) { return Rational(t.mu * determinant(t.B)); },
                          [](const CubicTransform& t) { return Rational(t.mu * determinant(t.B)); },
                          [](const QuadricPairTransform& t) {
                              return Rational(determinant(t.A) * determinant(t.B));
                          },
                          [](const PfaffianTransform& t) {
                              const Rational da = determinant(t.A);
                              return Rational(da * da * determinant(t.B));
                          },
                      },
                      g);
}

Transformation compose(const Transformation& g1, const Transformation& g2) {
    if (g1.index() != g2.index()) throw InvalidInput("cannot compose transformations of different degrees");
    validate(g1);
    validate(g2);
    switch (degree(g1)) {
    case 1: {
        const auto& a = std::get<WeierstrassTransform>(g1);
        const auto& b = std::get<WeierstrassTransform>(g2);
        return WeierstrassTransform{a.u * b.u, b.u * b.u * a.r + b.r, b.u * a.s + b.s,
                                    b.u * b.u * b.u * a.t + b.u * b.u * b.s * a.r + b.t};
    }
    case 2: {
        const auto& a = std::get<QuarticTransform>(g1);
        const auto& b = std::get<QuarticTransform>(g2);
        // r = mu2^-1 r1 + r2((x, z) B1)
        static const VarSet v = make_vars({"x", "z"});
        const auto xz = linear_substitution(a.B, v);
        const MultiPoly r2 = b.r[0] * xz[0] * xz[0] + b.r[1] * xz[0] * xz[1] + b.r[2] * xz[1] * xz[1];
        QuarticTransform out;
        out.mu = a.mu * b.mu;
        out.B = a.B * b.B;
        out.r = {a.r[0] / b.mu + r2.coefficient({2, 0}), a.r[1] / b.mu + r2.coefficient({1, 1}),
                 a.r[2] / b.mu + r2.coefficient({0, 2})};
        return out;
    }
    case 3: {
        const auto& a = std::get<CubicTransform>(g1);
        const auto& b = std::get<CubicTransform>(g2);
        return CubicTransform{a.mu * b.mu, a.B * b.B};
    }
    case 4: {
        const auto& a = std::get<QuadricPairTransform>(g1);
        const auto& b = std::get<QuadricPairTransform>(g2);
        return QuadricPairTransform{a.A * b.A, a.B * b.B};
    }
    default: {
        const auto& a = std::get<PfaffianTransform>(g1);
        const auto& b = std::get<PfaffianTransform>(g2);
        return PfaffianTransform{a.A * b.A, a.B * b.B};
    }
    }
}

bool operator==(const Transformation& a, const Transformation& b) {
    if (a.index() != b.index()) return false;
    return std::visit(
        overloaded{
            [&](const WeierstrassTransform& t) {
                const auto& o = std::get<WeierstrassTransform>(b);
                return t.u == o.u && t.r == o.r && t.s == o.s && t.t == o.t;
            },
            [&](const QuarticTransform& t) {
                const auto& o = std::get<QuarticTransform>(b);
                return t.mu == o.mu && t.r == o.r && t.B == o.B;
            },
            [&](const CubicTransform& t) {
                const auto& o = std::get<CubicTransform>(b);
                return t.mu == o.mu && t.B == o.B;
            },
            [&](const QuadricPairTransform& t) {
                const auto& o = std::get<QuadricPairTransform>(b);
                return t.A == o.A && t.B == o.B;
            },
            [&](const PfaffianTransform& t) {
                const auto& o = std::get<PfaffianTransform>(b);
                return t.A == o.A && t.B == o.B;
            },
        },
        a);
}

namespace {

WeierstrassModel apply_deg1(const WeierstrassTransform& g, const WeierstrassModel& m) {
    // Affine equation F(x, y) = y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6.
    static const VarSet v = make_vars({"x", "y"});
    const MultiPoly x = var(v, "x"), y = var(v, "y");
    const auto& a = m.a;
    const MultiPoly f = y * y + a[0] * x * y + a[2] * y - x * x * x - a[1] * x * x - a[3] * x - a[4];
    const std::array<MultiPoly, 2> images{g.u * g.u * x + g.r, g.u * g.u * g.u * y + g.u * g.u * g.s * x + g.t};
    const MultiPoly h = substitute(f, images) * pow(g.u, -6);
    if (h.coefficient({0, 2}) != 1 || h.coefficient({3, 0}) != -1) {
        throw InternalError("Weierstrass substitution lost its normal form");
    }
    WeierstrassModel out;
    out.a = {h.coefficient({1, 1}), -h.coefficient({2, 0}), h.coefficient({0, 1}), -h.coefficient({1, 0}),
             -h.coefficient({0, 0})};
    return out;
}

QuarticModel apply_deg2(const QuarticTransform& g, const QuarticModel& m) {
    const VarSet& v = binary_vars(); // x, z, y
    const MultiPoly x = var(v, "x"), z = var(v, "z"), y = var(v, "y");
    const MultiPoly f = equations(m).front();
    const MultiPoly r = g.r[0] * x * x + g.r[1] * x * z + g.r[2] * z * z;
    const std::array<MultiPoly, 3> images{g.B(0, 0) * x + g.B(1, 0) * z, g.B(0, 1) * x + g.B(1, 1) * z,
                                          (1 / g.mu) * y + r};
    const MultiPoly h = substitute(f, images) * (g.mu * g.mu);
    if (coefficient_of(h, "y", 2) != MultiPoly::constant(v, 1)) {
        throw InternalError("quartic substitution lost its normal form");
    }
    QuarticModel out;
    const auto p = binary_coefficients(coefficient_of(h, "y", 1), 2);
    const auto q = binary_coefficients(-coefficient_of(h, "y", 0), 4);
    std::copy(p.begin(), p.end(), out.p.begin());
    std::copy(q.begin(), q.end(), out.q.begin());
    return out;
}

} // namespace

GenusOneModel apply(const Transformation& g, const GenusOneModel& m) {
    if (degree(g) != degree(m)) {
        throw InvalidInput("transformation of degree " + std::to_string(degree(g)) +
                           " applied to a model of degree " + std::to_string(degree(m)));
    }
    validate(g);
    switch (degree(m)) {
    case 1: return apply_deg1(std::get<WeierstrassTransform>(g), std::get<WeierstrassModel>(m));
    case 2: return apply_deg2(std::get<QuarticTransform>(g), std::get<QuarticModel>(m));
    case 3: {
        const auto& t = std::get<CubicTransform>(g);
        const auto images = linear_substitution(t.B, ternary_vars());
        return cubic_from_form(substitute(cubic_form(std::get<CubicModel>(m)), images) * t.mu);
    }
    case 4: {
        const auto& t = std::get<QuadricPairTransform>(g);
        const auto images = linear_substitution(t.B, quaternary_vars());
        const auto q = quadrics(std::get<QuadricPairModel>(m));
        const MultiPoly s1 = substitute(q[0], images), s2 = substitute(q[1], images);
        return quadric_pair_from_forms(t.A(0, 0) * s1 + t.A(0, 1) * s2, t.A(1, 0) * s1 + t.A(1, 1) * s2);
    }
    default: {
        const auto& t = std::get<PfaffianTransform>(g);
        const auto images = linear_substitution(t.B, quinary_vars());
        PolyMatrix phi = pfaffian_matrix(std::get<PfaffianModel>(m));
        for (Eigen::Index i = 0; i < 5; ++i) {
            for (Eigen::Index j = 0; j < 5; ++j) phi(i, j) = substitute(phi(i, j), images);
        }
        const PolyMatrix a = to_poly_matrix(t.A);
        return pfaffian_model_from_matrix(multiply(multiply(a, phi), a.transpose()));
    }
    }
}

// ---------------------------------------------------------------------------

GenusOneModel weierstrass_model(const WeierstrassModel& w, int n) {
    const auto& [a1, a2, a3, a4, a6] = w.a;
    switch (n) {
    case 1: return w;
    case 2: return QuarticModel{{0, a1, a3}, {0, 1, a2, a4, a6}};
    case 3: {
        // y^2 z + a1 xyz + a3 yz^2 - x^3 - a2 x^2 z - a4 xz^2 - a6 z^3
        CubicModel c;
        c.c = {-1, 0, -a6, 0, -a2, 0, 1, -a4, a3, a1};
        return c;
    }
    case 4: {
        QuadricPairModel q;
        // x1^2, x1x2, x1x3, x1x4, x2^2, x2x3, x2x4, x3^2, x3x4, x4^2
        q.q1 = {0, 0, 0, 1, -1, 0, 0, 0, 0, 0};
        q.q2 = {-a6, -a4, a3, 0, -a2, a1, -1, 1, 0, 0};
        return q;
    }
    case 5: {
        PfaffianModel p;
        auto set = [&](int i, int j, std::array<Rational, 5> c) { p.upper[upper_index(i - 1, j - 1)] = c; };
        set(1, 2, {-a6, -a4, a3, -a2, a1}); // l = a1 x5 - a2 x4 + a3 x3 - a4 x2 - a6 x1
        set(1, 3, {0, 0, 0, 0, 1});
        set(1, 4, {0, 0, 0, 1, 0});
        set(1, 5, {0, 0, 1, 0, 0});
        set(2, 3, {0, 0, 0, 1, 0});
        set(2, 4, {0, 0, 1, 0, 0});
        set(2, 5, {0, 1, 0, 0, 0});
        set(3, 4, {0, -1, 0, 0, 0});
        set(3, 5, {0, 0, 0, 0, 0});
        set(4, 5, {1, 0, 0, 0, 0});
        return p;
    }
    default: throw InvalidInput("Weierstrass models exist for degree 1..5, got " + std::to_string(n));
    }
}

Transformation gamma(const WeierstrassTransform& g, int n) {
    validate(g);
    const Rational& u = g.u;
    const Rational& r = g.r;
    const Rational& s = g.s;
    const Rational& t = g.t;
    switch (n) {
    case 1: return g;
    case 2: {
        QuarticTransform out;
        out.mu = pow(u, -3);
        out.r = {0, u * u * s, t};
        out.B = RatMatrix(2, 2);
        out.B << u * u, 0, r, 1;
        return out;
    }
    case 3: {
        CubicTransform out;
        out.mu = pow(u, -6);
        out.B = RatMatrix(3, 3);
        out.B << u * u, u * u * s, 0, 0, pow(u, 3), 0, r, t, 1;
        return out;
    }
    case 4: {
        QuadricPairTransform out;
        out.A = RatMatrix(2, 2);
        out.A << pow(u, -4), 0, pow(u, -6) * r, pow(u, -6);
        out.B = RatMatrix(4, 4);
        out.B << 1, r, t, r * r, 0, u * u, u * u * s, 2 * u * u * r, 0, 0, pow(u, 3), 0, 0, 0, 0, pow(u, 4);
        return out;
    }
    case 5: {
        PfaffianTransform out;
        out.A = RatMatrix(5, 5);
        out.A << 1, -s, 2 * r - s * s, r * s - t, -r * r + r * s * s - s * t,
                 0, u, 2 * u * s, -u * r, u * (-2 * r * s + t),
                 0, 0, u * u, 0, -u * u * r,
                 0, 0, 0, pow(u, 3), pow(u, 3) * s,
                 0, 0, 0, 0, pow(u, 4);
        out.A *= pow(u, -2);
        out.B = RatMatrix(5, 5);
        out.B << 1, r, t, r * r, r * t,
                 0, u * u, u * u * s, 2 * u * u * r, u * u * (r * s + t),
                 0, 0, pow(u, 3), 0, pow(u, 3) * r,
                 0, 0, 0, pow(u, 4), pow(u, 4) * s,
                 0, 0, 0, 0, pow(u, 5);
        out.B *= pow(u, -3);
        return out;
    }
    default: throw InvalidInput("gamma is defined for degree 1..5, got " + std::to_string(n));
    }
}

} // namespace g1inv
