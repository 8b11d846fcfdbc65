// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include "g1inv/invariants.hpp"
#include "g1inv/model_io.hpp"

#include "support.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace g1inv;
using namespace g1inv::testing;

namespace {

// Every degree-5 model evaluated below, for the internal-check criterion.
std::vector<PfaffianModel> g_quintics;

InvariantTriple tracked_invariants(const GenusOneModel& m) {
    if (const auto* p = std::get_if<PfaffianModel>(&m)) g_quintics.push_back(*p);
    return invariants(m);
}

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

struct Outcome {
    bool ok;
    std::string detail;
};

Outcome golden_example() {
    const auto start = std::chrono::steady_clock::now();
    const GenusOneModel m = parse_model(read_file(std::string(G1INV_TEST_DATA) + "/wuthrich.json"));
    const InvariantTriple t = tracked_invariants(m);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const Rational c4 = Rational(Integer(1) << 44) * 151009;
    const Rational c6 = -Rational(Integer(1) << 66) * 34871057;
    const bool ok = t.c4 == c4 && t.c6 == c6 && t.disc == (c4 * c4 * c4 - c6 * c6) / 1728 && seconds < 60;
    return {ok, "c4 = " + to_string(t.c4) + ", c6 = " + to_string(t.c6) + ", " + std::to_string(seconds) + " s"};
}

Outcome weierstrass_restriction() {
    Rng rng(1001);
    for (int round = 0; round < 50; ++round) {
        const WeierstrassModel w = random_weierstrass(rng, 5);
        const InvariantTriple expected = invariants_deg1(w);
        for (int n = 2; n <= 5; ++n) {
            if (tracked_invariants(weierstrass_model(w, n)) != expected) {
                return {false, "degree " + std::to_string(n) + " differs on tuple " + std::to_string(round)};
            }
        }
    }
    return {true, "50 tuples, degrees 2..5"};
}

Outcome weight_covariance() {
    Rng rng(1002);
    for (int n = 1; n <= 5; ++n) {
        for (int round = 0; round < 20; ++round) {
            const GenusOneModel m = random_model(rng, n, 2);
            const Transformation g = random_transformation(rng, n);
            const Rational d = det_character(g);
            const InvariantTriple a = tracked_invariants(m);
            const InvariantTriple b = tracked_invariants(g1inv::apply(g, m));
            if (b.c4 != pow(d, 4) * a.c4 || b.c6 != pow(d, 6) * a.c6 || b.disc != pow(d, 12) * a.disc) {
                return {false, "degree " + std::to_string(n) + " pair " + std::to_string(round)};
            }
        }
    }
    return {true, "20 pairs per degree 1..5"};
}

Outcome hessian_syzygy() {
    Rng rng(1003);
    const VarSet ring = make_vars({"x", "y", "z", "lambda", "mu"});
    const MultiPoly l = MultiPoly::variable(ring, "lambda");
    const MultiPoly mu = MultiPoly::variable(ring, "mu");
    for (int round = 0; round < 20; ++round) {
        const auto cubic = std::get<CubicModel>(random_model(rng, 3, 4));
        const InvariantTriple t = invariants_deg3(cubic);
        const MultiPoly u = change_ring(cubic_form(cubic), ring);
        const MultiPoly h = hessian(u);
        const MultiPoly lhs = hessian(l * u + mu * h);
        const MultiPoly rhs = 3 * (t.c4 * l * l * mu + 2 * t.c6 * l * mu * mu + t.c4 * t.c4 * pow(mu, 3)) * u +
                              (pow(l, 3) - 3 * t.c4 * l * mu * mu - 2 * t.c6 * pow(mu, 3)) * h;
        if (lhs != rhs) return {false, "cubic " + std::to_string(round)};
    }
    return {true, "20 cubics"};
}

Outcome cross_method_discriminants() {
    Rng rng(1004);
    for (int n = 3; n <= 5; ++n) {
        for (int round = 0; round < 20; ++round) {
            const GenusOneModel m = random_smooth_model(rng, n, n == 5 ? 2 : 3);
            const Rational disc = tracked_invariants(m).disc;
            Rational det, expected;
            switch (n) {
            case 3:
                det = discriminant_deg3_matrix(std::get<CubicModel>(m));
                expected = kDiscriminantSign3 * 1728 * disc;
                break;
            case 4:
                det = discriminant_deg4_matrix(std::get<QuadricPairModel>(m));
                expected = kDiscriminantSign4 * 16 * disc;
                break;
            default:
                det = discriminant_deg5_matrix(std::get<PfaffianModel>(m));
                expected = kDiscriminantSign5 * 32 * disc;
                break;
            }
            if (det != expected) return {false, "degree " + std::to_string(n) + " model " + std::to_string(round)};
        }
    }
    return {true, "signs " + std::to_string(kDiscriminantSign3) + ", " + std::to_string(kDiscriminantSign4) + ", " +
                      std::to_string(kDiscriminantSign5)};
}

Outcome internal_checks() {
    for (std::size_t i = 0; i < g_quintics.size(); ++i) {
        if (!deg5_internal_checks(g_quintics[i])) return {false, "model " + std::to_string(i)};
    }
    return {!g_quintics.empty(), std::to_string(g_quintics.size()) + " degree-5 models"};
}

Outcome smoothness_criterion() {
    for (int n = 1; n <= 5; ++n) {
        if (tracked_invariants(weierstrass_model({{0, 0, 0, -3, 2}}, n)).disc != 0) {
            return {false, "nodal cubic, degree " + std::to_string(n)};
        }
        if (tracked_invariants(weierstrass_model({{0, 0, 0, -1, 0}}, n)).disc != 64) {
            return {false, "y^2 = x^3 - x, degree " + std::to_string(n)};
        }
    }
    return {true, "degrees 1..5"};
}

Outcome projection() {
    Rng rng(1008);
    const std::vector<Rational> point = {0, 0, 0, 0, 1};
    for (int found = 0; found < 10;) {
        const WeierstrassModel w{{0, 0, 0, rng.uniform(-9, 9), rng.uniform(-9, 9)}};
        const InvariantTriple t = invariants_deg1(w);
        if (t.disc == 0) continue;
        const auto p5 = std::get<PfaffianModel>(weierstrass_model(w, 5));
        g_quintics.push_back(p5);
        const QuadricPairModel q = project_from_point(p5, point);
        if (j_invariant(q) != t.c4 * t.c4 * t.c4 / t.disc) return {false, "A = " + to_string(w.a[3]) + ", B = " + to_string(w.a[4])};
        ++found;
    }
    return {true, "10 curves"};
}

Outcome char2_invariants() {
    Rng rng(1009);
    for (int round = 0; round < 20; ++round) {
        const WeierstrassModel w = random_weierstrass(rng, 5);
        for (int n = 2; n <= 5; ++n) {
            if (a1_char2(weierstrass_model(w, n)) != mod2(w.a[0])) {
                return {false, "degree " + std::to_string(n) + " tuple " + std::to_string(round)};
            }
        }
    }
    return {true, "20 tuples, degrees 2..5"};
}

Outcome integrality() {
    Rng rng(1010);
    for (int round = 0; round < 50; ++round) {
        const int n = round % 5 + 1;
        const InvariantTriple t = tracked_invariants(random_model(rng, n, 3));
        if (!is_integer(t.c4) || !is_integer(t.c6) || !is_integer(t.disc)) {
            return {false, "degree " + std::to_string(n) + " model " + std::to_string(round)};
        }
    }
    return {true, "50 models, 10 per degree"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden Wuthrich example", golden_example},
        {"Weierstrass restriction", weierstrass_restriction},
        {"weight covariance", weight_covariance},
        {"Hessian syzygy", hessian_syzygy},
        {"cross-method discriminants", cross_method_discriminants},
        {"smoothness criterion", smoothness_criterion},
        {"projection from a point", projection},
        {"characteristic 2 invariant", char2_invariants},
        {"integrality", integrality},
        // last, so it covers every degree-5 model evaluated above
        {"degree-5 internal checks", internal_checks},
    };
    const std::vector<int> numbers = {1, 2, 3, 4, 5, 7, 8, 9, 10, 6};

    std::vector<std::string> lines(criteria.size());
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all &= o.ok;
        lines[static_cast<std::size_t>(numbers[i] - 1)] = std::string(o.ok ? "PASS" : "FAIL") + " [" +
                                                           std::to_string(numbers[i]) + "] " + criteria[i].first +
                                                           ": " + o.detail;
    }
    for (const auto& line : lines) std::cout << line << "\n";
    return all ? 0 : 1;
}
