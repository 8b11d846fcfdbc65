#include "g1inv/polynomial.hpp"

#include "g1inv/errors.hpp"

#include <algorithm>
#include <numeric>

namespace g1inv {

VarSet make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    const auto da = std::accumulate(a.begin(), a.end(), 0u);
    const auto db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

bool same_ring(const VarSet& a, const VarSet& b) {
    return a == b || (a && b && *a == *b);
}

Exponent zero_exponent(std::size_t n) { return Exponent(n, 0u); }

} // namespace

MultiPoly::MultiPoly(int c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponent{}, c);
}

MultiPoly::MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(VarSet vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(zero_exponent(p.num_vars()), c);
    return p;
}

MultiPoly MultiPoly::variable(VarSet vars, std::string_view name) {
    MultiPoly p(vars);
    Exponent e = zero_exponent(p.num_vars());
    e[var_index(vars, name)] = 1;
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::term(VarSet vars, Exponent e, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.num_vars()) {
        throw InvalidInput("exponent length does not match the ring");
    }
    p.add_term(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) {
        throw InvalidInput("polynomial is not constant: " + to_string(*this));
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.begin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

bool MultiPoly::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
        return static_cast<int>(std::accumulate(t.first.begin(), t.first.end(), 0u)) == d;
    });
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::adopt_ring(const VarSet& vars) {
    if (same_ring(vars_, vars)) return;
    if (vars_) throw InvalidInput("polynomial already belongs to another ring");
    TermMap moved;
    for (auto& [e, c] : terms_) moved.emplace(zero_exponent(vars ? vars->size() : 0), c);
    terms_ = std::move(moved);
    vars_ = vars;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (!same_ring(vars_, o.vars_)) {
        if (!o.vars_) {
            if (!o.is_zero()) add_term(zero_exponent(num_vars()), o.constant_value());
            return *this;
        }
        if (vars_) throw InvalidInput("polynomials belong to different rings");
        adopt_ring(o.vars_);
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly lhs = a;
    MultiPoly rhs = b;
    if (!same_ring(lhs.vars(), rhs.vars())) {
        if (!lhs.vars()) lhs.adopt_ring(rhs.vars());
        else if (!rhs.vars()) rhs.adopt_ring(lhs.vars());
        else throw InvalidInput("polynomials belong to different rings");
    }
    MultiPoly r(lhs.vars());
    const std::size_t n = lhs.num_vars();
    Exponent e(n);
    for (const auto& [ea, ca] : lhs.terms()) {
        for (const auto& [eb, cb] : rhs.terms()) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (same_ring(a.vars(), b.vars())) return a.terms_ == b.terms_;
    if (a.vars() && b.vars()) return false;
    return (a - b).is_zero();
}

std::size_t var_index(const VarSet& vars, std::string_view name) {
    if (vars) {
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it != vars->end()) return static_cast<std::size_t>(it - vars->begin());
    }
    throw InvalidInput("unknown variable '" + std::string(name) + "'");
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) {
    const std::size_t k = var_index(p.vars(), var);
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) continue;
        Exponent d = e;
        --d[k];
        r.add_term(d, c * e[k]);
    }
    return r;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& num, const MultiPoly& den) {
    if (den.is_zero()) throw InvalidInput("division by the zero polynomial");
    MultiPoly rem = num;
    MultiPoly d = den;
    if (!same_ring(rem.vars(), d.vars())) {
        if (!rem.vars()) rem.adopt_ring(d.vars());
        else if (!d.vars()) d.adopt_ring(rem.vars());
        else throw InvalidInput("polynomials belong to different rings");
    }
    const auto& [lead_e, lead_c] = *d.terms().begin();
    const std::size_t n = d.num_vars();
    MultiPoly quotient(d.vars());
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().begin();
        Exponent qe(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (re[i] < lead_e[i]) return std::nullopt;
            qe[i] = re[i] - lead_e[i];
        }
        MultiPoly t = MultiPoly::term(d.vars(), qe, rc / lead_c);
        quotient += t;
        rem -= t * d;
    }
    return quotient;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
    MultiPoly result = MultiPoly::constant(p.vars(), 1);
    MultiPoly base = p;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
    if (p.vars() && point.size() != p.num_vars()) {
        throw InvalidInput("evaluation point has the wrong dimension");
    }
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] != 0) t *= pow(point[i], static_cast<int>(e[i]));
        }
        total += t;
    }
    return total;
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
    const std::size_t n = p.num_vars();
    if (p.vars() && images.size() != n) {
        throw InvalidInput("substitution needs one image per variable");
    }
    // powers[i][k] = images[i]^k, filled lazily
    std::vector<std::vector<MultiPoly>> powers(n);
    MultiPoly result;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly t(c);
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(MultiPoly(1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
            t *= pw[e[i]];
        }
        result += t;
    }
    return result;
}

MultiPoly change_ring(const MultiPoly& p, const VarSet& target) {
    if (same_ring(p.vars(), target)) {
        MultiPoly r = p;
        r.adopt_ring(target);
        return r;
    }
    MultiPoly r(target);
    if (!p.vars()) {
        if (!p.is_zero()) r.add_term(zero_exponent(r.num_vars()), p.constant_value());
        return r;
    }
    std::vector<std::optional<std::size_t>> map(p.num_vars());
    for (std::size_t i = 0; i < p.num_vars(); ++i) {
        auto it = std::find(target->begin(), target->end(), (*p.vars())[i]);
        if (it != target->end()) map[i] = static_cast<std::size_t>(it - target->begin());
    }
    for (const auto& [e, c] : p.terms()) {
        Exponent f = zero_exponent(r.num_vars());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!map[i]) {
                throw InvalidInput("variable '" + (*p.vars())[i] + "' missing from target ring");
            }
            f[*map[i]] = e[i];
        }
        r.add_term(f, c);
    }
    return r;
}

MultiPoly coefficient_of(const MultiPoly& p, std::string_view var, unsigned k) {
    const std::size_t idx = var_index(p.vars(), var);
    MultiPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[idx] != k) continue;
        Exponent f = e;
        f[idx] = 0;
        r.add_term(f, c);
    }
    return r;
}

int degree_in(const MultiPoly& p, std::string_view var) {
    if (p.is_zero()) return -1;
    const std::size_t idx = var_index(p.vars(), var);
    int d = 0;
    for (const auto& [e, c] : p.terms()) d = std::max(d, static_cast<int>(e[idx]));
    return d;
}

namespace {

void fill_monomials(std::size_t pos, unsigned remaining, Exponent& cur, std::vector<Exponent>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
        cur[pos] = k;
        fill_monomials(pos + 1, remaining - k, cur, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<Exponent> monomials(std::size_t n, unsigned d) {
    std::vector<Exponent> out;
    if (n == 0) {
        if (d == 0) out.emplace_back();
        return out;
    }
    Exponent cur(n, 0u);
    fill_monomials(0, d, cur, out);
    return out;
}

std::vector<Rational> coefficient_vector(const MultiPoly& p, unsigned d) {
    if (!p.is_homogeneous(static_cast<int>(d))) {
        throw InvalidInput("expected a form of degree " + std::to_string(d) + ": " + to_string(p));
    }
    const auto basis = monomials(p.num_vars(), d);
    std::vector<Rational> out;
    out.reserve(basis.size());
    for (const auto& e : basis) out.push_back(p.coefficient(e));
    return out;
}

MultiPoly from_coefficients(const VarSet& vars, unsigned d, std::span<const Rational> coeffs) {
    const auto basis = monomials(vars->size(), d);
    if (coeffs.size() != basis.size()) {
        throw InvalidInput("expected " + std::to_string(basis.size()) + " coefficients, got " +
                           std::to_string(coeffs.size()));
    }
    MultiPoly p(vars);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coeffs[i]);
    return p;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string monomial;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += (*p.vars())[i];
            if (e[i] > 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            out += to_string(mag);
        } else if (mag == 1) {
            out += monomial;
        } else {
            out += to_string(mag) + "*" + monomial;
        }
    }
    return out;
}

} // namespace g1inv
