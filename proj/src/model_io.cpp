#include "g1inv/model_io.hpp"

#include "g1inv/errors.hpp"

namespace g1inv {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw InvalidInput("expected a rational written as a string, got " + j.dump());
}

template <std::size_t N>
std::array<Rational, N> rational_array(const json& j, const char* what) {
    if (!j.is_array() || j.size() != N) {
        throw InvalidInput(std::string(what) + " must be an array of " + std::to_string(N) + " rationals");
    }
    std::array<Rational, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = rational_from_json(j[i]);
    return out;
}

RatMatrix matrix_from_json(const json& j, Eigen::Index n, const char* what) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
        throw InvalidInput(std::string(what) + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    }
    RatMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
            throw InvalidInput(std::string(what) + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
        }
        for (Eigen::Index k = 0; k < n; ++k) m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)]);
    }
    return m;
}

template <class Range>
json strings(const Range& values) {
    json out = json::array();
    for (const Rational& v : values) out.push_back(to_string(v));
    return out;
}

json matrix_to_json(const RatMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
        out.push_back(std::move(row));
    }
    return out;
}

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
    return obj.at(key);
}

int read_degree(const json& doc) {
    const json& d = field(doc, "degree");
    if (!d.is_number_integer()) throw InvalidInput("'degree' must be an integer");
    const int n = d.get<int>();
    if (n < 1 || n > 5) throw InvalidInput("'degree' must be between 1 and 5, got " + std::to_string(n));
    return n;
}

json parse_json(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace

GenusOneModel model_from_json(const json& doc) {
    const int n = read_degree(doc);
    const json& c = field(doc, "coefficients");
    switch (n) {
    case 1: return WeierstrassModel{rational_array<5>(c, "degree-1 coefficients")};
    case 2: return QuarticModel{rational_array<3>(field(c, "p"), "p"), rational_array<5>(field(c, "q"), "q")};
    case 3: return CubicModel{rational_array<10>(c, "degree-3 coefficients")};
    case 4: return QuadricPairModel{rational_array<10>(field(c, "q1"), "q1"), rational_array<10>(field(c, "q2"), "q2")};
    default: {
        const json& entries = field(c, "matrix");
        if (!entries.is_array() || entries.size() != 10) {
            throw InvalidInput("'matrix' must list the 10 upper-triangle entries");
        }
        PfaffianModel m;
        for (std::size_t k = 0; k < 10; ++k) m.upper[k] = rational_array<5>(entries[k], "matrix entry");
        return m;
    }
    }
}

json model_to_json(const GenusOneModel& model) {
    json doc;
    doc["degree"] = degree(model);
    switch (degree(model)) {
    case 1: doc["coefficients"] = strings(std::get<WeierstrassModel>(model).a); break;
    case 2: {
        const auto& m = std::get<QuarticModel>(model);
        doc["coefficients"] = {{"p", strings(m.p)}, {"q", strings(m.q)}};
        break;
    }
    case 3: doc["coefficients"] = strings(std::get<CubicModel>(model).c); break;
    case 4: {
        const auto& m = std::get<QuadricPairModel>(model);
        doc["coefficients"] = {{"q1", strings(m.q1)}, {"q2", strings(m.q2)}};
        break;
    }
    default: {
        json entries = json::array();
        for (const auto& e : std::get<PfaffianModel>(model).upper) entries.push_back(strings(e));
        doc["coefficients"] = {{"matrix", std::move(entries)}};
        break;
    }
    }
    return doc;
}

GenusOneModel parse_model(std::string_view text) { return model_from_json(parse_json(text)); }

std::string dump_model(const GenusOneModel& m) { return model_to_json(m).dump(2) + "\n"; }

Transformation transformation_from_json(const json& doc) {
    const int n = read_degree(doc);
    const json& c = field(doc, "coefficients");
    Transformation g;
    switch (n) {
    case 1: {
        const auto v = rational_array<4>(c, "degree-1 transformation");
        g = WeierstrassTransform{v[0], v[1], v[2], v[3]};
        break;
    }
    case 2:
        g = QuarticTransform{rational_from_json(field(c, "mu")), rational_array<3>(field(c, "r"), "r"),
                             matrix_from_json(field(c, "B"), 2, "B")};
        break;
    case 3: g = CubicTransform{rational_from_json(field(c, "mu")), matrix_from_json(field(c, "B"), 3, "B")}; break;
    case 4:
        g = QuadricPairTransform{matrix_from_json(field(c, "A"), 2, "A"), matrix_from_json(field(c, "B"), 4, "B")};
        break;
    default:
        g = PfaffianTransform{matrix_from_json(field(c, "A"), 5, "A"), matrix_from_json(field(c, "B"), 5, "B")};
        break;
    }
    validate(g);
    return g;
}

json transformation_to_json(const Transformation& g) {
    json doc;
    doc["degree"] = degree(g);
    switch (degree(g)) {
    case 1: {
        const auto& t = std::get<WeierstrassTransform>(g);
        doc["coefficients"] = strings(std::array<Rational, 4>{t.u, t.r, t.s, t.t});
        break;
    }
    case 2: {
        const auto& t = std::get<QuarticTransform>(g);
        doc["coefficients"] = {{"mu", to_string(t.mu)}, {"r", strings(t.r)}, {"B", matrix_to_json(t.B)}};
        break;
    }
    case 3: {
        const auto& t = std::get<CubicTransform>(g);
        doc["coefficients"] = {{"mu", to_string(t.mu)}, {"B", matrix_to_json(t.B)}};
        break;
    }
    case 4: {
        const auto& t = std::get<QuadricPairTransform>(g);
        doc["coefficients"] = {{"A", matrix_to_json(t.A)}, {"B", matrix_to_json(t.B)}};
        break;
    }
    default: {
        const auto& t = std::get<PfaffianTransform>(g);
        doc["coefficients"] = {{"A", matrix_to_json(t.A)}, {"B", matrix_to_json(t.B)}};
        break;
    }
    }
    return doc;
}

Transformation parse_transformation(std::string_view text) { return transformation_from_json(parse_json(text)); }

} // namespace g1inv
