#include "g1inv/cli.hpp"

#include "g1inv/errors.hpp"
#include "g1inv/invariants.hpp"
#include "g1inv/model_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace g1inv::cli {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void require_degree(const GenusOneModel& m, int lo, int hi, const std::string& verb) {
    const int n = degree(m);
    if (n < lo || n > hi) {
        throw InvalidInput(verb + " does not support models of degree " + std::to_string(n));
    }
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> point;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) point.push_back(parse_rational(item));
    if (point.size() != 5) throw InvalidInput("--point needs 5 comma-separated coordinates");
    return point;
}

void print_triple(std::ostream& out, const InvariantTriple& t) {
    out << "c4 = " << to_string(t.c4) << "\n";
    out << "c6 = " << to_string(t.c6) << "\n";
    out << "Delta = " << to_string(t.disc) << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of genus one models of degree 1 to 5", "g1inv"};
    app.require_subcommand(1);

    std::string path = "-";
    auto add_model = [&path](CLI::App* sub) {
        sub->add_option("model", path, "model file, or - for standard input")->required();
    };

    auto* inv = app.add_subcommand("invariants", "print c4, c6 and Delta");
    add_model(inv);
    auto* jac = app.add_subcommand("jacobian", "print the Weierstrass coefficients of the Jacobian");
    add_model(jac);
    auto* jinv = app.add_subcommand("j", "print the j-invariant");
    add_model(jinv);
    auto* pf = app.add_subcommand("pfaffians", "print the submaximal Pfaffians of a degree-5 model");
    add_model(pf);

    auto* tr = app.add_subcommand("transform", "apply a transformation and print the new model");
    add_model(tr);
    std::string by, by_file;
    auto* by_opt = tr->add_option("--by", by, "transformation as JSON");
    auto* by_file_opt = tr->add_option("--by-file", by_file, "file holding the transformation");
    by_opt->excludes(by_file_opt);

    auto* ws = app.add_subcommand("weierstrass", "print the degree-n model of a Weierstrass equation");
    std::vector<std::string> coeffs;
    int target_degree = 1;
    ws->add_option("coefficients", coeffs, "a1 a2 a3 a4 a6")->required()->expected(5);
    ws->add_option("--degree", target_degree, "degree 1 to 5")->check(CLI::Range(1, 5));

    auto* pr = app.add_subcommand("project", "project a degree-5 model from a rational point on it");
    add_model(pr);
    std::string point_text;
    pr->add_option("--point", point_text, "x1,x2,x3,x4,x5")->required();

    auto* disc = app.add_subcommand("discriminant", "print Delta");
    add_model(disc);
    std::string method = "formula";
    disc->add_option("--method", method, "formula or matrix")
        ->check(CLI::IsMember({"formula", "matrix"}));

    auto* a1 = app.add_subcommand("a1-char2", "print the weight-one invariant mod 2");
    add_model(a1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    }

    try {
        if (*ws) {
            WeierstrassModel w;
            for (std::size_t i = 0; i < 5; ++i) w.a[i] = parse_rational(coeffs[i]);
            out << dump_model(weierstrass_model(w, target_degree));
            return kOk;
        }

        const GenusOneModel model = parse_model(slurp(path, in));

        if (*inv) {
            print_triple(out, invariants(model));
        } else if (*jac) {
            const WeierstrassModel e = jacobian(model);
            static const char* const labels[] = {"a1", "a2", "a3", "a4", "a6"};
            for (std::size_t i = 0; i < 5; ++i) out << labels[i] << " = " << to_string(e.a[i]) << "\n";
        } else if (*jinv) {
            out << "j = " << to_string(j_invariant(model)) << "\n";
        } else if (*pf) {
            require_degree(model, 5, 5, "pfaffians");
            const auto p = pfaffians(std::get<PfaffianModel>(model));
            for (std::size_t i = 0; i < 5; ++i) out << "p" << i + 1 << " = " << to_string(p[i]) << "\n";
        } else if (*tr) {
            if (by.empty() && by_file.empty()) throw InvalidInput("transform needs --by or --by-file");
            const Transformation g = parse_transformation(by.empty() ? slurp(by_file, in) : by);
            if (degree(g) != degree(model)) throw InvalidInput("transformation and model degrees differ");
            out << dump_model(apply(g, model));
        } else if (*pr) {
            require_degree(model, 5, 5, "project");
            const auto point = parse_point(point_text);
            out << dump_model(project_from_point(std::get<PfaffianModel>(model), point));
        } else if (*disc) {
            if (method == "matrix") {
                require_degree(model, 3, 5, "discriminant --method matrix");
                out << "Delta = " << to_string(discriminant_by_matrix(model)) << "\n";
            } else {
                out << "Delta = " << to_string(invariants(model).disc) << "\n";
            }
        } else if (*a1) {
            out << "a1 = " << a1_char2(model) << "\n";
        }
        return kOk;
    } catch (const SingularModel& e) {
        err << "error: " << e.what() << "\n";
        return kSingular;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kMalformed;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace g1inv::cli
