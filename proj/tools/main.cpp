#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cremona/errors.hpp"
#include "cremona/families.hpp"
#include "cremona/mapfile.hpp"
#include "cremona/newton.hpp"
#include "cremona/parse.hpp"
#include "cremona/report.hpp"
#include "cremona/words.hpp"

#include "corpus.hpp"

namespace cremona::cli {

namespace {

// Exit codes: 0 ok, 1 usage/parse, 2 precondition, 3 verification failure.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kPrecondition = 2;
constexpr int kVerification = 3;

struct Input {
    MapFile file;
    std::string digest;
};

Input load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw precondition_error("cannot open map file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();
    return Input{parse_map_file(bytes), fnv1a_digest(bytes)};
}

const ProjectiveMap& named_map(const Input& input, const std::string& name) {
    auto it = input.file.maps.find(name);
    if (it == input.file.maps.end())
        throw precondition_error("no map named '" + name + "' in the input file");
    return it->second;
}

const AffinePolyMap& named_affine(const Input& input, const std::string& name) {
    auto it = input.file.affine_maps.find(name);
    if (it == input.file.affine_maps.end())
        throw precondition_error("no affine map named '" + name + "' in the input file");
    return it->second;
}

IntMatrix parse_matrix_text(const std::string& text) {
    std::vector<IntVec> rows;
    std::stringstream row_stream(text);
    std::string row;
    while (std::getline(row_stream, row, ';')) {
        IntVec values;
        std::stringstream cell_stream(row);
        std::string cell;
        while (std::getline(cell_stream, cell, ',')) {
            try {
                values.push_back(std::stoll(cell));
            } catch (const std::exception&) {
                throw precondition_error("bad matrix entry '" + cell + "'");
            }
        }
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw precondition_error("empty matrix literal");
    for (const auto& r : rows)
        if (r.size() != rows.size())
            throw precondition_error("matrix literal must be square (rows 'a,b;c,d')");
    return IntMatrix::from_rows(rows);
}

std::vector<LatticePoint> parse_points_text(const std::string& text) {
    std::vector<LatticePoint> points;
    std::stringstream point_stream(text);
    std::string point;
    while (std::getline(point_stream, point, ';')) {
        LatticePoint p;
        std::stringstream cell_stream(point);
        std::string cell;
        while (std::getline(cell_stream, cell, ',')) {
            try {
                p.push_back(std::stoll(cell));
            } catch (const std::exception&) {
                throw precondition_error("bad coordinate '" + cell + "'");
            }
        }
        points.push_back(std::move(p));
    }
    return points;
}

int emit(const std::string& command, const Json& arguments, const std::string& digest,
         Json result, int code = kOk) {
    std::cout << render_report(make_report(command, arguments, digest, std::move(result)));
    return code;
}

struct Options {
    std::string file;
    std::string map_name;
    std::string inner_name;
    std::string affine_name;
    std::string inverse_name;
    std::string expr;
    std::string word;
    std::string lambdas;
    std::string image_a;
    std::string image_b;
    std::string points;
    std::string emit_dir;
    std::string corpus_dir;
    int ambient_n = -1;
    int radius = 0;
    int level = 1;
    int hyperplane = -1;
    int jobs = 1;
    long long pingpong_m = 0;
    long long grid = 20;
    bool normalize = true;
    bool raw = false;
    bool check = false;
    bool symbolic_equal = false;
    bool symbolic_generic = false;
    bool use_rho_images = false;
};

int run_parse(const Options& o) {
    if (!o.expr.empty()) {
        if (o.ambient_n < 0)
            throw precondition_error("--expr needs -n <ambient dimension>");
        const Polynomial p = parse_polynomial(o.expr, o.ambient_n);
        Json result{{"canonical", p.to_string()},
                    {"terms", static_cast<int>(p.term_count())},
                    {"zero", p.is_zero()}};
        if (auto d = p.homogeneous_degree(); d && !p.is_zero()) result["homogeneous_degree"] = *d;
        return emit("parse", Json{{"expr", o.expr}, {"n", o.ambient_n}}, fnv1a_digest(o.expr),
                    std::move(result));
    }
    const Input input = load_input(o.file);
    Json maps = Json::object();
    for (const auto& [name, map] : input.file.maps) maps[name] = json_of(map);
    Json affine = Json::object();
    for (const auto& [name, map] : input.file.affine_maps) affine[name] = json_of(map);
    return emit("parse", Json{{"file", o.file}}, input.digest,
                Json{{"ambient_n", input.file.ambient_n},
                     {"maps", maps},
                     {"affine_maps", affine}});
}

int run_compose(const Options& o) {
    const Input input = load_input(o.file);
    const auto& outer = named_map(input, o.map_name);
    const auto& inner = named_map(input, o.inner_name);
    const ProjectiveMap result = compose(outer, inner, o.normalize);
    return emit("compose",
                Json{{"file", o.file},
                     {"outer", o.map_name},
                     {"inner", o.inner_name},
                     {"normalize", o.normalize}},
                input.digest, json_of(result));
}

int run_rho(const Options& o) {
    const Input input = load_input(o.file);
    const IntMatrix m = rho(named_map(input, o.map_name));
    return emit("rho", Json{{"file", o.file}, {"map", o.map_name}}, input.digest, json_of(m));
}

int run_gform(const Options& o) {
    const Input input = load_input(o.file);
    const auto& f = named_map(input, o.map_name);
    const auto data = g_form(f);

    Json result{{"present", data.has_value()}};
    if (data) {
        result["d_f"] = data->d_f;
        result["i_f0"] = json_of(data->i_f0);
        Json cols = Json::array();
        for (const auto& col : data->i_fj) cols.push_back(json_of(col));
        result["i_fj"] = cols;
        Json alphas = Json::array();
        for (const auto& a : data->alphas) alphas.push_back(rational_to_string(a));
        result["alphas"] = alphas;
    }
    const Json args =
        Json{{"file", o.file}, {"map", o.map_name}, {"inverse", o.inverse_name}};

    if (o.inverse_name.empty())
        return emit("gform", args, input.digest, std::move(result));

    // Membership wrapper: both shapes must hold (precondition) and the pair
    // must verify (verification).
    const auto& witness = named_map(input, o.inverse_name);
    const auto witness_data = g_form(witness);
    result["inverse_present"] = witness_data.has_value();
    if (!data || !witness_data) {
        std::cout << render_report(make_error_report(
            "gform", args, input.digest, "precondition",
            "membership needs the shape test to pass on the map and the witness"));
        return kPrecondition;
    }
    const bool verified = verify_inverse_pair(f, witness);
    result["inverse_pair_verified"] = verified;
    if (!verified) {
        std::cout << render_report(make_error_report(
            "gform", args, input.digest, "verification",
            "the supplied witness is not a two-sided inverse"));
        return kVerification;
    }
    result["member"] = true;
    return emit("gform", args, input.digest, std::move(result));
}

int run_predict(const Options& o) {
    const Input input = load_input(o.file);
    const auto& f = named_map(input, o.map_name);
    const Polynomial h = parse_polynomial(o.expr, input.file.ambient_n);
    const LeadingPair predicted = predict_leading(h, f);
    Json result{{"predicted", json_of(predicted)}};
    const Json args = Json{{"file", o.file}, {"map", o.map_name}, {"poly", o.expr},
                           {"check", o.check}};
    if (o.check) {
        const LeadingPair actual = leading_pair(h.substituted(f.normalized().components()));
        result["expanded"] = json_of(actual);
        if (!(predicted == actual)) {
            std::cout << render_report(make_error_report(
                "predict-leading", args, input.digest, "verification",
                "prediction disagrees with the expansion"));
            return kVerification;
        }
        result["verified"] = true;
    }
    return emit("predict-leading", args, input.digest, std::move(result));
}

int run_newton(const Options& o) {
    if (!o.expr.empty()) {
        if (o.ambient_n < 0) throw precondition_error("--expr needs -n <ambient dimension>");
        const Polynomial p = parse_polynomial(o.expr, o.ambient_n);
        const LatticePolytope poly = newton_polytope(p);
        return emit("newton", Json{{"expr", o.expr}, {"n", o.ambient_n}}, fnv1a_digest(o.expr),
                    Json{{"polytope", json_of(poly)},
                         {"full_dimensional", is_full_dimensional(poly)},
                         {"standard_simplex", is_standard_simplex(poly)}});
    }
    const Input input = load_input(o.file);
    const auto& f = named_map(input, o.map_name);
    int den = o.hyperplane >= 0 ? o.hyperplane : 0;  // reuse flag as denominator index
    const NewtonBody body = map_newton_body(standard_system(f, den), o.level);
    return emit("newton",
                Json{{"file", o.file}, {"map", o.map_name}, {"level", o.level},
                     {"denominator", den}},
                input.digest,
                Json{{"body", json_of(body)},
                     {"standard_simplex", is_standard_simplex(body)},
                     {"normalized_volume", rational_to_string(normalized_volume(body))}});
}

int run_volume(const Options& o) {
    if (!o.points.empty()) {
        const auto points = parse_points_text(o.points);
        if (points.empty()) throw precondition_error("no points supplied");
        const int dim = static_cast<int>(points.front().size());
        const LatticePolytope poly = LatticePolytope::hull(dim, points);
        return emit("volume", Json{{"points", o.points}}, fnv1a_digest(o.points),
                    Json{{"polytope", json_of(poly)},
                         {"full_dimensional", is_full_dimensional(poly)},
                         {"normalized_volume", rational_to_string(normalized_volume(poly))}});
    }
    const Input input = load_input(o.file);
    const auto& f = named_map(input, o.map_name);
    const NewtonBody body = map_newton_body(standard_system(f), o.level);
    return emit("volume", Json{{"file", o.file}, {"map", o.map_name}, {"level", o.level}},
                input.digest,
                Json{{"normalized_volume", rational_to_string(normalized_volume(body))},
                     {"scale", std::to_string(body.scale)}});
}

int run_contracts(const Options& o) {
    const Input input = load_input(o.file);
    if (o.hyperplane < 0) throw precondition_error("--hyperplane <index> is required");
    ProjectiveMap f = named_map(input, o.map_name);
    if (o.normalize) f = f.normalized();
    const auto point = contracts_to_point(f, o.hyperplane);
    Json result{{"contracts", point.has_value()}};
    if (point) result["point"] = json_of(*point);
    return emit("contracts",
                Json{{"file", o.file}, {"map", o.map_name}, {"hyperplane", o.hyperplane}},
                input.digest, std::move(result));
}

int run_restrict(const Options& o) {
    const Input input = load_input(o.file);
    if (o.hyperplane < 0) throw precondition_error("--hyperplane <index> is required");
    const auto tuple = restrict_to_hyperplane(named_map(input, o.map_name), o.hyperplane);
    Json comps = Json::array();
    bool all_zero = true;
    for (const auto& p : tuple) {
        comps.push_back(p.to_string());
        all_zero = all_zero && p.is_zero();
    }
    return emit("restrict",
                Json{{"file", o.file}, {"map", o.map_name}, {"hyperplane", o.hyperplane}},
                input.digest, Json{{"components", comps}, {"all_zero", all_zero}});
}

int run_jacobian(const Options& o) {
    const Input input = load_input(o.file);
    const auto& psi = named_affine(input, o.affine_name);
    const Polynomial det = jacobian_det(psi);
    return emit("jacobian", Json{{"file", o.file}, {"affine", o.affine_name}}, input.digest,
                Json{{"determinant", det.to_string()},
                     {"unimodular", det == Polynomial::constant(psi.dim, 1)}});
}

int run_freegroup(const Options& o) {
    if (o.pingpong_m != 0) {
        std::vector<std::array<long long, 2>> grid;
        for (long long x = -o.grid; x <= o.grid; ++x)
            for (long long y = -o.grid; y <= o.grid; ++y)
                if (x != 0 || y != 0) grid.push_back({x, y});
        const bool ok = pingpong_check(o.pingpong_m, grid);
        const Json args = Json{{"pingpong", o.pingpong_m}, {"grid", o.grid}};
        const std::string digest = fnv1a_digest("pingpong" + std::to_string(o.pingpong_m));
        if (!ok) {
            std::cout << render_report(make_error_report(
                "freegroup", args, digest, "verification",
                "a sample violates the table-tennis inclusions"));
            return kVerification;
        }
        return emit("freegroup", args, digest, Json{{"pingpong_holds", true}});
    }

    if (o.radius < 1) throw precondition_error("--len <radius> is required and must be >= 1");
    IntMatrix a(2), b(2);
    std::string images = "sl2";
    if (!o.image_a.empty() || !o.image_b.empty()) {
        if (o.image_a.empty() || o.image_b.empty())
            throw precondition_error("--imageA and --imageB must be supplied together");
        a = parse_matrix_text(o.image_a);
        b = parse_matrix_text(o.image_b);
        images = "custom";
    } else if (o.use_rho_images) {
        const int n = o.ambient_n >= 4 ? o.ambient_n : 4;
        auto [m1, m2] = a1_a2_matrices(n);
        a = m1 * m1;
        b = m2 * m2;
        images = "rho_squares_n" + std::to_string(n);
    } else {
        a.at(0, 0) = 1; a.at(0, 1) = 2;  a.at(1, 0) = 0;  a.at(1, 1) = 1;
        b.at(0, 0) = 1; b.at(0, 1) = 0;  b.at(1, 0) = -2; b.at(1, 1) = 1;
    }

    std::uint64_t words = 0;
    const bool distinct = no_relation_certificate(a, b, o.radius, &words);
    const Json args = Json{{"len", o.radius}, {"images", images}};
    const std::string digest = fnv1a_digest(images + ":" + std::to_string(o.radius));
    if (!distinct) {
        std::cout << render_report(
            make_error_report("freegroup", args, digest, "verification",
                              "two reduced words of length <= " + std::to_string(o.radius) +
                                  " evaluate to the same matrix"));
        return kVerification;
    }
    return emit("freegroup", args, digest,
                Json{{"all_distinct", true}, {"words_checked", words}});
}

int run_conjugate(const Options& o) {
    const Input input = load_input(o.file);
    const auto& f = named_map(input, o.map_name);
    const GroupWord w = GroupWord::parse(o.word);
    const ProjectiveMap conj = conjugate_by_word(w, f);
    return emit("conjugate",
                Json{{"file", o.file}, {"map", o.map_name}, {"word", w.to_string()}},
                input.digest, json_of(conj));
}

int run_diag_classify(const Options& o) {
    if (o.radius < 1) throw precondition_error("--len <radius> is required and must be >= 1");
    OrbitClassification verdict{false, false, 0, std::nullopt};
    Json args;
    std::string digest;
    if (o.symbolic_equal || o.symbolic_generic) {
        const int n = o.ambient_n >= 1 ? o.ambient_n : 4;
        const auto sym = o.symbolic_equal ? SymbolicDiagonal::all_equal(n)
                                          : SymbolicDiagonal::generic(n);
        verdict = diag_orbit_classify(sym, o.radius);
        const std::string kind = o.symbolic_equal ? "all_equal" : "generic";
        args = Json{{"symbolic", kind}, {"n", n}, {"len", o.radius}};
        digest = fnv1a_digest("symbolic:" + kind + std::to_string(n));
    } else {
        if (o.lambdas.empty())
            throw precondition_error("supply --lambda 'q1,q2,...' or --symbolic-equal");
        std::vector<Rational> ls;
        std::stringstream ss(o.lambdas);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            const Polynomial c = parse_polynomial(cell, 0);
            if (c.is_zero())
                ls.push_back(Rational(0));  // DiagonalSpec rejects this below
            else if (c.term_count() == 1 && c.terms().begin()->first[0] == 0)
                ls.push_back(c.terms().begin()->second);
            else
                throw precondition_error("bad scale entry '" + cell + "'");
        }
        verdict = diag_orbit_classify(DiagonalSpec(ls), o.radius);
        args = Json{{"lambda", o.lambdas}, {"len", o.radius}};
        digest = fnv1a_digest(o.lambdas);
    }
    Json result{{"fixed", verdict.fixed},
                {"unconditional", verdict.unconditional},
                {"radius", verdict.radius}};
    if (verdict.witness) result["witness"] = verdict.witness->to_string();
    return emit("diag-classify", args, digest, std::move(result));
}

int run_corpus_cmd(const Options& o) {
    if (!o.emit_dir.empty()) {
        const auto written = emit_corpus_files(o.emit_dir);
        Json files = Json::array();
        for (const auto& f : written) files.push_back(f);
        return emit("corpus", Json{{"emit", o.emit_dir}}, corpus_digest(),
                    Json{{"written", files}});
    }
    Json result = run_corpus(o.jobs);
    if (!o.corpus_dir.empty()) {
        Json extra = validate_corpus_files(o.corpus_dir);
        for (auto& entry : extra) {
            if (!entry.at("pass").get<bool>())
                result["failures"] = result["failures"].get<int>() + 1;
            result["entries"].push_back(std::move(entry));
        }
        auto& entries = result["entries"];
        std::sort(entries.begin(), entries.end(), [](const Json& a, const Json& b) {
            return a.at("entry").get<std::string>() < b.at("entry").get<std::string>();
        });
        result["total"] = static_cast<int>(entries.size());
    }
    // --jobs is an execution parameter, not an input: it stays out of the echo.
    const Json args = o.corpus_dir.empty() ? Json::object() : Json{{"dir", o.corpus_dir}};
    const bool pass = result.at("failures").get<int>() == 0;
    const int code = pass ? kOk : kVerification;
    return emit("corpus", args, corpus_digest(), std::move(result), code);
}

int dispatch(const std::string& command, const Options& o) {
    if (command == "parse") return run_parse(o);
    if (command == "compose") return run_compose(o);
    if (command == "rho") return run_rho(o);
    if (command == "gform") return run_gform(o);
    if (command == "predict-leading") return run_predict(o);
    if (command == "newton") return run_newton(o);
    if (command == "volume") return run_volume(o);
    if (command == "contracts") return run_contracts(o);
    if (command == "restrict") return run_restrict(o);
    if (command == "jacobian") return run_jacobian(o);
    if (command == "freegroup") return run_freegroup(o);
    if (command == "conjugate") return run_conjugate(o);
    if (command == "diag-classify") return run_diag_classify(o);
    if (command == "corpus") return run_corpus_cmd(o);
    throw precondition_error("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for the combinatorics of birational self-maps"};
    app.require_subcommand(1);
    Options o;

    const auto add_file = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("file", o.file, "map file");
        if (required) opt->required();
    };

    auto* parse_cmd = app.add_subcommand("parse", "parse a map file or an expression");
    add_file(parse_cmd, false);
    parse_cmd->add_option("--expr", o.expr, "polynomial expression");
    parse_cmd->add_option("-n", o.ambient_n, "ambient dimension for --expr");

    auto* compose_cmd = app.add_subcommand("compose", "compose two named maps (outer o inner)");
    add_file(compose_cmd);
    compose_cmd->add_option("-g,--outer", o.map_name, "outer map name")->required();
    compose_cmd->add_option("-f,--inner", o.inner_name, "inner map name")->required();
    compose_cmd->add_flag("--normalize,!--no-normalize", o.normalize,
                          "reduce to the coprime representative (default on)");

    auto* rho_cmd = app.add_subcommand("rho", "lattice matrix of a map");
    add_file(rho_cmd);
    rho_cmd->add_option("-m,--map", o.map_name, "map name")->required();

    auto* gform_cmd = app.add_subcommand("gform", "leading-shape test and membership");
    add_file(gform_cmd);
    gform_cmd->add_option("-m,--map", o.map_name, "map name")->required();
    gform_cmd->add_option("--inverse", o.inverse_name, "inverse witness for membership");

    auto* predict_cmd = app.add_subcommand("predict-leading", "leading pair of h(f)");
    add_file(predict_cmd);
    predict_cmd->add_option("-m,--map", o.map_name, "map name")->required();
    predict_cmd->add_option("--poly", o.expr, "the polynomial h")->required();
    predict_cmd->add_flag("--check", o.check, "cross-check against the expansion");

    auto* newton_cmd = app.add_subcommand("newton", "newton polytope or finite-level body");
    add_file(newton_cmd, false);
    newton_cmd->add_option("-m,--map", o.map_name, "map name");
    newton_cmd->add_option("--level", o.level, "semigroup level (default 1)");
    newton_cmd->add_option("--denominator", o.hyperplane, "denominator component index");
    newton_cmd->add_option("--expr", o.expr, "single polynomial instead of a map");
    newton_cmd->add_option("-n", o.ambient_n, "ambient dimension for --expr");

    auto* volume_cmd = app.add_subcommand("volume", "normalized lattice volume");
    add_file(volume_cmd, false);
    volume_cmd->add_option("-m,--map", o.map_name, "map name");
    volume_cmd->add_option("--level", o.level, "semigroup level (default 1)");
    volume_cmd->add_option("--points", o.points, "vertices 'x,y;x,y;...'");

    auto* contracts_cmd = app.add_subcommand("contracts", "does the map contract a hyperplane");
    add_file(contracts_cmd);
    contracts_cmd->add_option("-m,--map", o.map_name, "map name")->required();
    contracts_cmd->add_option("--hyperplane", o.hyperplane, "variable index")->required();
    contracts_cmd->add_flag("--normalize,!--no-normalize", o.normalize,
                            "normalize before restricting (default on)");

    auto* restrict_cmd = app.add_subcommand("restrict", "substitute X_i = 0");
    add_file(restrict_cmd);
    restrict_cmd->add_option("-m,--map", o.map_name, "map name")->required();
    restrict_cmd->add_option("--hyperplane", o.hyperplane, "variable index")->required();

    auto* jac_cmd = app.add_subcommand("jacobian", "determinant of an affine map's Jacobi matrix");
    add_file(jac_cmd);
    jac_cmd->add_option("-a,--affine", o.affine_name, "affine map name")->required();

    auto* free_cmd = app.add_subcommand("freegroup", "no-relation and table-tennis certificates");
    free_cmd->add_option("--len", o.radius, "word radius");
    free_cmd->add_flag("--rho", o.use_rho_images, "use the squared generator matrices");
    free_cmd->add_option("-n", o.ambient_n, "dimension for --rho (default 4)");
    free_cmd->add_option("--imageA", o.image_a, "custom image matrix 'a,b;c,d'");
    free_cmd->add_option("--imageB", o.image_b, "custom image matrix 'a,b;c,d'");
    free_cmd->add_option("--pingpong", o.pingpong_m, "run the table-tennis check for this m");
    free_cmd->add_option("--grid", o.grid, "half-width of the sample grid (default 20)");

    auto* conj_cmd = app.add_subcommand("conjugate", "conjugate a map by a word in the squares");
    add_file(conj_cmd);
    conj_cmd->add_option("-m,--map", o.map_name, "map name")->required();
    conj_cmd->add_option("--word", o.word, "word over A,a,B,b")->required();

    auto* diag_cmd = app.add_subcommand("diag-classify", "orbit of a diagonal map under words");
    diag_cmd->add_option("--lambda", o.lambdas, "concrete scales 'q1,q2,...'");
    diag_cmd->add_flag("--symbolic-equal", o.symbolic_equal, "symbolic tuple (t,...,t)");
    diag_cmd->add_flag("--symbolic-generic", o.symbolic_generic, "symbolic tuple (t1,...,tn)");
    diag_cmd->add_option("-n", o.ambient_n, "dimension for symbolic tuples (default 4)");
    diag_cmd->add_option("--len", o.radius, "word radius")->required();

    auto* corpus_cmd = app.add_subcommand("corpus", "run the bundled witness suite");
    corpus_cmd->add_option("--jobs", o.jobs, "worker count (does not affect the output)");
    corpus_cmd->add_option("--emit", o.emit_dir, "write the witness map files and exit");
    corpus_cmd->add_option("--dir", o.corpus_dir, "also validate bundled files in a directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, o);
    } catch (const parse_error& e) {
        std::cout << render_report(
            make_error_report(command, Json::object(), "", "parse", e.what()));
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const hypothesis_error& e) {
        std::cout << render_report(
            make_error_report(command, Json::object(), "", "hypothesis", e.what()));
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kPrecondition;
    } catch (const precondition_error& e) {
        std::cout << render_report(
            make_error_report(command, Json::object(), "", "precondition", e.what()));
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kPrecondition;
    } catch (const error& e) {
        std::cout << render_report(
            make_error_report(command, Json::object(), "", "internal", e.what()));
        std::cerr << "error: " << e.what() << "\n";
        return kPrecondition;
    }
}

}  // namespace cremona::cli

int main(int argc, char** argv) { return cremona::cli::main(argc, argv); }
