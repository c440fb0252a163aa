#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "cremona/errors.hpp"
#include "cremona/families.hpp"
#include "cremona/mapfile.hpp"
#include "cremona/parse.hpp"
#include "cremona/newton.hpp"
#include "cremona/words.hpp"

namespace cremona::cli {

namespace {

struct Checks {
    Json list = Json::array();
    bool all = true;

    void add(const std::string& name, bool pass, Json detail = nullptr) {
        Json c{{"check", name}, {"pass", pass}};
        if (!detail.is_null()) c["detail"] = std::move(detail);
        list.push_back(std::move(c));
        all = all && pass;
    }
};

using EntryFn = std::function<Json()>;

Json finish(const std::string& name, Checks& checks) {
    return Json{{"entry", name}, {"pass", checks.all}, {"checks", std::move(checks.list)}};
}

ProjectivePoint ones(int n) { return ProjectivePoint(std::vector<Rational>(n + 1, Rational(1))); }

ProjectiveMap conjugate(const IntMatrix& g, const ProjectiveMap& f) {
    return compose(compose(monomial_map(g), f, true), monomial_map(g.inverse_unimodular()), true);
}

Json entry_generators() {
    Checks c;
    auto [m1, m2] = a1_a2_matrices(4);
    auto [a1, a2] = a1_a2(4);
    c.add("rho_a1_column3", rho(a1).column(2) == IntVec{1, -1, 1, 0}, json_of(rho(a1)));
    c.add("rho_a2_column2", rho(a2).column(1) == IntVec{-1, 1, 1, 0}, json_of(rho(a2)));
    c.add("column_sums_unimodular", is_sl_prime(m1) && is_sl_prime(m2));
    c.add("fix_all_ones_point", fixes_point(a1, ones(4)) && fixes_point(a2, ones(4)));
    c.add("inverse_pairs",
          verify_inverse_pair(a1, monomial_map(m1.inverse_unimodular())) &&
              verify_inverse_pair(a2, monomial_map(m2.inverse_unimodular())));
    c.add("a2_is_not_inverse_of_a1", !verify_inverse_pair(a1, a2));
    return finish("a1_a2_generators", c);
}

Json entry_involution() {
    Checks c;
    std::vector<Polynomial> comps;
    const int n = 3;
    for (int i = 0; i <= n; ++i) {
        ExponentVec e(n + 1, 1);
        e[i] = 0;
        comps.push_back(Polynomial::monomial(n, e, Rational(1)));
    }
    const ProjectiveMap invol(std::move(comps));
    c.add("shape_test_rejects", !g_form(invol).has_value());
    c.add("involution_squares_to_identity", verify_inverse_pair(invol, invol));
    return finish("cremona_involution_rejected", c);
}

Json entry_diagonal() {
    Checks c;
    const DiagonalSpec spec({2, 3, 5, 7});
    const auto d = diagonal_map(spec);
    c.add("shape_and_identity_matrix", g_form(d).has_value() && rho(d) == IntMatrix::identity(4));
    c.add("inverse_pair", verify_inverse_pair(d, diagonal_map(diagonal_inverse(spec))));

    const auto moved = diag_orbit_classify(spec, 2);
    Json witness = moved.witness ? json_of(*moved.witness) : Json(nullptr);
    c.add("concrete_tuple_moves", !moved.fixed && moved.witness.has_value(), witness);
    if (moved.witness) {
        auto [m1, m2] = a1_a2_matrices(4);
        const IntMatrix e = eval_word(*moved.witness, m1 * m1, m2 * m2);
        c.add("witness_really_moves", apply_exponent_matrix(spec.lambdas, e) != spec.lambdas);
    }

    const auto sym = diag_orbit_classify(SymbolicDiagonal::all_equal(4), 3);
    c.add("all_equal_tuple_fixed_unconditionally", sym.fixed && sym.unconditional);
    return finish("diagonal_orbit", c);
}

Json shear_entry(int d) {
    Checks c;
    const int n = 4;
    const ShearSpec spec = default_shear(n, d);
    const ShearMaps maps = shear_lambda(spec);
    c.add("explicit_inverse_verifies",
          maps.inverse.has_value() && verify_inverse_pair(maps.lambda, *maps.inverse));
    c.add("kernel_shape", g_form(maps.lambda).has_value() &&
                              rho(maps.lambda) == IntMatrix::identity(n));

    auto [m1, m2] = a1_a2_matrices(n);
    c.add("a1_conjugation_fixes", equals_projectively(conjugate(m1, maps.lambda), maps.lambda));

    const ProjectiveMap conj = conjugate(m2, maps.lambda);
    const auto point = contracts_to_point(conj, 3);
    const ProjectivePoint expected(
        {Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
    c.add("a2_conjugate_contracts_hyperplane",
          point.has_value() && same_projective_point(*point, expected),
          point ? json_of(*point) : Json(nullptr));
    c.add("shear_itself_does_not_contract", !contracts_to_point(maps.lambda, 3).has_value());

    const AffinePolyMap xi = xi_restrict(maps.lambda);
    c.add("restriction_is_unimodular", jacobian_det(xi) == Polynomial::constant(n - 1, 1),
          json_of(xi));
    return finish("shear_n4_d" + std::to_string(d), c);
}

Json entry_sigma() {
    Checks c;
    struct Case {
        int n;
        int d;
        std::vector<std::string> psi;
    };
    const std::vector<Case> cases = {
        {4, 2, {"X1", "X2", "X3 + X1^2"}},
        {4, 3, {"X1 + X2*X3", "X2", "X3"}},
        {5, 2, {"X1", "X2 + X3*X4", "X3", "X4"}},
    };
    for (const auto& [n, d, exprs] : cases) {
        const int m = n - 1;
        std::vector<Polynomial> comps;
        for (const auto& e : exprs) comps.push_back(parse_polynomial(e, m));
        const AffinePolyMap psi(m, std::move(comps));
        const auto sigma = sigma_map(psi, d);
        const std::string tag = "n" + std::to_string(n) + "_d" + std::to_string(d);
        c.add("round_trip_" + tag, affine_equal(xi_restrict(sigma), psi));
        c.add("kernel_shape_" + tag,
              g_form(sigma).has_value() && rho(sigma) == IntMatrix::identity(n));
        const auto inverse = sigma_elementary_inverse(psi, d);
        c.add("elementary_inverse_" + tag,
              inverse.has_value() && verify_inverse_pair(sigma, *inverse));
    }
    return finish("sigma_round_trip", c);
}

Json newton_entry(int n, int d) {
    Checks c;
    const int m = n - 1;
    std::vector<Polynomial> comps;
    for (int k = 1; k <= m; ++k) {
        Polynomial comp = Polynomial::variable(m, k);
        if (k == m) {
            ExponentVec e(m + 1, 0);
            e[1] = d;
            comp.add_term(e, Rational(1));
        }
        comps.push_back(std::move(comp));
    }
    const auto sigma = sigma_map(AffinePolyMap(m, std::move(comps)), d);
    NewtonBody previous{LatticePolytope::hull(n, std::vector<LatticePoint>{LatticePoint(n, 0)}),
                        1};
    for (int level = 1; level <= 3; ++level) {
        const NewtonBody body = map_newton_body(standard_system(sigma), level);
        const std::string tag = "level" + std::to_string(level);
        c.add("standard_simplex_" + tag, is_standard_simplex(body), json_of(body));
        c.add("unit_volume_" + tag, normalized_volume(body) == 1);
        if (level > 1) c.add("stabilized_" + tag, body == previous);
        previous = body;
    }
    return finish("newton_simplex_n" + std::to_string(n) + "_d" + std::to_string(d), c);
}

Json entry_freegroup() {
    Checks c;
    IntMatrix t(2), s(2);
    t.at(0, 0) = 1; t.at(0, 1) = 2;  t.at(1, 0) = 0;  t.at(1, 1) = 1;
    s.at(0, 0) = 1; s.at(0, 1) = 0;  s.at(1, 0) = -2; s.at(1, 1) = 1;
    std::uint64_t words = 0;
    c.add("sl2_certificate_radius8", no_relation_certificate(t, s, 8, &words),
          Json{{"words_checked", words}});

    auto [m1, m2] = a1_a2_matrices(4);
    c.add("squared_generators_radius6", no_relation_certificate(m1 * m1, m2 * m2, 6));
    c.add("braid_relation_of_unsquared", !no_relation_certificate(m1, m2, 3));

    std::vector<std::array<long long, 2>> grid;
    for (long long x = -20; x <= 20; ++x)
        for (long long y = -20; y <= 20; ++y)
            if (x != 0 || y != 0) grid.push_back({x, y});
    c.add("pingpong_m2", pingpong_check(2, grid));
    c.add("pingpong_m_minus2", pingpong_check(-2, grid));
    c.add("pingpong_m1_boundary_fails", !pingpong_check(1, grid));
    return finish("freegroup_certificates", c);
}

Json entry_prediction() {
    Checks c;
    const auto diag = diagonal_map(DiagonalSpec({2, 3, 5, 7}));
    auto [a1, a2] = a1_a2(4);
    const auto shear = shear_lambda(default_shear(4, 2)).lambda;
    const std::vector<std::pair<std::string, ProjectiveMap>> maps = {
        {"diagonal", diag}, {"a1", a1}, {"a2", a2}, {"shear", shear}};
    const std::vector<std::string> polys = {"X0", "X1", "X0*X4 + X1^2", "X0*X2 + X3^2 + X4^2",
                                            "X0^2*X1 + X0*X2^2 + X3^3"};
    for (const auto& [map_name, f] : maps) {
        for (const auto& text : polys) {
            const Polynomial h = parse_polynomial(text, 4);
            const LeadingPair predicted = predict_leading(h, f);
            const LeadingPair actual = leading_pair(h.substituted(f.normalized().components()));
            c.add("predict_" + map_name + "_" + fnv1a_digest(text).substr(6, 6),
                  predicted == actual, json_of(predicted));
        }
    }
    return finish("predict_leading_samples", c);
}

Json entry_monomial_roundtrip() {
    Checks c;
    auto [m1, m2] = a1_a2_matrices(4);
    const IntMatrix gens[4] = {m1, m2, m1.inverse_unimodular(), m2.inverse_unimodular()};
    IntMatrix acc = IntMatrix::identity(4);
    bool round_trips = true, law_holds = true;
    int step = 0;
    for (int i = 0; i < 20; ++i) {
        const IntMatrix& g = gens[step % 4];
        step += i % 3 + 1;
        const IntMatrix next = acc * g;
        round_trips = round_trips && rho(monomial_map(next)) == next;
        law_holds = law_holds &&
                    equals_projectively(compose(monomial_map(acc), monomial_map(g), true),
                                        monomial_map(g * acc));
        acc = next;
    }
    c.add("rho_of_monomial_is_identity_on_matrices", round_trips);
    c.add("composition_matches_reversed_product", law_holds);
    return finish("monomial_word_roundtrip", c);
}

std::vector<std::pair<std::string, EntryFn>> corpus_table() {
    return {
        {"a1_a2_generators", entry_generators},
        {"cremona_involution_rejected", entry_involution},
        {"diagonal_orbit", entry_diagonal},
        {"freegroup_certificates", entry_freegroup},
        {"monomial_word_roundtrip", entry_monomial_roundtrip},
        {"newton_simplex_n3_d2", [] { return newton_entry(3, 2); }},
        {"newton_simplex_n4_d3", [] { return newton_entry(4, 3); }},
        {"predict_leading_samples", entry_prediction},
        {"shear_n4_d2", [] { return shear_entry(2); }},
        {"shear_n4_d3", [] { return shear_entry(3); }},
        {"sigma_round_trip", entry_sigma},
    };
}

std::string map_to_text(const std::string& name, const ProjectiveMap& f) {
    std::string out = "map " + name + " = [";
    for (int i = 0; i <= f.ambient_n(); ++i) {
        if (i) out += " : ";
        out += f.component(i).to_string();
    }
    return out + "]\n";
}

std::string affine_to_text(const std::string& name, const AffinePolyMap& psi) {
    std::string out = "affine " + name + " = (";
    for (int i = 0; i < psi.dim; ++i) {
        if (i) out += ", ";
        out += psi.components[i].to_string();
    }
    return out + ")\n";
}

struct BundledFile {
    std::string name;
    std::string content;
};

std::vector<BundledFile> bundled_files() {
    std::vector<BundledFile> files;

    auto [a1, a2] = a1_a2(4);
    std::string gens = "# standard generators, dimension 4\nn = 4\n";
    gens += map_to_text("a1", a1);
    gens += map_to_text("a2", a2);
    gens += map_to_text("a1_inv", monomial_map(rho(a1).inverse_unimodular()));
    gens += map_to_text("a2_inv", monomial_map(rho(a2).inverse_unimodular()));
    files.push_back({"a1_a2_n4.map", gens});

    for (int d : {2, 3}) {
        const ShearMaps maps = shear_lambda(default_shear(4, d));
        auto [m1, m2] = a1_a2_matrices(4);
        std::string text = "# shear family witness, degree " + std::to_string(d) + "\nn = 4\n";
        text += map_to_text("lambda", maps.lambda);
        text += map_to_text("lambda_inv", *maps.inverse);
        text += map_to_text("a2_conj_lambda", conjugate(m2, maps.lambda));
        files.push_back({"shear_n4_d" + std::to_string(d) + ".map", text});
    }

    {
        const AffinePolyMap psi(3, {parse_polynomial("X1", 3), parse_polynomial("X2", 3),
                                    parse_polynomial("X3 + X1^2", 3)});
        std::string text = "# triangular witness and its degree-2 suspension\nn = 4\n";
        text += map_to_text("sigma", sigma_map(psi, 2));
        text += affine_to_text("psi", psi);
        files.push_back({"sigma_n4_d2.map", text});
    }

    {
        const DiagonalSpec spec({2, 3, 5, 7});
        std::string text = "# diagonal witness\nn = 4\n";
        text += map_to_text("diag", diagonal_map(spec));
        text += map_to_text("diag_inv", diagonal_map(diagonal_inverse(spec)));
        files.push_back({"diag_n4.map", text});
    }

    {
        std::string text = "# the standard involution: rejected by the shape test\nn = 3\n";
        std::vector<Polynomial> comps;
        for (int i = 0; i <= 3; ++i) {
            ExponentVec e(4, 1);
            e[i] = 0;
            comps.push_back(Polynomial::monomial(3, e, Rational(1)));
        }
        text += map_to_text("involution", ProjectiveMap(std::move(comps)));
        files.push_back({"involution_n3.map", text});
    }

    std::sort(files.begin(), files.end(),
              [](const BundledFile& a, const BundledFile& b) { return a.name < b.name; });
    return files;
}

}  // namespace

std::string corpus_digest() {
    std::string manifest;
    for (const auto& [name, fn] : corpus_table()) manifest += name + "\n";
    return fnv1a_digest(manifest);
}

Json run_corpus(int jobs) {
    auto table = corpus_table();
    std::vector<Json> results(table.size());

    if (jobs < 1) jobs = 1;
    std::mutex next_mutex;
    std::size_t next = 0;
    const auto worker = [&] {
        while (true) {
            std::size_t mine;
            {
                std::lock_guard<std::mutex> lock(next_mutex);
                if (next >= table.size()) return;
                mine = next++;
            }
            results[mine] = table[mine].second();
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }

    // Entries are already table-ordered; sort by name for a stable document.
    std::sort(results.begin(), results.end(), [](const Json& a, const Json& b) {
        return a.at("entry").get<std::string>() < b.at("entry").get<std::string>();
    });
    int failures = 0;
    Json entries = Json::array();
    for (auto& r : results) {
        if (!r.at("pass").get<bool>()) ++failures;
        entries.push_back(std::move(r));
    }
    return Json{{"entries", entries},
                {"total", static_cast<int>(results.size())},
                {"failures", failures}};
}

bool corpus_passed(const Json& corpus_result) {
    return corpus_result.at("failures").get<int>() == 0;
}

std::vector<std::string> emit_corpus_files(const std::string& directory) {
    namespace fs = std::filesystem;
    fs::create_directories(directory);
    std::vector<std::string> written;
    for (const auto& file : bundled_files()) {
        const fs::path path = fs::path(directory) / file.name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw precondition_error("cannot write '" + path.string() + "'");
        out << file.content;
        written.push_back(file.name);
    }
    return written;
}

Json validate_corpus_files(const std::string& directory) {
    namespace fs = std::filesystem;
    Json out = Json::array();
    for (const auto& file : bundled_files()) {
        Checks c;
        const fs::path path = fs::path(directory) / file.name;
        if (!fs::exists(path)) {
            c.add("file_present", false, path.string());
        } else {
            const MapFile expected = parse_map_file(file.content);
            const MapFile loaded = load_map_file(path.string());
            c.add("file_present", true);
            c.add("dimension_matches", loaded.ambient_n == expected.ambient_n);
            bool maps_match = loaded.maps.size() == expected.maps.size();
            for (const auto& [name, map] : expected.maps) {
                auto it = loaded.maps.find(name);
                maps_match = maps_match && it != loaded.maps.end() &&
                             equals_projectively(it->second, map);
            }
            c.add("maps_match_builtins", maps_match);
            bool affine_match = loaded.affine_maps.size() == expected.affine_maps.size();
            for (const auto& [name, map] : expected.affine_maps) {
                auto it = loaded.affine_maps.find(name);
                affine_match =
                    affine_match && it != loaded.affine_maps.end() && affine_equal(it->second, map);
            }
            c.add("affine_match_builtins", affine_match);
        }
        out.push_back(finish("bundled_" + file.name, c));
    }
    return out;
}

}  // namespace cremona::cli
