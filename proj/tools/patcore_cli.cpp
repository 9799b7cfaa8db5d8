// patcore: command-line front end.
//
// Exit status: 0 success, 1 a check failed (witness printed), 2 usage error.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"

#include "patcore/patcore.hpp"

#ifndef PATCORE_DATA_DIR
#define PATCORE_DATA_DIR "data/oeis"
#endif

using namespace patcore;
using nlohmann::json;

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};


std::string seq_text(const std::vector<BigInt>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s;
}

json seq_json(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

void emit_sequence(const std::vector<BigInt>& v, const std::string& format, const std::string& name, long long offset = 0) {
    if (format == "json") std::cout << json{{"name", name}, {"offset", offset}, {"terms", seq_json(v)}}.dump(2) << '\n';
    else if (format == "csv") std::cout << format_csv(v, offset);
    else if (format == "bfile") std::cout << format_bfile(v, offset);
    else std::cout << seq_text(v) << '\n';
}

void require_limit(long long value, long long limit, bool force, const std::string& what) {
    if (value > limit && !force)
        throw usage_error(what + " = " + std::to_string(value) + " exceeds the desk limit " + std::to_string(limit) +
                          " (use --force)");
}

// --- grids from options ------------------------------------------------------

struct GridArgs {
    int staircase = -1;
    std::string perm;
    std::vector<int> nonintersecting;
    bool extended = false;
    std::string variant = "down";
};

void add_grid_options(CLI::App* cmd, GridArgs& g) {
    auto* src = cmd->add_option_group("grid", "grid to build the core on");
    src->add_option("--staircase", g.staircase, "staircase B_n")->check(CLI::NonNegativeNumber);
    src->add_option("--perm", g.perm, "boundary grid of a 123-avoiding permutation");
    src->add_option("--nonintersecting", g.nonintersecting, "B_{a,b}")->expected(2)->delimiter(',');
    src->require_option(1);
    cmd->add_flag("--extended", g.extended, "double the final column");
    cmd->add_option("--variant", g.variant, "down, up or updown")
        ->check(CLI::IsMember({"down", "up", "updown"}))
        ->capture_default_str();
}

BoundaryGrid make_grid(const GridArgs& g) {
    BoundaryGrid grid;
    if (g.staircase >= 0) grid = staircase(g.staircase);
    else if (!g.perm.empty()) grid = boundary_grid(Permutation::parse(g.perm));
    else grid = nonintersecting(g.nonintersecting.at(0), g.nonintersecting.at(1));
    if (g.extended) grid = double_final_column(grid);
    if (grid.size() > 128) throw unsupported_size("grid has more than 128 boxes");
    return grid;
}

json core_json(const CoreGraph& c) {
    json vs = json::array(), es = json::array();
    for (const auto& b : c.grid().boxes()) vs.push_back({b.row, b.col});
    for (auto [u, v] : c.graph().edges()) es.push_back({u, v});
    return {{"variant", to_string(c.variant())}, {"vertices", vs}, {"edges", es}};
}

// --- series by name -------------------------------------------------------------

BiSeries named_series(const std::string& name, int n) {
    static const std::map<std::string, std::function<BiSeries(int)>> table = {
        {"F", [](int k) { return solve_F(k, k); }},
        {"G", [](int k) { return smooth_family(k, k).G; }},
        {"P_ind", [](int k) { return smooth_family(k, k).P_ind; }},
        {"P", [](int k) { return smooth_family(k, k).P; }},
        {"R", [](int k) { return updown_family(k, k).R; }},
        {"Q_up", [](int k) { return updown_family(k, k).Q_up; }},
        {"Q_down", [](int k) { return updown_family(k, k).Q_down; }},
        {"Q_ind", [](int k) { return updown_family(k, k).Q_ind; }},
        {"Q", [](int k) { return updown_family(k, k).Q; }},
        {"S_up", [](int k) { return four_pattern_family(k, k).S_up; }},
        {"S_down", [](int k) { return four_pattern_family(k, k).S_down; }},
        {"S_ind", [](int k) { return four_pattern_family(k, k).S_ind; }},
        {"S", [](int k) { return four_pattern_family(k, k).S; }},
        {"H", [](int k) { return nonintersecting_family(k, k).H; }},
        {"I", [](int k) { return nonintersecting_family(k, k).I; }},
        {"J", [](int k) { return nonintersecting_family(k, k).J; }},
        {"J_statement", [](int k) { return nonintersecting_family(k, k).J_statement; }},
        {"narayana", [](int k) { return narayana_closed_form(k); }},
        {"smooth", [](int k) { return closed_form_smooth(k); }},
        {"nice", [](int k) { return closed_form_nice(k); }},
        {"notasnice", [](int k) { return closed_form_notasnice(k); }},
    };
    auto it = table.find(name);
    if (it == table.end()) {
        std::string known;
        for (const auto& [k, v] : table) known += (known.empty() ? "" : ", ") + k;
        throw usage_error("unknown series '" + name + "' (known: " + known + ")");
    }
    return it->second(n);
}

// --- sequence generators for OEIS comparison ---------------------------------

std::vector<BigInt> flatten_rows(const CountTable& t, int from_row) {
    std::vector<BigInt> out;
    for (std::size_t r = from_row; r < t.rows.size(); ++r) out.insert(out.end(), t.rows[r].begin(), t.rows[r].end());
    return out;
}

std::vector<BigInt> generate(const std::string& gen, int terms) {
    if (terms < 1) throw usage_error("need at least one term");
    auto cut = [&](std::vector<BigInt> v) {
        if (static_cast<int>(v.size()) > terms) v.resize(terms);
        return v;
    };
    if (gen == "narayana") {
        int rows = 1;
        while (rows * (rows - 1) / 2 < terms) ++rows;
        return cut(flatten_rows(narayana_table_series(rows + 1), 1));
    }
    if (gen == "a262370") {
        int rows = 1;
        while (static_cast<int>(flatten_rows(independent_size_table_formula(rows), 0).size()) < terms) ++rows;
        return cut(flatten_rows(independent_size_table_series(rows), 0));
    }
    if (gen == "boundaries") {
        const auto p = smooth_family(terms - 1, 0).P;
        return p.x_sequence();
    }
    if (gen == "smooth") return smooth_counts(terms - 1);
    if (gen == "nice") return nice_counts(terms - 1);
    if (gen == "notasnice") return notasnice_counts(terms - 1);
    if (gen == "type-a2") return type_a2_counts(terms - 1);
    if (gen == "type-a3") return type_a3_counts(terms - 1);
    if (gen == "pascal12") return cut(rightmost_entries_check(independent_size_table_series(3 * terms)).pascal_column);
    if (gen == "catalan-rightmost") return cut(rightmost_entries_check(independent_size_table_series(3 * terms + 1)).catalan_column);
    throw usage_error("unknown generator '" + gen +
                      "' (known: narayana, a262370, boundaries, smooth, nice, notasnice, type-a2, type-a3, pascal12, catalan-rightmost)");
}

BFile fetch_remote(const std::string& id) {
    httplib::Client cli("http://oeis.org");
    cli.set_connection_timeout(10);
    cli.set_follow_location(false);
    const std::string digits = id.substr(1);
    auto res = cli.Get("/" + id + "/b" + digits + ".txt");
    if (!res || res->status != 200)
        throw std::runtime_error("remote fetch of " + id + " failed" + (res ? " (HTTP " + std::to_string(res->status) + ")" : ""));
    std::istringstream in(res->body);
    return parse_bfile(in);
}

int run_checks(const std::vector<const CheckEntry*>& which, int max_n, bool force, bool fault, const std::string& format) {
    bool ok = true;
    json all = json::array();
    for (const auto* e : which) {
        const int n = max_n >= 0 ? max_n : e->default_n;
        require_limit(n, e->desk_limit, force, "--max-n for " + e->name);
        for (const auto& r : e->run(n, fault)) {
            ok = ok && r.passed;
            if (format == "json") all.push_back(r.to_json());
            else std::cout << r.to_text();
        }
    }
    if (format == "json") std::cout << all.dump(2) << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern-avoidance cores, polygons and generating functions"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    bool force = false;
    app.add_option("--format", format, "text, json, csv or bfile")
        ->check(CLI::IsMember({"text", "json", "csv", "bfile"}))
        ->capture_default_str();
    app.add_flag("--force", force, "allow bounds beyond the desk limits");

    std::function<int()> action;

    // avoid count
    auto* avoid = app.add_subcommand("avoid", "permutation classes");
    avoid->require_subcommand(1);
    auto* avoid_count = avoid->add_subcommand("count", "count Av_n(basis) for n = 0..max-n");
    std::string basis_text, vincular_text;
    int avoid_n = 8;
    auto* basis_opt = avoid_count->add_option("--basis", basis_text, "comma-separated classical patterns");
    auto* vinc_opt = avoid_count->add_option("--vincular", vincular_text, "one vincular pattern, e.g. 1<23>4");
    basis_opt->excludes(vinc_opt);
    avoid_count->add_option("--max-n", avoid_n, "largest length")->check(CLI::NonNegativeNumber)->capture_default_str();
    avoid_count->callback([&] {
        action = [&] {
            require_limit(avoid_n, 12, force, "--max-n");
            std::vector<BigInt> counts;
            if (!vincular_text.empty()) {
                const auto vp = VincularPattern::parse(vincular_text);
                for (int n = 0; n <= avoid_n; ++n) counts.emplace_back(count_vincular_avoiders(n, vp));
            } else {
                if (basis_text.empty()) throw usage_error("give --basis or --vincular");
                const auto basis = PatternBasis::parse(basis_text);
                for (int n = 0; n <= avoid_n; ++n) counts.emplace_back(count_avoiders(n, basis));
            }
            emit_sequence(counts, format, vincular_text.empty() ? basis_text : vincular_text);
            return 0;
        };
    });

    // core
    auto* core = app.add_subcommand("core", "core graphs of boundary grids");
    core->require_subcommand(1);
    GridArgs gargs;
    auto* core_build = core->add_subcommand("build", "vertices and edges");
    add_grid_options(core_build, gargs);
    core_build->callback([&] {
        action = [&] {
            const auto c = build_core(make_grid(gargs), parse_core_variant(gargs.variant));
            if (format == "json") {
                std::cout << core_json(c).dump(2) << '\n';
            } else {
                std::cout << "# " << c.order() << " vertices, " << c.graph().edge_count() << " edges\n";
                for (int v = 0; v < c.order(); ++v) std::cout << "# " << v << " " << c.box(v).to_string() << '\n';
                for (auto [u, v] : c.graph().edges()) std::cout << u << ' ' << v << '\n';
            }
            return 0;
        };
    });
    auto* core_cliques = core->add_subcommand("cliques", "clique counts by size");
    add_grid_options(core_cliques, gargs);
    core_cliques->callback([&] {
        action = [&] {
            const auto c = build_core(make_grid(gargs), parse_core_variant(gargs.variant));
            emit_sequence(clique_profile(c.graph()), format, "cliques");
            return 0;
        };
    });
    auto* core_ind = core->add_subcommand("indsets", "independent sets by size, or weighted counts");
    add_grid_options(core_ind, gargs);
    int weight = -1;
    std::string inflation = "increasing";
    core_ind->add_option("--weight", weight, "total weight; prints the weighted count instead of the profile");
    core_ind->add_option("--inflation", inflation, "increasing, decreasing or point")
        ->check(CLI::IsMember({"increasing", "decreasing", "point"}))
        ->capture_default_str();
    core_ind->callback([&] {
        action = [&] {
            const auto c = build_core(make_grid(gargs), parse_core_variant(gargs.variant));
            const auto prof = independent_set_profile(c);
            if (weight < 0) {
                emit_sequence(prof, format, "independent sets");
            } else {
                const auto inf = inflation == "point" ? Inflation::point
                                 : inflation == "decreasing" ? Inflation::decreasing
                                                             : Inflation::increasing;
                emit_sequence({weighted_count(prof, weight, inf)}, format, "weighted count", weight);
            }
            return 0;
        };
    });
    auto* core_purity = core->add_subcommand("purity", "do all maximal independent sets have one size");
    add_grid_options(core_purity, gargs);
    core_purity->callback([&] {
        action = [&] {
            const auto c = build_core(make_grid(gargs), parse_core_variant(gargs.variant));
            std::pair<VertexSet, VertexSet> w;
            const bool pure = is_pure(c.graph(), &w);
            json out{{"pure", pure}};
            if (!pure) {
                auto boxes = [&](const VertexSet& s) {
                    json a = json::array();
                    s.for_each([&](int v) { a.push_back(c.box(v).to_string()); });
                    return a;
                };
                out["maximal_sets"] = {boxes(w.first), boxes(w.second)};
            }
            if (format == "json") std::cout << out.dump(2) << '\n';
            else std::cout << (pure ? "pure" : "not pure: " + out["maximal_sets"].dump()) << '\n';
            return 0;
        };
    });

    // polygon
    auto* poly = app.add_subcommand("polygon", "non-crossing subgraphs of K_{n+1}");
    poly->require_subcommand(1);
    int poly_n = 4;
    auto* nonc = poly->add_subcommand("noncrossing", "non-crossing subgraphs of K_{n+1} by number of edges");
    nonc->add_option("--n", poly_n, "polygon has n+1 vertices")->check(CLI::NonNegativeNumber)->capture_default_str();
    nonc->callback([&] {
        action = [&] {
            require_limit(poly_n, 14, force, "--n");
            emit_sequence(noncrossing_profile(poly_n), format, "noncrossing");
            return 0;
        };
    });
    auto* star = poly->add_subcommand("verify-star", "core adjacency equals chord crossing");
    int star_n = 8;
    star->add_option("--max-n", star_n, "largest n")->check(CLI::NonNegativeNumber)->capture_default_str();
    star->callback([&] {
        action = [&] {
            require_limit(star_n, 14, force, "--max-n");
            const auto r = check_star(star_n);
            std::cout << (format == "json" ? r.to_json().dump(2) + "\n" : r.to_text());
            return r.passed ? 0 : 1;
        };
    });

    // series
    auto* ser = app.add_subcommand("series", "generating functions");
    std::string ser_name, subst = "none";
    int order = 10;
    ser->add_option("name", ser_name, "F, G, P, P_ind, R, Q, Q_up, Q_down, Q_ind, S, S_up, S_down, S_ind, H, I, J, "
                                      "J_statement, or a closed form: narayana, smooth, nice, notasnice")
        ->required();
    ser->add_option("--order", order, "truncation order")->check(CLI::NonNegativeNumber)->capture_default_str();
    ser->add_option("--subst", subst, "none, y=x or y=x/(1-x)")
        ->check(CLI::IsMember({"none", "y=x", "y=x/(1-x)"}))
        ->capture_default_str();
    ser->callback([&] {
        action = [&] {
            require_limit(order, 30, force, "--order");
            const auto s = named_series(ser_name, order);
            if (subst == "none") {
                if (format == "json") {
                    json terms = json::array();
                    for (int a = 0; a <= s.nx(); ++a)
                        for (int b = 0; b <= s.ny(); ++b)
                            if (s.coeff(a, b) != 0) terms.push_back({a, b, s.coeff(a, b).str()});
                    std::cout << json{{"name", ser_name}, {"nx", s.nx()}, {"ny", s.ny()}, {"terms", terms}}.dump(2) << '\n';
                } else {
                    std::cout << s.to_string() << '\n';
                }
                return 0;
            }
            const auto t = subst == "y=x" ? BiSeries::x(order, 0) : x_over_one_minus_x(order, 0);
            const auto u = s.ny() == 0 ? s.truncate(order, 0) : subst_y(s, t, order, 0);
            emit_sequence(u.x_sequence(), format, ser_name + " with " + subst);
            return 0;
        };
    });

    // triangle
    auto* tri = app.add_subcommand("triangle", "the two Catalan triangles");
    std::string tri_name, route = "formula";
    int rows = 8;
    tri->add_option("name", tri_name, "narayana or a262370")->required()->check(CLI::IsMember({"narayana", "a262370"}));
    tri->add_option("--rows", rows, "number of rows, starting from row 0")->check(CLI::PositiveNumber)->capture_default_str();
    tri->add_option("--route", route, "formula, series or brute")
        ->check(CLI::IsMember({"formula", "series", "brute"}))
        ->capture_default_str();
    tri->callback([&] {
        action = [&] {
            require_limit(rows, route == "brute" ? 12 : 30, force, "--rows");
            CountTable t;
            if (tri_name == "narayana") {
                if (route == "brute") throw usage_error("no brute-force route for the narayana triangle");
                t = route == "series" ? narayana_table_series(rows) : narayana_table_formula(rows);
            } else {
                t = route == "series" ? independent_size_table_series(rows)
                    : route == "brute" ? independent_size_table_brute(rows)
                                       : independent_size_table_formula(rows);
            }
            if (format == "csv") std::cout << t.to_csv();
            else if (format == "bfile") std::cout << format_bfile(t.flattened());
            else if (format == "json") {
                json r = json::array();
                for (const auto& row : t.rows) r.push_back(seq_json(row));
                std::cout << json{{"name", tri_name}, {"route", route}, {"rows", r}}.dump(2) << '\n';
            } else std::cout << t.to_text();
            return 0;
        };
    });

    // check
    auto* chk = app.add_subcommand("check", "run cross-checks; exit 1 on failure");
    std::string check_name;
    int check_n = -1;
    bool fault = false;
    std::string names;
    for (const auto& e : check_registry()) names += e.name + ", ";
    chk->add_option("name", check_name, names + "or all")->required();
    chk->add_option("--max-n", check_n, "size bound (default per check)")->check(CLI::NonNegativeNumber);
    chk->add_flag("--inject-fault", fault, "corrupt the encoder")->group("");
    chk->callback([&] {
        action = [&] {
            std::vector<const CheckEntry*> which;
            if (check_name == "all") {
                for (const auto& e : check_registry()) which.push_back(&e);
                if (check_n >= 0) throw usage_error("--max-n applies to a single check");
            } else {
                const auto* e = find_check(check_name);
                if (!e) throw usage_error("unknown check '" + check_name + "'");
                which.push_back(e);
            }
            return run_checks(which, check_n, force, fault, format);
        };
    });

    // oeis compare
    auto* oeis = app.add_subcommand("oeis", "compare against OEIS b-files");
    oeis->require_subcommand(1);
    auto* cmp = oeis->add_subcommand("compare", "compare a generator with a b-file");
    std::string seq_id, gen, fixture, data_dir = PATCORE_DATA_DIR;
    bool remote = false;
    cmp->add_option("seq-id", seq_id, "e.g. A001263")->required();
    cmp->add_option("generator", gen, "narayana, a262370, boundaries, smooth, nice, notasnice, type-a2, type-a3, "
                                      "pascal12, catalan-rightmost")
        ->required();
    cmp->add_option("--fixture", fixture, "b-file path (default: <data-dir>/b<digits>.txt)");
    cmp->add_option("--data-dir", data_dir, "fixture directory")->capture_default_str();
    cmp->add_flag("--remote", remote, "fetch the b-file from oeis.org instead");
    cmp->callback([&] {
        action = [&] {
            if (seq_id.size() != 7 || seq_id[0] != 'A') throw usage_error("sequence ids look like A001263");
            const BFile expected = remote ? fetch_remote(seq_id)
                                          : read_bfile(fixture.empty() ? data_dir + "/b" + seq_id.substr(1) + ".txt" : fixture);
            if (expected.terms.empty()) throw usage_error("b-file has no terms");
            const int terms = static_cast<int>(expected.terms.size());
            require_limit(terms, 120, force, "number of terms");
            const auto got = generate(gen, terms);
            const auto diff = compare_terms(expected, got);
            json out{{"sequence", seq_id}, {"generator", gen}, {"terms", terms}, {"match", !diff}};
            if (diff) out["first_difference"] = *diff;
            if (format == "json") std::cout << out.dump(2) << '\n';
            else std::cout << (diff ? "MISMATCH " + seq_id + ": " + *diff : "MATCH " + seq_id + " (" + std::to_string(terms) + " terms)") << '\n';
            return diff ? 1 : 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const unsupported_size& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
