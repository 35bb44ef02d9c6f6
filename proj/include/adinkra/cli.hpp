#pragma once

// Command-line surface.  Exit codes: 0 success, 1 domain error, 2 usage
// error, 3 capacity error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "adinkra/dot_export.hpp"
#include "adinkra/graph_json.hpp"
#include "adinkra/poset.hpp"

namespace adinkra::cli {

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path);
    f << text;
}

inline LoadedGraph load_graph(const std::string& path) {
    try {
        return graph_from_json(ordered_json::parse(read_file(path)));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad graph json: ") + e.what());
    }
}

inline LinearCode load_code(const std::string& path, int n_hint = 0) {
    std::vector<Bitstring> gens = parse_code_text(read_file(path));
    if (gens.empty()) {
        if (n_hint < 1)
            throw DomainError("code file has no generators; add an all-zeros line to fix n");
        return span(n_hint, {});
    }
    if (n_hint > 0 && gens[0].length != n_hint)
        throw DomainError("code file length does not match --n");
    return span(gens);
}

inline const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"adinkra chromotopology toolkit"};
    app.require_subcommand(1);

    // code check
    auto* code_cmd = app.add_subcommand("code", "code file utilities");
    code_cmd->require_subcommand(1);
    auto* code_check = code_cmd->add_subcommand("check", "classify a code file");
    std::string code_file;
    code_check->add_option("file", code_file, "generator file")->required();
    code_check->callback([&] {
        LinearCode code = detail::load_code(code_file);
        CodeClass c = classify(code);
        out << "n " << code.ambient_length() << "\n";
        out << "k " << code.dim() << "\n";
        out << "even " << detail::yn(c.is_even) << "\n";
        out << "doubly_even " << detail::yn(c.is_doubly_even) << "\n";
        out << "dashing_code " << detail::yn(c.is_dashing_code) << "\n";
        out << "weight1 " << detail::yn(c.has_weight1) << "\n";
        out << "weight2 " << detail::yn(c.has_weight2) << "\n";
    });

    // build
    auto* build_cmd = app.add_subcommand("build", "build the quotient of the n-cube by a code");
    int build_n = 0;
    std::string build_code, build_out;
    build_cmd->add_option("--n", build_n, "number of colors")->required();
    build_cmd->add_option("--code", build_code, "generator file")->required();
    build_cmd->add_option("--out", build_out, "write graph json here instead of stdout");
    build_cmd->callback([&] {
        if (build_n < 1) throw DomainError("--n must be positive");
        LinearCode code = detail::load_code(build_code, build_n);
        Prechromotopology A = build_quotient(build_n, code);
        GraphClass g = classify_graph(A);
        err << "vertices " << A.vertex_count() << "\n";
        err << "edges " << A.edge_count() << "\n";
        err << "loop " << detail::yn(g.has_loop) << "\n";
        err << "double_edge " << detail::yn(g.has_double_edge) << "\n";
        err << "bipartite " << detail::yn(g.is_bipartite) << "\n";
        err << "chromotopology " << detail::yn(g.is_chromotopology) << "\n";
        err << "adinkraizable " << detail::yn(g.is_adinkraizable) << "\n";
        detail::write_output(build_out, graph_to_json(A).dump(2) + "\n", out);
    });

    // dash count|find|lsc
    auto* dash_cmd = app.add_subcommand("dash", "dashing counts and solutions");
    dash_cmd->require_subcommand(1);
    std::string dash_graph;
    auto* dash_count_cmd = dash_cmd->add_subcommand("count", "count even/odd dashings");
    auto* dash_find_cmd = dash_cmd->add_subcommand("find", "find an odd dashing");
    auto* dash_lsc_cmd = dash_cmd->add_subcommand("lsc", "labeled switching classes");
    for (auto* c : {dash_count_cmd, dash_find_cmd, dash_lsc_cmd})
        c->add_option("--graph", dash_graph, "graph json")->required();
    dash_count_cmd->callback([&] {
        LoadedGraph g = detail::load_graph(dash_graph);
        // even_space re-derives the dimension formula on adinkraizable
        // input and find_odd_dashing cross-checks the dashing-code test.
        std::vector<BitVec> basis = even_space(g.A);
        bool dashable = find_odd_dashing(g.A).has_value();
        BigUint even = BigUint::pow2(basis.size());
        out << "edges " << g.A.edge_count() << "\n";
        out << "even_dim " << basis.size() << "\n";
        out << "even " << even.to_string() << "\n";
        out << "odd " << (dashable ? even.to_string() : "0") << "\n";
    });
    dash_find_cmd->callback([&] {
        LoadedGraph g = detail::load_graph(dash_graph);
        std::optional<Dashing> d = find_odd_dashing(g.A);
        if (!d) throw DomainError("no odd dashing exists: the code is not a dashing code");
        out << graph_to_json(g.A, g.ranks, d).dump(2) << "\n";
    });
    dash_lsc_cmd->callback([&] {
        LoadedGraph g = detail::load_graph(dash_graph);
        LscReport rep = lsc_count(g.A);
        out << "lsc_count " << rep.count.to_string() << "\n";
        for (const Dashing& d : rep.representatives)
            out << "rep " << d.values.to_string() << "\n";
    });

    // homology
    auto* hom_cmd = app.add_subcommand("homology", "Z2 Betti numbers of the 2-complex");
    std::string hom_graph;
    hom_cmd->add_option("--graph", hom_graph, "graph json")->required();
    hom_cmd->callback([&] {
        LoadedGraph g = detail::load_graph(hom_graph);
        ChainComplex x = homology(g.A);
        out << "C0 " << x.c0 << "\nC1 " << x.c1 << "\nC2 " << x.c2 << "\n";
        out << "H0 " << x.betti0 << "\nH1 " << x.betti1 << "\n";
    });

    // rank enumerate / rank lattice
    auto* rank_cmd = app.add_subcommand("rank", "rank family enumeration and structure");
    rank_cmd->require_subcommand(1);
    auto* rank_enum = rank_cmd->add_subcommand("enumerate", "count (or stream) rankings of the n-cube");
    int enum_n = 0, enum_jobs = 1;
    bool enum_emit = false, enum_oracle = false, enum_big = false;
    rank_enum->add_option("--n", enum_n, "cube dimension")->required();
    rank_enum->add_flag("--emit", enum_emit, "stream one json object per ranking");
    rank_enum->add_flag("--oracle", enum_oracle, "use the flip-closure oracle");
    rank_enum->add_flag("--allow-big", enum_big, "attempt n = 6");
    rank_enum->add_option("--jobs", enum_jobs, "worker threads for the pair sweep");
    rank_enum->callback([&] {
        if (enum_n < 1) throw DomainError("--n must be positive");
        std::vector<Ranking> listing;
        uint64_t count = 0;
        if (enum_oracle) {
            Prechromotopology A = build_quotient(enum_n, span(enum_n, {}));
            listing = enumerate_rankings_oracle(A);
            count = listing.size();
        } else {
            if (enum_n > 5 && !enum_big)
                throw CapacityError("n > 5 is expensive; pass --allow-big to attempt n = 6");
            FastEnumerationResult res = enumerate_rankings_fast(enum_n, enum_emit, enum_jobs);
            count = res.count;
            listing = std::move(res.rankings);
        }
        if (enum_emit) {
            for (const Ranking& r : listing) {
                ordered_json j;
                j["ranks"] = r.h;
                out << j.dump() << "\n";
            }
            err << "count " << count << "\n";
        } else {
            out << count << "\n";
        }
    });

    auto* rank_lattice = rank_cmd->add_subcommand("lattice", "rank family poset and its lattice structure");
    int lat_n = 0;
    std::string lat_hook;
    rank_lattice->add_option("--n", lat_n, "cube dimension")->required();
    rank_lattice->add_option("--hook", lat_hook, "hook vertex as a bitstring label")->required();
    rank_lattice->callback([&] {
        if (lat_n < 1) throw DomainError("--n must be positive");
        Prechromotopology A = build_quotient(lat_n, span(lat_n, {}));
        Bitstring v = Bitstring::parse(lat_hook);
        if (v.length != lat_n) throw DomainError("--hook length must equal --n");
        int vertex = A.vertex_of_label(v.value);
        RankFamilyPoset pv = rank_family_poset(A, vertex);
        ElevationPoset ev = elevation_poset(A, vertex);
        IdealLattice jl = order_ideal_lattice(ev.poset);
        LatticeReport rep = lattice_checks(pv.poset);
        out << "P_v " << pv.poset.size << "\n";
        out << "E_v " << ev.poset.size << "\n";
        out << "J(E_v) " << jl.poset.size << "\n";
        out << "lattice " << detail::yn(rep.is_lattice) << "\n";
        out << "distributive " << detail::yn(rep.is_distributive) << "\n";
    });

    // table1
    auto* table_cmd = app.add_subcommand("table1", "dashings / rankings / adinkras of the n-cubes");
    int table_max = 0;
    bool table_big = false;
    table_cmd->add_option("--max-n", table_max, "largest cube dimension")->required();
    table_cmd->add_flag("--allow-big", table_big, "attempt n = 6");
    table_cmd->callback([&] {
        if (table_max < 1) throw DomainError("--max-n must be positive");
        if (table_max > 5 && !table_big)
            throw CapacityError("n > 5 is expensive; pass --allow-big to attempt n = 6");
        if (table_max > 6) throw CapacityError("enumeration is not attempted past n = 6");
        out << "n dashings rankings adinkras\n";
        for (int n = 1; n <= table_max; n++) {
            BigUint dashings = count_dashings(n, 0);
            uint64_t rankings = enumerate_rankings_fast(n).count;
            BigUint adinkras = dashings;
            adinkras.mul_u64(rankings);
            out << n << " " << dashings.to_string() << " " << rankings << " "
                << adinkras.to_string() << "\n";
        }
    });

    // repr
    auto* repr_cmd = app.add_subcommand("repr", "representation matrices of an adinkra");
    std::string repr_graph;
    bool repr_clifford = false;
    repr_cmd->add_option("--graph", repr_graph, "graph json with dashes (and ranks)")->required();
    repr_cmd->add_flag("--clifford-mode", repr_clifford, "ignore ranks; verify {Q,Q} = 2I");
    repr_cmd->callback([&] {
        LoadedGraph g = detail::load_graph(repr_graph);
        if (!g.dashes) throw DomainError("graph json has no dashes; run `dash find` first");
        ordered_json j;
        std::vector<GradedMatrix> mats;
        if (repr_clifford) {
            Ranking valise = g.ranks && height(*g.ranks) == 1 ? *g.ranks : valises(g.A).first;
            mats = garden_matrices(g.A, valise, *g.dashes);
            j["mode"] = "clifford";
        } else {
            if (!g.ranks) throw DomainError("graph json has no ranks; graded mode needs them");
            mats = graded_matrices(g.A, *g.ranks, *g.dashes);
            j["mode"] = "graded";
        }
        ordered_json jm = ordered_json::array();
        for (const GradedMatrix& m : mats) jm.push_back(matrix_to_json(m));
        j["matrices"] = jm;
        SuperalgebraReport rep = verify_algebra(mats, repr_clifford);
        j["relations_hold"] = rep.relations_hold;
        if (repr_clifford) j["supertrace"] = supertrace(mats);
        out << j.dump(2) << "\n";
    });

    // export-dot
    auto* dot_cmd = app.add_subcommand("export-dot", "graphviz rendering of a graph json");
    std::string dot_graph, dot_out;
    dot_cmd->add_option("--graph", dot_graph, "graph json")->required();
    dot_cmd->add_option("--out", dot_out, "write DOT here instead of stdout");
    dot_cmd->callback([&] {
        LoadedGraph g = detail::load_graph(dot_graph);
        detail::write_output(dot_out, export_dot(g.A, g.ranks, g.dashes), out);
    });

    std::vector<const char*> argv;
    argv.push_back("adinkra");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream sink;
        int rc = app.exit(e, out, sink);
        if (rc == 0) return 0;
        err << sink.str();
        return 2;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace adinkra::cli
