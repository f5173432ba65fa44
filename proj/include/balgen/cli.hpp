#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balgen/constructors.hpp"
#include "balgen/dual_graph.hpp"
#include "balgen/edge_path.hpp"
#include "balgen/genus.hpp"
#include "balgen/json_io.hpp"
#include "balgen/rank_selected.hpp"
#include "balgen/report.hpp"

namespace balgen {
namespace cli {

struct LoadedComplex {
    ColoredComplex complex;
    std::string bytes;
};

/// "-" means standard input for every FILE argument.
inline LoadedComplex read_complex(const std::string& path, std::istream& in) {
    std::string bytes;
    if (path == "-") {
        bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) fail("FileError", "cannot open " + path);
        bytes.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    return LoadedComplex{complex_from_json_text(bytes), std::move(bytes)};
}

inline std::vector<int> parse_color_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (const std::exception&) {
            fail("BadColors", "cannot parse color list '" + text + "'");
        }
    }
    if (out.empty()) fail("BadColors", "empty color list");
    return out;
}

inline const char* yesno(bool b) { return b ? "yes" : "no"; }

inline void print_validation(std::ostream& out, const ColoredComplex& c,
                             const ValidationReport& r) {
    out << "pure:                     " << yesno(r.pure) << "\n";
    out << "balanced:                 " << yesno(r.balanced) << "\n";
    out << "ridge_condition:          " << yesno(r.ridge_condition) << "\n";
    out << "links_connected:          " << yesno(r.links_connected) << "\n";
    out << "connected:                " << yesno(r.connected) << "\n";
    out << "facet_strongly_connected: " << yesno(r.facet_strongly_connected) << "\n";
    out << "normal_pseudomanifold:    " << yesno(r.normal_pseudomanifold()) << "\n";
    for (const Simplex& s : r.facet_witnesses)
        out << "  facet witness: " << c.face_string(s) << "\n";
    for (const Simplex& s : r.ridge_witnesses)
        out << "  ridge witness: " << c.face_string(s) << "\n";
    for (const Simplex& s : r.link_witnesses)
        out << "  disconnected link at: " << c.face_string(s) << "\n";
}

inline void print_flags(std::ostream& out, const ColoredComplex& c,
                        const std::optional<std::string>& set_arg) {
    const auto& fv = flag_vectors(c);
    if (set_arg) {
        const ColorSet m = color_mask(parse_color_list(*set_arg));
        check_colors_in_range(c, m);
        out << "S = " << mask_string(m) << "\n";
        out << "f_S = " << fv.flag_f(m) << "\n";
        out << "h_S = " << fv.flag_h(m) << "\n";
        if (mask_colors(m).size() == 2)
            out << "Gamma_S = " << gamma(c, m).value << "\n";
        return;
    }
    out << "f-vector:";
    for (auto v : fv.f) out << " " << v;
    out << "\nh-vector:";
    for (auto v : fv.h) out << " " << v;
    out << "\neuler: " << fv.euler << "\n";
    out << "flag f-numbers (by color set):\n";
    const ColorSet all = full_mask(c.dimension());
    for (ColorSet m = 0;; ++m) {
        out << "  " << mask_string(m) << " f=" << fv.flag_f(m) << " h=" << fv.flag_h(m)
            << "\n";
        if (m == all) break;
    }
}

inline int run_verify(std::ostream& out, const ColoredComplex& c,
                      std::optional<std::int64_t> m) {
    const BoundsReport rep = verify_bounds(c, m);
    for (const BoundCheck& b : rep.checks)
        out << (b.pass ? "PASS" : "FAIL") << "  " << b.name << ": " << b.detail << "\n";
    for (const std::string& cert : rep.sphere_certificates) out << "CERT  " << cert << "\n";
    if (rep.sphere_certificates.empty())
        out << "no sphere certificate applies to this triangulation\n";
    return rep.all_pass() ? 0 : 1;
}

inline void print_genus(std::ostream& out, const GenusRecord& rec, bool all) {
    out << "dimension: " << rec.d << "  orientable: " << yesno(rec.orientable)
        << "  necklaces: " << rec.evals.size() << "\n";
    out << "necklace           chi(F)  rho";
    if (all) out << "   [embedding, flags" << (rec.closed_form_used ? ", closed form" : "")
                 << "]";
    out << "\n";
    for (const NecklaceEval& ev : rec.evals) {
        std::string name = ev.eps.str();
        name.resize(std::max<std::size_t>(name.size(), 18), ' ');
        std::string chi = std::to_string(ev.surface_euler);
        chi.resize(std::max<std::size_t>(chi.size(), 7), ' ');
        out << name << " " << chi << " " << ev.rho.str();
        if (all) {
            out << "   [" << ev.rho_from_embedding.str() << ", " << ev.rho_from_flags.str();
            if (ev.rho_closed_form) out << ", " << ev.rho_closed_form->str();
            out << "]";
        }
        out << "\n";
    }
    out << "balanced genus: " << rec.genus.str() << "\n";
    out << "argmin necklaces:";
    for (std::size_t i : rec.argmin) out << " " << rec.evals[i].eps.str();
    out << "\n";
    out << "note: this value is the genus of the given triangulation, an upper bound"
           " for the invariant of the underlying space\n";
}

inline void print_pi1(std::ostream& out, const RankBounds& rb) {
    out << "generators before reduction: " << rb.generators_before << "\n";
    out << "trivialized by link containment: " << rb.trivialized_by_links << "\n";
    out << "surviving after propagation: " << rb.surviving_global << "\n";
    out << "rank lower bound (abelianization): " << rb.lower << "\n";
    out << "rank upper bound (presentation reduction): " << rb.upper << "\n";
    if (rb.simply_connected_witness)
        out << "simply connected: a two-color subgraph lies in one vertex link\n";
    if (rb.pair) {
        out << "pair {" << rb.pair->p << "," << rb.pair->q
            << "}: generators=" << rb.pair->generators
            << " trivialized=" << rb.pair->trivialized_by_links
            << " link_bound=" << rb.pair->link_bound()
            << " surviving=" << rb.pair->surviving
            << " in_one_link=" << yesno(rb.pair->subgraph_in_one_link) << "\n";
    }
}

inline void print_report_text(std::ostream& out, const nlohmann::json& doc) {
    out << "tool version: " << doc["version"].get<std::string>() << "\n";
    out << "input digest: " << doc["input_digest"].get<std::string>() << "\n";
    out << "-- validation --\n";
    for (const auto& [key, value] : doc["validation"].items())
        out << "  " << key << ": " << (value.get<bool>() ? "yes" : "no") << "\n";
    out << "-- flags --\n  f-vector:";
    for (const auto& v : doc["flags"]["f_vector"]) out << " " << v;
    out << "\n  h-vector:";
    for (const auto& v : doc["flags"]["h_vector"]) out << " " << v;
    out << "\n  euler: " << doc["flags"]["euler"] << "\n";
    if (doc.contains("genus")) {
        out << "-- genus --\n";
        out << "  balanced genus: " << doc["genus"]["genus"].get<std::string>() << "\n";
        out << "  orientable: " << yesno(doc["genus"]["orientable"].get<bool>()) << "\n";
        out << "  necklaces evaluated: " << doc["genus"]["necklaces"].size() << "\n";
    }
    if (doc.contains("bounds")) {
        out << "-- bounds --\n";
        for (const auto& chk : doc["bounds"]["checks"])
            out << "  " << (chk["pass"].get<bool>() ? "PASS" : "FAIL") << " "
                << chk["name"].get<std::string>() << ": "
                << chk["detail"].get<std::string>() << "\n";
        for (const auto& cert : doc["bounds"]["sphere_certificates"])
            out << "  CERT " << cert.get<std::string>() << "\n";
    }
    if (doc.contains("pi1")) {
        out << "-- pi1 rank bounds --\n";
        out << "  lower: " << doc["pi1"]["lower"] << "  upper: " << doc["pi1"]["upper"]
            << "\n";
    }
    for (const auto& [key, reason] : doc["skipped"].items())
        out << "skipped " << key << ": " << reason.get<std::string>() << "\n";
}

/// Entry point shared by the binary and the tests. Returns the process exit
/// code: 0 success, 1 failed internal cross-check or failed bound, 2 invalid
/// input or usage.
inline int cli_main(std::vector<std::string> args, std::istream& in, std::ostream& out,
                    std::ostream& err) {
    CLI::App app{"balanced-complex toolkit: dual graphs, genus, flag vectors", "balgen"};
    app.require_subcommand(1);

    std::string file = "-";
    std::optional<std::string> set_arg;
    bool json_out = false;
    bool all_rows = false;
    std::optional<std::int64_t> asserted_m;
    std::string dot_path;
    std::optional<std::string> pair_arg;
    int dim = 3;

    auto* c_validate = app.add_subcommand("validate", "check the pseudomanifold conditions");
    c_validate->add_option("file", file, "input JSON ('-' for stdin)");
    c_validate->add_flag("--json", json_out, "emit JSON");

    auto* c_flags = app.add_subcommand("flags", "f/h-vectors and flag tables");
    c_flags->add_option("file", file);
    c_flags->add_option("--set", set_arg, "comma-separated color set, e.g. 0,2");
    c_flags->add_flag("--json", json_out);

    auto* c_structure =
        app.add_subcommand("structure", "two-color subcomplex structure scans");
    c_structure->add_option("file", file);
    std::string structure_set;
    c_structure->add_option("--set", structure_set, "color pair p,q")->required();

    auto* c_dual = app.add_subcommand("dual", "facet-adjacency graph and DOT export");
    c_dual->add_option("file", file);
    c_dual->add_option("--dot", dot_path, "write Graphviz DOT here ('-' for stdout)");
    c_dual->add_option("--pair", pair_arg, "restrict DOT to two edge colors i,j");

    auto* c_genus = app.add_subcommand("genus", "necklace table and balanced genus");
    c_genus->add_option("file", file);
    c_genus->add_flag("--all", all_rows, "show per-formula cross-check columns");
    c_genus->add_flag("--json", json_out);

    auto* c_verify = app.add_subcommand("verify", "instantiate genus bounds and criteria");
    c_verify->add_option("file", file);
    std::int64_t m_value = 0;
    auto* m_opt = c_verify->add_option("--m", m_value, "known fundamental-group rank");

    auto* c_pi1 = app.add_subcommand("pi1", "edge-path group rank bounds");
    c_pi1->add_option("file", file);
    c_pi1->add_option("--set", set_arg, "color pair p,q for the seeded spanning tree");
    c_pi1->add_flag("--json", json_out);

    auto* c_generate = app.add_subcommand("generate", "emit canonical complexes");
    auto* c_octa = c_generate->add_subcommand("octahedral", "octahedral sphere");
    c_octa->add_option("--dim", dim, "dimension")->required();

    auto* c_connsum =
        app.add_subcommand("connsum", "balanced connected sum of two complexes");
    c_connsum->allow_extras();

    auto* c_report = app.add_subcommand("report", "full pipeline report");
    c_report->add_option("file", file);
    c_report->add_flag("--json", json_out);
    std::int64_t report_m_value = 0;
    auto* report_m_opt = c_report->add_option("--m", report_m_value);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_validate) {
            LoadedComplex lc = read_complex(file, in);
            if (json_out)
                out << validation_to_json(lc.complex.validation()).dump(2) << "\n";
            else
                print_validation(out, lc.complex, lc.complex.validation());
            return 0;
        }

        if (*c_flags) {
            LoadedComplex lc = read_complex(file, in);
            if (json_out)
                out << flags_to_json(lc.complex).dump(2) << "\n";
            else
                print_flags(out, lc.complex, set_arg);
            return 0;
        }

        if (*c_structure) {
            LoadedComplex lc = read_complex(file, in);
            const ColoredComplex& c = lc.complex;
            const auto colors = parse_color_list(structure_set);
            if (colors.size() != 2) fail("BadArity", "--set needs exactly two colors");
            const ColorSet mask = color_mask(colors);
            check_colors_in_range(c, mask);
            RankSelected rs = restrict_complex(c, mask);
            out << "S = " << mask_string(mask) << "\n";
            out << "Gamma_S: " << gamma(c, mask).value << "\n";
            out << "degree sequence:";
            for (auto deg : rs.degree_sequence()) out << " " << deg;
            out << "\n";
            out << "strongly connected: " << yesno(strongly_connected(c, mask)) << "\n";
            const auto cycles = almost_induced_scan(c, mask);
            if (cycles.empty()) {
                out << "almost-induced cycles: none\n";
            } else {
                out << "almost-induced cycles: " << cycles.size() << "\n";
                for (const auto& cyc : cycles) {
                    out << " ";
                    for (VertexId v : cyc) out << " " << c.label(v);
                    out << "\n";
                }
            }
            const auto degs = rs.degree_sequence();
            const bool diagonal_shape =
                degs.size() >= 2 && degs[0] == 3 && degs[1] == 3 &&
                std::all_of(degs.begin() + 2, degs.end(),
                            [](std::int64_t d) { return d == 2; });
            if (diagonal_shape)
                out << "shape: cycle with a diagonal path (two degree-3 vertices)\n";
            if (gamma(c, mask).value == 0) {
                const auto cert = join_decomposition(c, mask);
                out << "join decomposition: " << (cert ? "certified" : "refuted") << "\n";
            }
            return 0;
        }

        if (*c_dual) {
            LoadedComplex lc = read_complex(file, in);
            const DualGraph g = dual_graph(lc.complex);
            std::optional<std::pair<int, int>> pair;
            if (pair_arg) {
                const auto colors = parse_color_list(*pair_arg);
                if (colors.size() != 2) fail("BadColors", "--pair needs two colors");
                pair = {colors[0], colors[1]};
            }
            out << "nodes: " << g.node_count() << "\n";
            out << "edges: " << g.edge_count() << "\n";
            out << "regular of degree: " << g.d + 1 << "\n";
            out << "bipartite (orientable): " << yesno(is_bipartite(g)) << "\n";
            if (pair) {
                out << "bicolored cycles {" << pair->first << "," << pair->second
                    << "}: " << bicolored_cycle_count(g, pair->first, pair->second) << "\n";
            } else {
                out << "bicolored cycle counts:\n";
                for (int i = 0; i <= g.d; ++i)
                    for (int j = i + 1; j <= g.d; ++j)
                        out << "  {" << i << "," << j
                            << "}: " << bicolored_cycle_count(g, i, j) << "\n";
            }
            if (!dot_path.empty()) {
                const std::string dot = export_dot(lc.complex, g, pair);
                if (dot_path == "-") {
                    out << dot;
                } else {
                    std::ofstream f(dot_path);
                    if (!f) fail("FileError", "cannot write " + dot_path);
                    f << dot;
                }
            }
            return 0;
        }

        if (*c_genus) {
            LoadedComplex lc = read_complex(file, in);
            const GenusRecord rec = balanced_genus(lc.complex);
            if (json_out)
                out << genus_to_json(rec).dump(2) << "\n";
            else
                print_genus(out, rec, all_rows);
            return 0;
        }

        if (*c_verify) {
            LoadedComplex lc = read_complex(file, in);
            if (*m_opt) asserted_m = m_value;
            return run_verify(out, lc.complex, asserted_m);
        }

        if (*c_pi1) {
            LoadedComplex lc = read_complex(file, in);
            std::optional<std::pair<int, int>> pair;
            if (set_arg) {
                const auto colors = parse_color_list(*set_arg);
                if (colors.size() != 2) fail("BadArity", "--set needs exactly two colors");
                pair = {colors[0], colors[1]};
            }
            const RankBounds rb = rank_bounds(lc.complex, pair);
            if (json_out)
                out << rank_bounds_to_json(rb).dump(2) << "\n";
            else
                print_pi1(out, rb);
            return 0;
        }

        if (*c_generate) {
            if (!*c_octa) fail("Usage", "generate needs a shape subcommand");
            out << complex_to_json(octahedral_sphere(dim)).dump(2) << "\n";
            return 0;
        }

        if (*c_connsum) {
            // grammar: A.json --facet i B.json --facet j
            std::vector<std::string> files;
            std::vector<std::size_t> handles;
            const auto rest = c_connsum->remaining();
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (rest[i] == "--facet") {
                    if (i + 1 >= rest.size() || files.size() != handles.size() + 1)
                        fail("Usage", "--facet must follow a file and carry an index");
                    handles.push_back(std::stoul(rest[++i]));
                } else {
                    if (files.size() != handles.size())
                        fail("Usage", "each file needs a --facet index before the next");
                    files.push_back(rest[i]);
                }
            }
            if (files.size() != 2 || handles.size() != 2)
                fail("Usage", "expected: connsum A.json --facet i B.json --facet j");
            LoadedComplex a = read_complex(files[0], in);
            LoadedComplex b = read_complex(files[1], in);
            out << complex_to_json(connected_sum(a.complex, handles[0], b.complex,
                                                 handles[1]))
                       .dump(2)
                << "\n";
            return 0;
        }

        if (*c_report) {
            LoadedComplex lc = read_complex(file, in);
            if (*report_m_opt) asserted_m = report_m_value;
            const nlohmann::json doc = full_report(lc.complex, lc.bytes, asserted_m);
            if (json_out)
                out << doc.dump(2) << "\n";
            else
                print_report_text(out, doc);
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == "CrossCheckFailed" ? 1 : 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace cli
}  // namespace balgen
