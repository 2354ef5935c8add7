// ctm: command-line front end for the colored-graph toolkit.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ctm/automorphisms.hpp"
#include "ctm/boundary.hpp"
#include "ctm/canonical.hpp"
#include "ctm/enumeration.hpp"
#include "ctm/graph.hpp"
#include "ctm/invariants.hpp"
#include "ctm/io.hpp"
#include "ctm/pi1.hpp"
#include "ctm/realization.hpp"
#include "ctm/surgery.hpp"
#include "ctm/wti.hpp"

using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ctm::ColoredGraph load_closed(const std::string& path) { return ctm::parse_closed(slurp(path)); }

ctm::AnyGraph load_any(const std::string& path) { return ctm::parse_graph_document(slurp(path)); }

json reparse(const std::string& serialized) { return json::parse(serialized); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int run(CLI::App& app, int argc, char** argv) {
    app.require_subcommand(1);
    app.fallthrough();
    bool json_output = false;
    app.add_flag("--json", json_output, "machine-readable output");

    std::string file, file2, out_file;
    std::string cache_dir = std::getenv("CTM_CACHE_DIR") ? std::getenv("CTM_CACHE_DIR") : "";
    int color = 1, white1 = 0, white2 = 0, rank = 3, vertices = 2, order = 2, jobs = 0;
    int drop_gen = -1, drop_rel = -1;
    bool connected = false, count_only = false, want_pretzel = false, serial = false;
    std::string model_name = "phi4";
    std::string drop_colors = "1,2";

    auto* c_validate = app.add_subcommand("validate", "check a graph document");
    c_validate->add_option("file", file)->required();

    auto* c_boundary = app.add_subcommand("boundary", "boundary graph of an open graph");
    c_boundary->add_option("file", file)->required();

    auto* c_degree = app.add_subcommand("degree", "Gurau degree and jacket genera");
    c_degree->add_option("file", file)->required();

    auto* c_jackets = app.add_subcommand("jackets", "per-jacket face counts and genera");
    c_jackets->add_option("file", file)->required();

    auto* c_faces = app.add_subcommand("faces", "face counts per color pair");
    c_faces->add_option("file", file)->required();

    auto* c_aut = app.add_subcommand("aut", "colored automorphism group");
    c_aut->add_option("file", file)->required();

    auto* c_connsum = app.add_subcommand("connsum", "connected sum along same-colored edges");
    c_connsum->add_option("file1", file)->required();
    c_connsum->add_option("file2", file2)->required();
    c_connsum->add_option("--color", color, "edge color")->required();
    c_connsum->add_option("--white1", white1, "white endpoint in the first graph");
    c_connsum->add_option("--white2", white2, "white endpoint in the second graph");

    auto* c_remove = app.add_subcommand("remove-edge", "dipole removal at an edge");
    c_remove->add_option("file", file)->required();
    c_remove->add_option("--color", color)->required();
    c_remove->add_option("--white", white1);

    auto* c_cone = app.add_subcommand("cone", "add an external leg at every vertex");
    c_cone->add_option("file", file)->required();

    auto* c_realize =
        app.add_subcommand("realize", "quartic-model Feynman graph with the given boundary");
    c_realize->add_option("file", file)->required();

    auto* c_sep = app.add_subcommand("separatrix", "the 4-leg separating gadget");
    c_sep->add_option("--rank", rank)->required();
    c_sep->add_flag("--pretzel", want_pretzel, "emit the closed pretzel instead");

    auto* c_enum = app.add_subcommand("enumerate", "isomorphism classes with a given vertex count");
    c_enum->add_option("--colors", rank)->required();
    c_enum->add_option("--vertices", vertices, "vertex count 2p")->required();
    c_enum->add_flag("--connected", connected);
    c_enum->add_flag("--count-only", count_only);
    c_enum->add_flag("--serial", serial, "use the serial reference kernel");
    c_enum->add_option("--jobs", jobs, "worker threads (0 = all)");
    c_enum->add_option("--out", out_file, "write the graph list to a file");
    c_enum->add_option("--cache-dir", cache_dir, "cache directory (default $CTM_CACHE_DIR)");

    auto* c_pi1 = app.add_subcommand("pi1", "fundamental-group presentation (crystallizations)");
    c_pi1->add_option("file", file)->required();
    c_pi1->add_option("--drop-colors", drop_colors, "the two colors i,j of the cycle bubbles");
    c_pi1->add_option("--drop-generator", drop_gen);
    c_pi1->add_option("--drop-relation", drop_rel);

    auto* c_abel = app.add_subcommand("abelianize", "abelianized fundamental group");
    c_abel->add_option("file", file)->required();
    c_abel->add_option("--drop-colors", drop_colors);

    auto* c_y = app.add_subcommand("wti-y", "singular Ward-Takahashi terms");
    c_y->add_option("--model", model_name)->check(CLI::IsMember({"phi4"}));
    c_y->add_option("--rank", rank)->required();
    c_y->add_option("--order", order, "maximal boundary vertex count 2K")->required();
    c_y->add_option("--color", color, "the broken color a")->required();

    auto* c_fe = app.add_subcommand("fe-terms", "free-energy boundary expansion");
    c_fe->add_option("--model", model_name)->check(CLI::IsMember({"phi4"}));
    c_fe->add_option("--rank", rank)->required();
    c_fe->add_option("--order", order)->required();

    auto* c_sde = app.add_subcommand("sde-terms", "two-point equation term inventory");
    c_sde->add_option("--rank", rank)->required();

    auto* c_dot = app.add_subcommand("dot", "graphviz rendering of a graph document");
    c_dot->add_option("file", file)->required();

    app.parse(argc, argv);

    if (c_validate->parsed()) {
        ctm::AnyGraph g = load_any(file);
        ctm::ValidityReport r = std::visit([](const auto& gg) { return ctm::validate(gg); }, g);
        if (json_output) {
            emit(json{{"ok", r.ok}, {"violations", r.violations}});
        } else if (r.ok) {
            std::cout << "valid\n";
        } else {
            for (const std::string& v : r.violations) std::cout << v << "\n";
        }
        return r.ok ? 0 : 1;
    }
    if (c_boundary->parsed()) {
        ctm::BoundaryResult b = ctm::boundary(ctm::parse_open(slurp(file)));
        if (json_output)
            emit(json{{"boundary", reparse(ctm::serialize(b.graph))},
                      {"white_leg", b.white_leg},
                      {"black_leg", b.black_leg},
                      {"canonical", ctm::canonical_key(b.graph)}});
        else
            std::cout << ctm::serialize(b.graph) << "\n";
        return 0;
    }
    if (c_degree->parsed()) {
        ctm::ColoredGraph g = load_closed(file);
        ctm::DegreeReport r = ctm::degree_report(g);
        if (json_output) {
            emit(json{{"omega", r.omega},
                      {"jackets", r.jacket_genera},
                      {"faces", r.face_total},
                      {"melon", r.omega == 0},
                      {"amplitude_exponent", ctm::amplitude_exponent(g).str()}});
        } else {
            std::cout << "omega = " << r.omega << "; jackets:";
            for (size_t i = 0; i < r.jacket_genera.size(); ++i)
                std::cout << (i ? "," : " ") << r.jacket_genera[i];
            std::cout << "\n";
        }
        return 0;
    }
    if (c_jackets->parsed()) {
        json arr = json::array();
        for (const ctm::JacketReport& j : ctm::jackets(load_closed(file))) {
            if (json_output) {
                arr.push_back(json{{"cycle", j.cycle},
                                   {"faces", j.face_count},
                                   {"chi", j.euler_characteristic},
                                   {"genus", j.genus}});
            } else {
                std::cout << "(";
                for (size_t i = 0; i < j.cycle.size(); ++i)
                    std::cout << (i ? " " : "") << j.cycle[i];
                std::cout << "): faces=" << j.face_count << " chi=" << j.euler_characteristic
                          << " genus=" << j.genus << "\n";
            }
        }
        if (json_output) emit(arr);
        return 0;
    }
    if (c_faces->parsed()) {
        ctm::FaceReport r = ctm::faces(load_closed(file));
        if (json_output) {
            json arr = json::array();
            for (const auto& [pair, n] : r.per_pair)
                arr.push_back(json{{"colors", {pair.first, pair.second}}, {"count", n}});
            emit(json{{"pairs", arr}, {"total", r.total}});
        } else {
            for (const auto& [pair, n] : r.per_pair)
                std::cout << "{" << pair.first << "," << pair.second << "}: " << n << "\n";
            std::cout << "total: " << r.total << "\n";
        }
        return 0;
    }
    if (c_aut->parsed()) {
        ctm::AutGroup a = ctm::aut_group(load_closed(file));
        if (json_output) {
            emit(json{{"order", a.order}, {"generators", a.generators}, {"elements", a.elements}});
        } else {
            std::cout << "order = " << a.order << "\n";
            for (const ctm::Perm& g : a.generators) {
                std::cout << "generator:";
                for (int v : g) std::cout << " " << v;
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (c_connsum->parsed()) {
        ctm::AnyGraph a = load_any(file), b = load_any(file2);
        ctm::EdgeRef e{color, white1}, f{color, white2};
        if (std::holds_alternative<ctm::ColoredGraph>(a) &&
            std::holds_alternative<ctm::ColoredGraph>(b)) {
            std::cout << ctm::serialize(ctm::connected_sum(std::get<ctm::ColoredGraph>(a), e,
                                                           std::get<ctm::ColoredGraph>(b), f))
                      << "\n";
        } else if (std::holds_alternative<ctm::OpenFeynmanGraph>(a) &&
                   std::holds_alternative<ctm::OpenFeynmanGraph>(b)) {
            std::cout << ctm::serialize(ctm::connected_sum(std::get<ctm::OpenFeynmanGraph>(a), e,
                                                           std::get<ctm::OpenFeynmanGraph>(b), f))
                      << "\n";
        } else {
            throw std::runtime_error("connsum needs two documents of the same kind");
        }
        return 0;
    }
    if (c_remove->parsed()) {
        ctm::DipoleRemoval r = ctm::remove_dipole(load_closed(file), ctm::EdgeRef{color, white1});
        if (json_output) {
            json glued = json::array();
            for (const auto& g : r.glued)
                glued.push_back(json{{"color", g[0]}, {"white", g[1]}, {"black", g[2]}});
            emit(json{{"graph", reparse(ctm::serialize(r.graph))},
                      {"parallel_colors", r.parallel_colors},
                      {"glued", glued}});
        } else {
            std::cout << ctm::serialize(r.graph) << "\n";
        }
        return 0;
    }
    if (c_cone->parsed()) {
        std::cout << ctm::serialize(ctm::cone(load_closed(file))) << "\n";
        return 0;
    }
    if (c_realize->parsed()) {
        ctm::Realization r = ctm::realize(load_closed(file));
        if (json_output)
            emit(json{{"graph", reparse(ctm::serialize(r.graph))},
                      {"white_leg", r.white_leg},
                      {"black_leg", r.black_leg}});
        else
            std::cout << ctm::serialize(r.graph) << "\n";
        return 0;
    }
    if (c_sep->parsed()) {
        std::cout << ctm::serialize(want_pretzel ? ctm::pretzel(rank).graph
                                                 : ctm::separatrix(rank).graph)
                  << "\n";
        return 0;
    }
    if (c_enum->parsed()) {
        if (vertices % 2) throw std::runtime_error("vertex count must be even");
        ctm::EnumerationRequest req;
        req.rank = rank;
        req.half_order = vertices / 2;
        req.connected_only = connected;
        req.count_only = count_only && out_file.empty();
        req.jobs = jobs;
        ctm::EnumerationResult r = serial ? ctm::enumerate_serial(req)
                                   : !cache_dir.empty() && !req.count_only
                                       ? ctm::enumerate_cached(req, cache_dir)
                                       : ctm::enumerate_graphs(req);
        if (count_only) {
            std::cout << r.count << "\n";
        } else if (out_file.empty()) {
            std::cout << ctm::serialize_graph_list(r.graphs) << "\n";
        } else {
            std::ofstream os(out_file);
            os << ctm::serialize_graph_list(r.graphs) << "\n";
            std::cout << r.count << "\n";
        }
        return 0;
    }
    if (c_pi1->parsed() || c_abel->parsed()) {
        int i, j;
        if (std::sscanf(drop_colors.c_str(), "%d,%d", &i, &j) != 2)
            throw std::runtime_error("--drop-colors expects i,j");
        ctm::ColoredGraph g = load_closed(file);
        ctm::GagliardiOptions opt;
        opt.drop_generator = drop_gen;
        opt.drop_relation = drop_rel;
        ctm::GroupPresentation p = ctm::gagliardi_presentation(g, i, j, opt);
        if (c_abel->parsed()) {
            ctm::AbelianInvariants inv = ctm::abelianization(p);
            if (json_output) {
                emit(json{{"free_rank", inv.free_rank}, {"torsion", inv.torsion}});
            } else {
                std::cout << "free rank " << inv.free_rank << "; torsion:";
                for (long long t : inv.torsion) std::cout << " " << t;
                std::cout << "\n";
            }
        } else if (json_output) {
            emit(json{{"generators", p.generators}, {"relators", p.relators}});
        } else {
            std::cout << "generators: " << p.generators << "\n";
            for (const auto& rel : p.relators) {
                std::cout << "relator:";
                for (int letter : rel) std::cout << " " << letter;
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (c_y->parsed()) {
        ctm::InteractionModel m = ctm::InteractionModel::phi4_melonic(rank);
        for (const ctm::YTerm& t : ctm::y_expansion(m, color, order))
            std::cout << ctm::render(t) << "\n";
        return 0;
    }
    if (c_fe->parsed()) {
        ctm::InteractionModel m = ctm::InteractionModel::phi4_melonic(rank);
        for (const ctm::ExpansionTerm& t : ctm::free_energy_terms(m, order))
            std::cout << t.coefficient.str() << " B=" << t.key << " order=" << t.order << "\n";
        return 0;
    }
    if (c_sde->parsed()) {
        for (const ctm::SDETerm& t : ctm::sde_two_point_terms(rank).terms)
            std::cout << t.render() << "\n";
        return 0;
    }
    if (c_dot->parsed()) {
        ctm::AnyGraph g = load_any(file);
        std::cout << std::visit([](const auto& gg) { return ctm::to_dot(gg); }, g);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of edge-colored bipartite graphs for tensor models"};
    try {
        return run(app, argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
